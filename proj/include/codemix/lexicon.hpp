// Copyright 2026 Codemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CODEMIX_LEXICON_HPP_
#define CODEMIX_LEXICON_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace codemix {

// Two-column word map with normalized (lowercase, NFC) keys. Duplicate
// keys after normalization keep the first entry and are logged.
class ParallelLexicon {
 public:
  ParallelLexicon() = default;
  ParallelLexicon(std::string name, std::string direction)
      : name_(std::move(name)), direction_(std::move(direction)) {}

  static ParallelLexicon load(const std::string& path, std::string name,
                              std::string direction);

  static std::string normalize_key(const std::string& word);

  // Returns false on a duplicate key (entry not replaced).
  bool insert(const std::string& key, const std::string& value);

  std::optional<std::string> lookup(const std::string& word) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::string& name() const { return name_; }
  const std::string& direction() const { return direction_; }
  const std::unordered_map<std::string, std::string>& entries() const {
    return entries_;
  }

 private:
  std::string name_;
  std::string direction_;
  std::unordered_map<std::string, std::string> entries_;
};

}  // namespace codemix

#endif  // CODEMIX_LEXICON_HPP_
