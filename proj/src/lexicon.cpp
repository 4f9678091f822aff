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

#include "codemix/lexicon.hpp"

#include "codemix/error.hpp"
#include "codemix/log.hpp"
#include "codemix/text.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

std::string ParallelLexicon::normalize_key(const std::string& word) {
  return nfc_utf8(to_lower_ascii(word));
}

bool ParallelLexicon::insert(const std::string& key, const std::string& value) {
  if (key.empty() || value.empty()) {
    raise(ErrorKind::FormatError, name_ + ": empty lexicon entry");
  }
  const auto [it, inserted] = entries_.emplace(normalize_key(key), value);
  return inserted;
}

std::optional<std::string> ParallelLexicon::lookup(
    const std::string& word) const {
  const auto it = entries_.find(normalize_key(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

ParallelLexicon ParallelLexicon::load(const std::string& path,
                                      std::string name,
                                      std::string direction) {
  ParallelLexicon lexicon(std::move(name), std::move(direction));
  size_t duplicates = 0;
  for (const auto& [key, value] : load_tsv_pairs(path)) {
    if (!lexicon.insert(key, value)) ++duplicates;
  }
  if (duplicates > 0) {
    log_warn(lexicon.name() + ": ignored " + std::to_string(duplicates) +
             " duplicate key(s) in " + path);
  }
  return lexicon;
}

}  // namespace codemix
