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

#ifndef CODEMIX_NGRAM_HPP_
#define CODEMIX_NGRAM_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace codemix {

// Add-k smoothed uni/bi/trigram model. Sentences are padded with two <s>
// and one </s> at build time; V counts the distinct content tokens plus
// both boundary symbols.
class NgramLM {
 public:
  static const std::string kBos;
  static const std::string kEos;

  NgramLM() = default;

  static NgramLM build(const std::vector<std::vector<std::string>>& sentences,
                       double k = 1.0);

  // log((count(context, token) + k) / (count(context) + k*V)), natural log;
  // context holds 0..2 tokens.
  double logprob(const std::vector<std::string>& context,
                 const std::string& token) const;

  // Mean per-n-gram log probability of the padded sentence; order 2 or 3.
  double sentence_score(const std::vector<std::string>& tokens,
                        int order) const;

  uint64_t count(const std::vector<std::string>& gram) const;
  size_t vocab_size() const { return vocab_; }
  double smoothing_k() const { return k_; }
  uint64_t total_tokens() const { return total_unigrams_; }

  void save(const std::string& path) const;
  static NgramLM load(const std::string& path);

 private:
  friend class NgramLMIo;

  std::unordered_map<std::string, uint64_t> counts_[3];  // joined keys
  uint64_t total_unigrams_ = 0;
  size_t vocab_ = 0;
  double k_ = 1.0;
};

struct ReorderConfig {
  int max_passes = 1;
  bool enable_bigram_fallback = true;
};

// The non-identity permutations of a 2- or 3-token window; empty when the
// window contains punctuation or the tokens are all equal.
std::vector<std::vector<std::string>> confusion_set(
    const std::vector<std::string>& window);

// Greedy window rescoring: a left-to-right trigram pass applies the best
// strictly-improving window permutation at each position; if that pass
// changes nothing, a bigram pass runs. Output is a permutation of the
// input and never scores worse.
std::vector<std::string> reorder(const NgramLM& lm,
                                 const std::vector<std::string>& tokens,
                                 const ReorderConfig& config = {});

bool is_punct_token(const std::string& token);

}  // namespace codemix

#endif  // CODEMIX_NGRAM_HPP_
