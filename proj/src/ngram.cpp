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

#include "codemix/ngram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "codemix/error.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

const std::string NgramLM::kBos = "<s>";
const std::string NgramLM::kEos = "</s>";

namespace {

constexpr char kSep = '\x1f';

std::string join_gram(const std::vector<std::string>& tokens, size_t begin,
                      size_t len) {
  std::string key;
  for (size_t i = begin; i < begin + len; ++i) {
    if (i > begin) key.push_back(kSep);
    key += tokens[i];
  }
  return key;
}

}  // namespace

NgramLM NgramLM::build(const std::vector<std::vector<std::string>>& sentences,
                       double k) {
  if (sentences.empty()) {
    raise(ErrorKind::DataError, "build_lm: empty corpus");
  }
  if (k <= 0.0) {
    raise(ErrorKind::ConfigError, "smoothing constant must be positive");
  }
  NgramLM lm;
  lm.k_ = k;
  std::set<std::string> content;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) {
      raise(ErrorKind::DataError, "build_lm: empty sentence in corpus");
    }
    std::vector<std::string> padded;
    padded.reserve(sentence.size() + 3);
    padded.push_back(kBos);
    padded.push_back(kBos);
    for (const std::string& token : sentence) {
      content.insert(token);
      padded.push_back(token);
    }
    padded.push_back(kEos);

    for (size_t i = 0; i < padded.size(); ++i) {
      lm.counts_[0][join_gram(padded, i, 1)] += 1;
      if (i + 2 <= padded.size()) lm.counts_[1][join_gram(padded, i, 2)] += 1;
      if (i + 3 <= padded.size()) lm.counts_[2][join_gram(padded, i, 3)] += 1;
    }
    lm.total_unigrams_ += padded.size();
  }
  lm.vocab_ = content.size() + 2;
  return lm;
}

uint64_t NgramLM::count(const std::vector<std::string>& gram) const {
  if (gram.empty() || gram.size() > 3) {
    raise(ErrorKind::ConfigError, "count: gram length must be 1..3");
  }
  const auto& table = counts_[gram.size() - 1];
  const auto it = table.find(join_gram(gram, 0, gram.size()));
  return it == table.end() ? 0 : it->second;
}

double NgramLM::logprob(const std::vector<std::string>& context,
                        const std::string& token) const {
  if (context.size() > 2) {
    raise(ErrorKind::ConfigError, "logprob: context holds at most 2 tokens");
  }
  std::vector<std::string> gram(context);
  gram.push_back(token);
  const uint64_t joint = count(gram);
  const uint64_t ctx =
      context.empty() ? total_unigrams_ : count(context);
  const double v = static_cast<double>(vocab_);
  return std::log((static_cast<double>(joint) + k_) /
                  (static_cast<double>(ctx) + k_ * v));
}

double NgramLM::sentence_score(const std::vector<std::string>& tokens,
                               int order) const {
  if (order != 2 && order != 3) {
    raise(ErrorKind::ConfigError, "sentence_score: order must be 2 or 3");
  }
  if (tokens.empty()) {
    raise(ErrorKind::EmptyInput, "sentence_score: no tokens");
  }
  std::vector<std::string> padded;
  padded.reserve(tokens.size() + static_cast<size_t>(order));
  for (int i = 0; i < order - 1; ++i) padded.push_back(kBos);
  padded.insert(padded.end(), tokens.begin(), tokens.end());
  padded.push_back(kEos);

  double sum = 0.0;
  size_t n = 0;
  for (size_t i = static_cast<size_t>(order - 1); i < padded.size(); ++i) {
    std::vector<std::string> context(
        padded.begin() + static_cast<ptrdiff_t>(i - (order - 1)),
        padded.begin() + static_cast<ptrdiff_t>(i));
    sum += logprob(context, padded[i]);
    ++n;
  }
  return sum / static_cast<double>(n);
}

bool is_punct_token(const std::string& token) {
  if (token.empty()) return false;
  for (char32_t c : decode_utf8(token)) {
    if (!is_punct_char(c)) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> confusion_set(
    const std::vector<std::string>& window) {
  if (window.size() != 2 && window.size() != 3) {
    raise(ErrorKind::ConfigError, "confusion_set: window width must be 2 or 3");
  }
  for (const std::string& token : window) {
    if (is_punct_token(token)) return {};
  }
  std::vector<std::string> sorted(window);
  std::sort(sorted.begin(), sorted.end());
  std::set<std::vector<std::string>> distinct;
  do {
    if (sorted != window) distinct.insert(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return {distinct.begin(), distinct.end()};
}

namespace {

// One left-to-right pass of width `order`; returns the number of applied
// substitutions. Only strictly improving substitutions are applied; score
// ties between candidates break to the lexicographically smallest
// sentence, so the result is unique.
size_t reorder_pass(const NgramLM& lm, std::vector<std::string>& tokens,
                    int order) {
  size_t applied = 0;
  if (tokens.size() < static_cast<size_t>(order)) return 0;
  for (size_t i = 0; i + static_cast<size_t>(order) <= tokens.size(); ++i) {
    const std::vector<std::string> window(
        tokens.begin() + static_cast<ptrdiff_t>(i),
        tokens.begin() + static_cast<ptrdiff_t>(i + order));
    const auto candidates = confusion_set(window);
    if (candidates.empty()) continue;

    const double current = lm.sentence_score(tokens, order);
    double best_score = current;
    std::vector<std::string> best_sentence;
    for (const auto& candidate : candidates) {
      std::vector<std::string> rewritten(tokens);
      std::copy(candidate.begin(), candidate.end(),
                rewritten.begin() + static_cast<ptrdiff_t>(i));
      const double score = lm.sentence_score(rewritten, order);
      if (score > best_score ||
          (score == best_score && !best_sentence.empty() &&
           rewritten < best_sentence)) {
        best_score = score;
        best_sentence = std::move(rewritten);
      }
    }
    if (!best_sentence.empty() && best_score > current) {
      tokens = std::move(best_sentence);
      ++applied;
    }
  }
  return applied;
}

}  // namespace

std::vector<std::string> reorder(const NgramLM& lm,
                                 const std::vector<std::string>& tokens,
                                 const ReorderConfig& config) {
  if (config.max_passes < 1) {
    raise(ErrorKind::ConfigError, "max_passes must be >= 1");
  }
  if (tokens.empty()) {
    raise(ErrorKind::EmptyInput, "reorder: no tokens");
  }
  std::vector<std::string> out(tokens);
  size_t trigram_applied = 0;
  for (int pass = 0; pass < config.max_passes; ++pass) {
    const size_t applied = reorder_pass(lm, out, 3);
    trigram_applied += applied;
    if (applied == 0) break;
  }
  if (trigram_applied == 0 && config.enable_bigram_fallback) {
    for (int pass = 0; pass < config.max_passes; ++pass) {
      if (reorder_pass(lm, out, 2) == 0) break;
    }
  }
  return out;
}

namespace {

using nlohmann::json;

constexpr int kLmFormatVersion = 1;

}  // namespace

void NgramLM::save(const std::string& path) const {
  json doc;
  doc["format_version"] = kLmFormatVersion;
  doc["kind"] = "ngram_lm";
  doc["k"] = k_;
  doc["vocab_size"] = vocab_;
  doc["total_unigrams"] = total_unigrams_;
  for (int n = 0; n < 3; ++n) {
    json table = json::object();
    for (const auto& [key, value] : counts_[n]) table[key] = value;
    doc["counts_" + std::to_string(n + 1)] = std::move(table);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(ErrorKind::IoError, "cannot write " + path);
  }
  out << doc.dump(1, '\t') << '\n';
}

NgramLM NgramLM::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::IoError, "cannot open " + path);
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    raise(ErrorKind::FormatError, path + ": " + e.what());
  }
  if (!doc.contains("format_version") ||
      doc.at("format_version").get<int>() != kLmFormatVersion ||
      doc.value("kind", "") != "ngram_lm") {
    raise(ErrorKind::FormatError, path + ": not a language-model container");
  }
  NgramLM lm;
  lm.k_ = doc.at("k").get<double>();
  lm.vocab_ = doc.at("vocab_size").get<size_t>();
  lm.total_unigrams_ = doc.at("total_unigrams").get<uint64_t>();
  for (int n = 0; n < 3; ++n) {
    for (const auto& [key, value] :
         doc.at("counts_" + std::to_string(n + 1)).items()) {
      lm.counts_[n][key] = value.get<uint64_t>();
    }
  }
  return lm;
}

}  // namespace codemix
