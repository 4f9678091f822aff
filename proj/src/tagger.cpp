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

#include "codemix/tagger.hpp"

#include <map>

#include "codemix/log.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

std::string normalize_word_for_tagging(const std::string& surface) {
  std::u32string cps = nfc(decode_utf8(to_lower_ascii(surface)));
  for (char32_t& c : cps) {
    if (is_digit_char(c)) c = U'#';
  }
  return encode_utf8(cps);
}

TaggerTrainResult train_tagger(
    const std::vector<std::pair<std::string, LangTag>>& words,
    const TaggerTrainSpec& spec) {
  // Dedup after normalization; conflicting labels resolve by majority,
  // exact ties are dropped.
  std::map<std::string, std::pair<int, int>> counts;  // word -> (bn, en)
  for (const auto& [word, tag] : words) {
    const std::string norm = normalize_word_for_tagging(word);
    if (norm.empty()) continue;
    auto& c = counts[norm];
    (tag == LangTag::Bn ? c.first : c.second) += 1;
  }

  std::vector<std::pair<std::string, int>> labeled;  // word -> label (Bn=1)
  size_t dropped = 0;
  for (const auto& [word, c] : counts) {
    if (c.first == c.second) {
      ++dropped;
      log_warn("train_tagger: dropping '" + word +
               "' (conflicting labels, bn=" + std::to_string(c.first) +
               " en=" + std::to_string(c.second) + ")");
      continue;
    }
    if (c.first > 0 && c.second > 0) {
      log_warn("train_tagger: '" + word + "' has conflicting labels, keeping " +
               (c.first > c.second ? "bn" : "en") + " majority");
    }
    labeled.emplace_back(word, c.first > c.second ? 1 : 0);
  }
  if (labeled.empty()) {
    raise(ErrorKind::EmptyInput, "no usable training words");
  }
  size_t n_bn = 0;
  for (const auto& [word, label] : labeled) n_bn += static_cast<size_t>(label);
  if (n_bn == 0 || n_bn == labeled.size()) {
    raise(ErrorKind::DataError, "training data must contain both classes");
  }

  std::vector<std::string> corpus;
  corpus.reserve(labeled.size());
  for (const auto& [word, label] : labeled) corpus.push_back(word);
  const CharVocab vocab = build_char_vocab(corpus);

  TaggerTrainResult result;
  result.dropped_conflicts = dropped;
  result.model.threshold = spec.threshold;
  if (spec.threshold <= 0.0 || spec.threshold >= 1.0) {
    raise(ErrorKind::ConfigError, "threshold must lie in (0, 1)");
  }
  result.model.net =
      make_classifier<real_t>(vocab, kTaggerEmbedDim, {35, 25}, spec.seed);

  std::vector<ClassifierSample> samples;
  samples.reserve(labeled.size());
  for (const auto& [word, label] : labeled) {
    samples.push_back({vocab.encode(word), label});
  }
  result.log = train_classifier(result.model.net, samples, spec.to_train_config());

  size_t correct = 0;
  for (const auto& sample : samples) {
    const double score =
        static_cast<double>(classifier_score(result.model.net, sample.chars));
    const int predicted = score >= spec.threshold ? 1 : 0;
    if (predicted == sample.label) ++correct;
  }
  result.train_accuracy =
      static_cast<double>(correct) / static_cast<double>(samples.size());
  return result;
}

double tagger_score(const TaggerModel& model, const std::string& surface) {
  const std::string norm = normalize_word_for_tagging(surface);
  if (norm.empty()) {
    raise(ErrorKind::EmptyInput, "tagger_score: empty word");
  }
  return static_cast<double>(
      classifier_score(model.net, model.net.vocab.encode(norm)));
}

TaggedToken tag_word(const TaggerModel& model, const Token& word) {
  if (word.kind != TokenKind::Word) {
    raise(ErrorKind::KindError, "tag_word expects a Word token, got '" +
                                    word.surface + "'");
  }
  const double score = tagger_score(model, word.surface);
  TaggedToken out;
  out.token = word;
  out.score = score;
  out.tag = score >= model.threshold ? LangTag::Bn : LangTag::En;
  return out;
}

std::vector<TaggedToken> tag_sentence(const TaggerModel& model,
                                      const std::vector<Token>& tokens) {
  if (tokens.empty()) {
    raise(ErrorKind::EmptyInput, "tag_sentence: no tokens");
  }
  bool has_word = false;
  for (const Token& t : tokens) has_word |= (t.kind == TokenKind::Word);
  if (!has_word) {
    raise(ErrorKind::DataError, "tag_sentence: sentence is all punctuation");
  }

  std::vector<TaggedToken> out(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::Word) {
      out[i] = tag_word(model, tokens[i]);
    } else {
      out[i].token = tokens[i];
    }
  }
  // Punct inherits from the preceding word; leading punctuation takes the
  // tag of the first word after it.
  size_t first_word = 0;
  while (tokens[first_word].kind != TokenKind::Word) ++first_word;
  for (size_t i = 0; i < first_word; ++i) {
    out[i].tag = out[first_word].tag;
    out[i].score = out[first_word].score;
  }
  for (size_t i = first_word + 1; i < out.size(); ++i) {
    if (tokens[i].kind != TokenKind::Word) {
      out[i].tag = out[i - 1].tag;
      out[i].score = out[i - 1].score;
    }
  }
  return out;
}

std::vector<Segment> segment(const std::vector<TaggedToken>& tagged) {
  if (tagged.empty()) {
    raise(ErrorKind::EmptyInput, "segment: no tagged tokens");
  }
  std::vector<Segment> segments;
  for (const TaggedToken& t : tagged) {
    if (segments.empty() || segments.back().tag != t.tag) {
      segments.push_back({{t}, t.tag});
    } else {
      segments.back().tokens.push_back(t);
    }
  }
  return segments;
}

}  // namespace codemix
