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

#include "codemix/translit.hpp"

#include <algorithm>

#include "codemix/log.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Lexicon: return "lexicon";
    case Provenance::Model: return "model";
    case Provenance::Echo: return "echo";
    case Provenance::Punct: return "punct";
    case Provenance::Translated: return "translated";
  }
  return "";
}

std::optional<std::string> lexicon_lookup(const std::string& word,
                                          const ParallelLexicon& pl,
                                          const ParallelLexicon& bn_trans) {
  const auto itrans = pl.lookup(word);
  if (!itrans) return std::nullopt;
  const auto native = bn_trans.lookup(*itrans);
  if (!native) {
    log_warn("lexicon chain broken: '" + word + "' -> '" + *itrans +
             "' missing from " + bn_trans.name());
    return std::nullopt;
  }
  return native;
}

int translit_max_decode_len(const std::string& word) {
  const size_t cps = decode_utf8(word).size();
  return static_cast<int>(3 * cps + 5);
}

TranslitTrainResult train_translit(const ParallelLexicon& bn_trans,
                                   const TranslitTrainSpec& spec) {
  if (bn_trans.empty()) {
    raise(ErrorKind::DataError, "cannot train on an empty lexicon");
  }

  // Deterministic pair order regardless of hash-map iteration.
  std::vector<std::pair<std::string, std::string>> entries(
      bn_trans.entries().begin(), bn_trans.entries().end());
  std::sort(entries.begin(), entries.end());

  std::vector<std::string> sources, targets;
  for (const auto& [key, value] : entries) {
    sources.push_back(key);
    targets.push_back(value);
  }
  const CharVocab src_vocab = build_char_vocab(sources);
  const CharVocab tgt_vocab = build_char_vocab(targets);

  TranslitTrainResult result;
  result.model.net = make_seq2seq<real_t>(
      src_vocab, tgt_vocab, {spec.latent_dim}, /*attention=*/false,
      EmbeddingMode::OneHot, 0, spec.seed);

  std::vector<IndexPair> pairs;
  pairs.reserve(entries.size());
  for (const auto& [key, value] : entries) {
    pairs.push_back({src_vocab.encode(key), tgt_vocab.encode(value)});
  }
  result.log = train_seq2seq(result.model.net, pairs, spec.to_train_config());

  size_t exact = 0;
  size_t char_hits = 0;
  size_t char_total = 0;
  for (const auto& [key, value] : entries) {
    const std::vector<int> decoded = greedy_decode(
        result.model.net, src_vocab.encode(key), translit_max_decode_len(key));
    const std::string predicted = tgt_vocab.decode(decoded);
    if (predicted == value) ++exact;
    const std::u32string a = decode_utf8(predicted);
    const std::u32string b = decode_utf8(value);
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (a[i] == b[i]) ++char_hits;
    }
    char_total += std::max(a.size(), b.size());
  }
  result.sequence_accuracy =
      static_cast<double>(exact) / static_cast<double>(entries.size());
  result.char_accuracy = char_total == 0
                             ? 0.0
                             : static_cast<double>(char_hits) /
                                   static_cast<double>(char_total);
  return result;
}

TranslitWord back_transliterate(const std::string& word,
                                const ParallelLexicon& pl,
                                const ParallelLexicon& bn_trans,
                                const TranslitModel& model) {
  if (word.empty()) {
    raise(ErrorKind::EmptyInput, "back_transliterate: empty word");
  }
  if (const auto native = lexicon_lookup(word, pl, bn_trans)) {
    return {*native, Provenance::Lexicon};
  }
  const std::string norm = ParallelLexicon::normalize_key(word);
  const std::vector<int> decoded =
      greedy_decode(model.net, model.net.src_vocab.encode(norm),
                    translit_max_decode_len(norm));
  const std::string native = model.net.tgt_vocab.decode(decoded);
  if (native.empty()) {
    log_warn("back_transliterate: empty decode for '" + word + "', echoing");
    return {word, Provenance::Echo};
  }
  return {native, Provenance::Model};
}

std::vector<TranslitWord> transliterate_segment(const Segment& segment,
                                                const ParallelLexicon& pl,
                                                const ParallelLexicon& bn_trans,
                                                const TranslitModel& model) {
  if (segment.tag != LangTag::Bn) {
    raise(ErrorKind::RoutingError,
          "transliterate_segment got a non-Bn segment");
  }
  std::vector<TranslitWord> out;
  out.reserve(segment.tokens.size());
  for (const TaggedToken& t : segment.tokens) {
    if (t.token.kind == TokenKind::Punct) {
      out.push_back({t.token.surface, Provenance::Punct});
    } else {
      out.push_back(back_transliterate(t.token.surface, pl, bn_trans, model));
    }
  }
  return out;
}

}  // namespace codemix
