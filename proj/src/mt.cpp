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

#include "codemix/mt.hpp"

#include "codemix/log.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

int mt_max_decode_len(const std::string& text) {
  return static_cast<int>(3 * decode_utf8(text).size() + 10);
}

MtTrainResult train_mt(const std::vector<SentencePair>& pairs,
                       const MtTrainSpec& spec) {
  if (pairs.empty()) {
    raise(ErrorKind::EmptyInput, "train_mt: no sentence pairs");
  }

  MtTrainResult result;
  std::vector<SentencePair> kept;
  for (const SentencePair& pair : pairs) {
    const size_t src_len = decode_utf8(pair.source).size();
    const size_t tgt_len = decode_utf8(pair.target).size();
    if (src_len == 0 || tgt_len == 0) {
      raise(ErrorKind::DataError, "train_mt: empty side in sentence pair");
    }
    if (src_len > static_cast<size_t>(spec.max_chars) ||
        tgt_len > static_cast<size_t>(spec.max_chars)) {
      ++result.skipped_too_long;
      continue;
    }
    kept.push_back(pair);
  }
  if (kept.empty()) {
    raise(ErrorKind::DataError,
          "train_mt: all " + std::to_string(pairs.size()) +
              " pairs exceed max_chars=" + std::to_string(spec.max_chars));
  }
  if (result.skipped_too_long > 0) {
    log_warn("train_mt: skipped " + std::to_string(result.skipped_too_long) +
             " over-length pair(s)");
  }

  std::vector<std::string> sources, targets;
  for (const SentencePair& pair : kept) {
    sources.push_back(pair.source);
    targets.push_back(pair.target);
  }
  const CharVocab src_vocab = build_char_vocab(sources);
  const CharVocab tgt_vocab = build_char_vocab(targets);

  result.model.net = make_seq2seq<real_t>(
      src_vocab, tgt_vocab, {spec.latent_dim}, /*attention=*/true,
      EmbeddingMode::OneHot, 0, spec.seed);

  std::vector<IndexPair> indexed;
  indexed.reserve(kept.size());
  for (const SentencePair& pair : kept) {
    indexed.push_back({src_vocab.encode(pair.source),
                       tgt_vocab.encode(pair.target)});
  }
  result.log = train_seq2seq(result.model.net, indexed, spec.to_train_config());

  size_t exact = 0;
  for (const SentencePair& pair : kept) {
    if (translate_segment(result.model, pair.source) == pair.target) ++exact;
  }
  result.sequence_accuracy =
      static_cast<double>(exact) / static_cast<double>(kept.size());
  return result;
}

std::string translate_segment(const MtModel& model, const std::string& text) {
  if (text.empty()) {
    raise(ErrorKind::EmptyInput, "translate_segment: empty text");
  }
  const std::vector<int> decoded =
      greedy_decode(model.net, model.net.src_vocab.encode(text),
                    mt_max_decode_len(text));
  return model.net.tgt_vocab.decode(decoded);
}

}  // namespace codemix
