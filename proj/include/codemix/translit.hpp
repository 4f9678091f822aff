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

#ifndef CODEMIX_TRANSLIT_HPP_
#define CODEMIX_TRANSLIT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "codemix/lexicon.hpp"
#include "codemix/seq2seq.hpp"
#include "codemix/tagger.hpp"
#include "codemix/train.hpp"

namespace codemix {

// Roman-script Bengali -> native script. The lexicon route chains
// PL (roman -> ITRANS) into BN_TRANS (ITRANS -> native); misses fall back
// to a character seq2seq trained on BN_TRANS itself.
struct TranslitModel {
  Seq2SeqParams net;
};

struct TranslitTrainSpec {
  int latent_dim = 128;
  int epochs = 100;
  int batch_size = 64;
  double learning_rate = 1e-3;
  uint64_t seed = 0;

  TrainConfig to_train_config() const {
    TrainConfig config;
    config.epochs = epochs;
    config.batch_size = batch_size;
    config.optimizer = OptimizerKind::RmsProp;
    config.loss = LossKind::CategoricalCE;
    config.learning_rate = learning_rate;
    config.seed = seed;
    return config;
  }
};

enum class Provenance { Lexicon, Model, Echo, Punct, Translated };

const char* provenance_name(Provenance p);

struct TranslitWord {
  std::string text;
  Provenance provenance = Provenance::Lexicon;
};

// PL hit chained through BN_TRANS; any miss yields nothing (broken chains
// are logged, not raised).
std::optional<std::string> lexicon_lookup(const std::string& word,
                                          const ParallelLexicon& pl,
                                          const ParallelLexicon& bn_trans);

struct TranslitTrainResult {
  TranslitModel model;
  TrainLog log;
  double sequence_accuracy = 0.0;   // exact-match over training entries
  double char_accuracy = 0.0;       // per-character over training entries
};

// Trains key -> value (ITRANS/Roman -> native) on the BN_TRANS entries.
TranslitTrainResult train_translit(const ParallelLexicon& bn_trans,
                                   const TranslitTrainSpec& spec);

// Lexicon route first, model fallback for misses; an empty decode echoes
// the input so token alignment survives.
TranslitWord back_transliterate(const std::string& word,
                                const ParallelLexicon& pl,
                                const ParallelLexicon& bn_trans,
                                const TranslitModel& model);

// Word-by-word transliteration of a Bn segment; Punct passes through.
std::vector<TranslitWord> transliterate_segment(const Segment& segment,
                                                const ParallelLexicon& pl,
                                                const ParallelLexicon& bn_trans,
                                                const TranslitModel& model);

int translit_max_decode_len(const std::string& word);

}  // namespace codemix

#endif  // CODEMIX_TRANSLIT_HPP_
