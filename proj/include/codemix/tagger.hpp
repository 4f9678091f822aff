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

#ifndef CODEMIX_TAGGER_HPP_
#define CODEMIX_TAGGER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "codemix/classifier.hpp"
#include "codemix/optim.hpp"
#include "codemix/text.hpp"
#include "codemix/train.hpp"

namespace codemix {

// Word-level Bn/En classifier: char embedding of dim 15 into LSTM layers
// of 35 and 25 units and a sigmoid output, i.e. a 15-35-25-1 stack.
// Label convention: Bn = 1, En = 0.
constexpr int kTaggerEmbedDim = 15;

struct TaggerModel {
  SeqClassifierParams net;
  double threshold = 0.5;  // Bn iff score >= threshold
};

struct TaggerTrainSpec {
  int epochs = 500;
  int batch_size = 256;
  double learning_rate = 1e-3;
  uint64_t seed = 0;
  double threshold = 0.5;

  TrainConfig to_train_config() const {
    TrainConfig config;
    config.epochs = epochs;
    config.batch_size = batch_size;
    config.optimizer = OptimizerKind::Adam;
    config.loss = LossKind::BinaryCE;
    config.learning_rate = learning_rate;
    config.seed = seed;
    return config;
  }
};

// Lowercases, folds digits to '#', NFC-normalizes.
std::string normalize_word_for_tagging(const std::string& surface);

struct TaggerTrainResult {
  TaggerModel model;
  TrainLog log;
  double train_accuracy = 0.0;
  size_t dropped_conflicts = 0;
};

// Deduplicates (majority label wins, ties dropped) and trains. Both
// classes must be present.
TaggerTrainResult train_tagger(
    const std::vector<std::pair<std::string, LangTag>>& words,
    const TaggerTrainSpec& spec);

double tagger_score(const TaggerModel& model, const std::string& surface);

TaggedToken tag_word(const TaggerModel& model, const Token& word);

// Word tokens are classified; Punct tokens inherit the tag of the
// preceding word (leading punctuation inherits forward).
std::vector<TaggedToken> tag_sentence(const TaggerModel& model,
                                      const std::vector<Token>& tokens);

// Maximal same-tag runs, in order.
std::vector<Segment> segment(const std::vector<TaggedToken>& tagged);

}  // namespace codemix

#endif  // CODEMIX_TAGGER_HPP_
