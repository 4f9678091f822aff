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

#ifndef CODEMIX_MT_HPP_
#define CODEMIX_MT_HPP_

#include <string>
#include <vector>

#include "codemix/seq2seq.hpp"
#include "codemix/text.hpp"
#include "codemix/train.hpp"

namespace codemix {

// Fully character-level translation: one-hot char input, encoder-decoder
// with scaled dot-product attention during decoding.
struct MtModel {
  Seq2SeqParams net;
};

struct MtTrainSpec {
  int latent_dim = 128;
  int epochs = 100;
  int batch_size = 64;
  double learning_rate = 1e-3;
  int max_chars = 200;  // longer pairs are skipped and counted
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

struct MtTrainResult {
  MtModel model;
  TrainLog log;
  size_t skipped_too_long = 0;
  double sequence_accuracy = 0.0;  // greedy exact-match on kept pairs
};

MtTrainResult train_mt(const std::vector<SentencePair>& pairs,
                       const MtTrainSpec& spec);

// Greedy decode; may return an empty string (callers flag and echo).
// Characters outside the training vocabulary map to UNK.
std::string translate_segment(const MtModel& model, const std::string& text);

int mt_max_decode_len(const std::string& text);

}  // namespace codemix

#endif  // CODEMIX_MT_HPP_
