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

#ifndef CODEMIX_TRAIN_HPP_
#define CODEMIX_TRAIN_HPP_

#include <vector>

#include "codemix/classifier.hpp"
#include "codemix/optim.hpp"
#include "codemix/seq2seq.hpp"

namespace codemix {

struct TrainLog {
  std::vector<double> epoch_loss;
};

// Seeded, single-threaded mini-batch training. Runs are bit-reproducible
// for a fixed (model init, dataset order, config). On a non-finite loss
// the NumericalError propagates and the model keeps the parameters from
// the last completed step.
TrainLog train_classifier(SeqClassifierParams& model,
                          const std::vector<ClassifierSample>& data,
                          const TrainConfig& config);

TrainLog train_seq2seq(Seq2SeqParams& model,
                       const std::vector<IndexPair>& pairs,
                       const TrainConfig& config);

}  // namespace codemix

#endif  // CODEMIX_TRAIN_HPP_
