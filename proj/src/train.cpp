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

#include "codemix/train.hpp"

#include <cmath>
#include <numeric>

#include "codemix/log.hpp"
#include "codemix/rng.hpp"

namespace codemix {

namespace {

// Shuffle stream kept separate from init so reseeding one does not move
// the other.
constexpr uint64_t kShuffleStream = 0x9E3779B97F4A7C15ull;

template <class Model, class Sample, class LossFn>
TrainLog train_impl(Model& model, const std::vector<Sample>& data,
                    const TrainConfig& config, LossFn&& loss_and_grads) {
  config.validate();
  if (data.empty()) {
    raise(ErrorKind::EmptyInput, "training data is empty");
  }

  Model grads = zeros_like(model);
  ParamList params = param_tensors(model);
  ParamList grad_params = param_tensors(grads);
  OptimizerState state;
  state.init_like(params);

  Rng shuffle_rng(config.seed ^ kShuffleStream);
  std::vector<size_t> order(data.size());
  std::iota(order.begin(), order.end(), size_t{0});

  TrainLog log;
  log.epoch_loss.reserve(static_cast<size_t>(config.epochs));
  std::vector<Sample> batch;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.shuffle) shuffle_rng.shuffle(order);
    double epoch_sum = 0.0;
    size_t batches = 0;
    for (size_t begin = 0; begin < order.size();
         begin += static_cast<size_t>(config.batch_size)) {
      const size_t end =
          std::min(order.size(), begin + static_cast<size_t>(config.batch_size));
      batch.assign(end - begin, Sample{});
      for (size_t i = begin; i < end; ++i) batch[i - begin] = data[order[i]];

      zero_params(grad_params);
      double loss;
      try {
        loss = static_cast<double>(loss_and_grads(model, batch, grads));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NumericalError) {
          raise(ErrorKind::NumericalError,
                std::string(e.what()) + " (epoch " + std::to_string(epoch) +
                    ", batch " + std::to_string(batches) + ")");
        }
        throw;
      }
      if (!std::isfinite(loss)) {
        raise(ErrorKind::NumericalError,
              "non-finite loss (epoch " + std::to_string(epoch) + ", batch " +
                  std::to_string(batches) + ")");
      }
      optimizer_step(state, params, grad_params, config);
      epoch_sum += loss;
      ++batches;
    }
    log.epoch_loss.push_back(epoch_sum / static_cast<double>(batches));
  }
  return log;
}

}  // namespace

TrainLog train_classifier(SeqClassifierParams& model,
                          const std::vector<ClassifierSample>& data,
                          const TrainConfig& config) {
  return train_impl(model, data, config,
                    [](SeqClassifierParams& m,
                       const std::vector<ClassifierSample>& batch,
                       SeqClassifierParams& grads) {
                      return classifier_loss_and_grads(m, batch, grads);
                    });
}

TrainLog train_seq2seq(Seq2SeqParams& model,
                       const std::vector<IndexPair>& pairs,
                       const TrainConfig& config) {
  return train_impl(model, pairs, config,
                    [](Seq2SeqParams& m, const std::vector<IndexPair>& batch,
                       Seq2SeqParams& grads) {
                      return seq2seq_loss_and_grads(m, batch, grads);
                    });
}

}  // namespace codemix
