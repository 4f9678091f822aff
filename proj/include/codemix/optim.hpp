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

#ifndef CODEMIX_OPTIM_HPP_
#define CODEMIX_OPTIM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "codemix/error.hpp"
#include "codemix/numeric.hpp"

namespace codemix {

enum class OptimizerKind { Adam, RmsProp };
enum class LossKind { BinaryCE, CategoricalCE };

const char* optimizer_kind_name(OptimizerKind kind);
const char* loss_kind_name(LossKind kind);
OptimizerKind parse_optimizer_kind(const std::string& name);
LossKind parse_loss_kind(const std::string& name);

struct TrainConfig {
  int epochs = 1;
  int batch_size = 1;
  OptimizerKind optimizer = OptimizerKind::Adam;
  LossKind loss = LossKind::CategoricalCE;
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double rms_decay = 0.9;
  double epsilon = 1e-8;
  uint64_t seed = 0;
  bool shuffle = true;
  bool clip_enabled = false;
  double clip_norm = 5.0;

  void validate() const {
    if (epochs < 1) raise(ErrorKind::ConfigError, "epochs must be >= 1");
    if (batch_size < 1) raise(ErrorKind::ConfigError, "batch_size must be >= 1");
    if (learning_rate <= 0) {
      raise(ErrorKind::ConfigError, "learning rate must be positive");
    }
  }
};

using ParamList = std::vector<std::pair<std::string, std::vector<real_t>*>>;

// First/second moment accumulators mirroring the parameter tensors.
struct OptimizerState {
  std::vector<std::vector<real_t>> m1;
  std::vector<std::vector<real_t>> m2;
  int64_t step = 0;

  void init_like(const ParamList& params) {
    m1.clear();
    m2.clear();
    for (const auto& [name, data] : params) {
      m1.emplace_back(data->size(), real_t(0));
      m2.emplace_back(data->size(), real_t(0));
    }
    step = 0;
  }
};

// One Adam or RMSProp update, in place. `grads` must mirror `params`.
void optimizer_step(OptimizerState& state, const ParamList& params,
                    const ParamList& grads, const TrainConfig& config);

void zero_params(const ParamList& params);

}  // namespace codemix

#endif  // CODEMIX_OPTIM_HPP_
