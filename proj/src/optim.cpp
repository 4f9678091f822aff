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

#include "codemix/optim.hpp"

#include <algorithm>
#include <cmath>

namespace codemix {

const char* optimizer_kind_name(OptimizerKind kind) {
  return kind == OptimizerKind::Adam ? "adam" : "rmsprop";
}

const char* loss_kind_name(LossKind kind) {
  return kind == LossKind::BinaryCE ? "binary_ce" : "categorical_ce";
}

OptimizerKind parse_optimizer_kind(const std::string& name) {
  if (name == "adam") return OptimizerKind::Adam;
  if (name == "rmsprop") return OptimizerKind::RmsProp;
  raise(ErrorKind::ConfigError, "unknown optimizer '" + name + "'");
}

LossKind parse_loss_kind(const std::string& name) {
  if (name == "binary_ce") return LossKind::BinaryCE;
  if (name == "categorical_ce") return LossKind::CategoricalCE;
  raise(ErrorKind::ConfigError, "unknown loss '" + name + "'");
}

void zero_params(const ParamList& params) {
  for (const auto& [name, data] : params) {
    std::fill(data->begin(), data->end(), real_t(0));
  }
}

void optimizer_step(OptimizerState& state, const ParamList& params,
                    const ParamList& grads, const TrainConfig& config) {
  if (params.size() != grads.size() || params.size() != state.m1.size()) {
    raise(ErrorKind::ShapeError, "optimizer_step: tensor count mismatch");
  }
  for (size_t k = 0; k < params.size(); ++k) {
    if (params[k].second->size() != grads[k].second->size() ||
        params[k].second->size() != state.m1[k].size()) {
      raise(ErrorKind::ShapeError,
            "optimizer_step: shape mismatch in " + params[k].first);
    }
  }

  double clip_scale = 1.0;
  if (config.clip_enabled) {
    double norm_sq = 0.0;
    for (const auto& [name, g] : grads) {
      for (real_t x : *g) norm_sq += static_cast<double>(x) * x;
    }
    const double norm = std::sqrt(norm_sq);
    if (norm > config.clip_norm && norm > 0.0) {
      clip_scale = config.clip_norm / norm;
    }
  }

  state.step += 1;
  const real_t lr = static_cast<real_t>(config.learning_rate);
  const real_t eps = static_cast<real_t>(config.epsilon);

  if (config.optimizer == OptimizerKind::Adam) {
    const real_t b1 = static_cast<real_t>(config.adam_beta1);
    const real_t b2 = static_cast<real_t>(config.adam_beta2);
    const real_t corr1 =
        real_t(1) - static_cast<real_t>(std::pow(config.adam_beta1,
                                                 static_cast<double>(state.step)));
    const real_t corr2 =
        real_t(1) - static_cast<real_t>(std::pow(config.adam_beta2,
                                                 static_cast<double>(state.step)));
    for (size_t k = 0; k < params.size(); ++k) {
      auto& w = *params[k].second;
      const auto& g = *grads[k].second;
      auto& m = state.m1[k];
      auto& v = state.m2[k];
      for (size_t i = 0; i < w.size(); ++i) {
        const real_t gi = g[i] * static_cast<real_t>(clip_scale);
        m[i] = b1 * m[i] + (real_t(1) - b1) * gi;
        v[i] = b2 * v[i] + (real_t(1) - b2) * gi * gi;
        const real_t m_hat = m[i] / corr1;
        const real_t v_hat = v[i] / corr2;
        w[i] -= lr * m_hat / (std::sqrt(v_hat) + eps);
      }
    }
  } else {
    const real_t rho = static_cast<real_t>(config.rms_decay);
    for (size_t k = 0; k < params.size(); ++k) {
      auto& w = *params[k].second;
      const auto& g = *grads[k].second;
      auto& acc = state.m2[k];
      for (size_t i = 0; i < w.size(); ++i) {
        const real_t gi = g[i] * static_cast<real_t>(clip_scale);
        acc[i] = rho * acc[i] + (real_t(1) - rho) * gi * gi;
        w[i] -= lr * gi / (std::sqrt(acc[i]) + eps);
      }
    }
  }
}

}  // namespace codemix
