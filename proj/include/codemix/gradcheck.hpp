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

#ifndef CODEMIX_GRADCHECK_HPP_
#define CODEMIX_GRADCHECK_HPP_

#include <cmath>
#include <functional>
#include <vector>

#include "codemix/classifier.hpp"
#include "codemix/seq2seq.hpp"

namespace codemix {

// Central differences run in 80-bit extended precision: the loss roundoff
// of a plain double evaluation (~1e-11 after dividing by 2*eps) would
// swamp the small gradient entries this check has to resolve.
using gradcheck_float = long double;

constexpr double kGradCheckEps = 3e-5;

struct GradCheckReport {
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  size_t checked = 0;
};

namespace detail {

template <class T>
double relative_error(double analytic, T numeric) {
  const double n = static_cast<double>(numeric);
  const double denom =
      std::max({std::fabs(analytic), std::fabs(n), 1e-8});
  return std::fabs(analytic - n) / denom;
}

template <class HighPrecModel, class LossFn>
GradCheckReport check_tensors(
    HighPrecModel& hp_model,
    std::vector<std::pair<std::string, std::vector<gradcheck_float>*>> hp_params,
    const std::vector<std::pair<std::string, std::vector<real_t>*>>& analytic,
    LossFn&& loss_of, double eps) {
  GradCheckReport report;
  for (size_t k = 0; k < hp_params.size(); ++k) {
    auto& tensor = *hp_params[k].second;
    const auto& grad = *analytic[k].second;
    for (size_t i = 0; i < tensor.size(); ++i) {
      const gradcheck_float saved = tensor[i];
      tensor[i] = saved + static_cast<gradcheck_float>(eps);
      const gradcheck_float f_plus = loss_of(hp_model);
      tensor[i] = saved - static_cast<gradcheck_float>(eps);
      const gradcheck_float f_minus = loss_of(hp_model);
      tensor[i] = saved;
      const gradcheck_float numeric =
          (f_plus - f_minus) / (2 * static_cast<gradcheck_float>(eps));
      const double a = static_cast<double>(grad[i]);
      const double rel = relative_error(a, numeric);
      report.max_rel_error = std::max(report.max_rel_error, rel);
      report.max_abs_error = std::max(
          report.max_abs_error, std::fabs(a - static_cast<double>(numeric)));
      ++report.checked;
    }
  }
  return report;
}

}  // namespace detail

// Max over every parameter entry of
//   |analytic - numeric| / max(|analytic|, |numeric|, 1e-8).
inline GradCheckReport gradient_check(
    const SeqClassifierParams& model,
    const std::vector<ClassifierSample>& batch, double eps = kGradCheckEps) {
  SeqClassifierParams grads = zeros_like(model);
  classifier_loss_and_grads(model, batch, grads);

  auto hp = convert_classifier<gradcheck_float>(model);
  return detail::check_tensors(
      hp, param_tensors(hp), param_tensors(grads),
      [&batch](const SeqClassifier<gradcheck_float>& m) {
        return classifier_loss(m, batch);
      },
      eps);
}

inline GradCheckReport gradient_check(const Seq2SeqParams& model,
                                      const std::vector<IndexPair>& batch,
                                      double eps = kGradCheckEps) {
  Seq2SeqParams grads = zeros_like(model);
  seq2seq_loss_and_grads(model, batch, grads);

  auto hp = convert_seq2seq<gradcheck_float>(model);
  return detail::check_tensors(
      hp, param_tensors(hp), param_tensors(grads),
      [&batch](const Seq2Seq<gradcheck_float>& m) {
        return seq2seq_loss(m, batch);
      },
      eps);
}

}  // namespace codemix

#endif  // CODEMIX_GRADCHECK_HPP_
