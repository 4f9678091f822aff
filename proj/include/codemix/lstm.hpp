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

#ifndef CODEMIX_LSTM_HPP_
#define CODEMIX_LSTM_HPP_

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "codemix/error.hpp"
#include "codemix/numeric.hpp"
#include "codemix/rng.hpp"

namespace codemix {

// Gate row blocks in w_x / w_h / bias, each hidden_dim rows:
// input, forget, cell candidate, output.
template <class T>
struct LstmLayer {
  int input_dim = 0;
  int hidden_dim = 0;
  Mat<T> w_x;            // 4H x input_dim
  Mat<T> w_h;            // 4H x hidden_dim
  std::vector<T> bias;   // 4H

  void check_shapes() const {
    if (w_x.rows != 4 * hidden_dim || w_x.cols != input_dim ||
        w_h.rows != 4 * hidden_dim || w_h.cols != hidden_dim ||
        static_cast<int>(bias.size()) != 4 * hidden_dim) {
      raise(ErrorKind::ShapeError, "inconsistent LSTM layer shapes");
    }
  }
};

using LstmLayerParams = LstmLayer<real_t>;

constexpr double kInitWeightRange = 0.08;
constexpr double kForgetBiasInit = 1.0;

template <class T>
LstmLayer<T> make_lstm_layer(int input_dim, int hidden_dim, Rng& rng) {
  LstmLayer<T> layer;
  layer.input_dim = input_dim;
  layer.hidden_dim = hidden_dim;
  layer.w_x = Mat<T>(4 * hidden_dim, input_dim);
  layer.w_h = Mat<T>(4 * hidden_dim, hidden_dim);
  layer.bias.assign(static_cast<size_t>(4 * hidden_dim), T(0));
  for (T& w : layer.w_x.v) {
    w = static_cast<T>(rng.uniform(-kInitWeightRange, kInitWeightRange));
  }
  for (T& w : layer.w_h.v) {
    w = static_cast<T>(rng.uniform(-kInitWeightRange, kInitWeightRange));
  }
  for (int i = hidden_dim; i < 2 * hidden_dim; ++i) {
    layer.bias[static_cast<size_t>(i)] = static_cast<T>(kForgetBiasInit);
  }
  return layer;
}

template <class T>
LstmLayer<T> zeros_like(const LstmLayer<T>& layer) {
  LstmLayer<T> out;
  out.input_dim = layer.input_dim;
  out.hidden_dim = layer.hidden_dim;
  out.w_x = Mat<T>(layer.w_x.rows, layer.w_x.cols);
  out.w_h = Mat<T>(layer.w_h.rows, layer.w_h.cols);
  out.bias.assign(layer.bias.size(), T(0));
  return out;
}

// Per-step activations kept for backpropagation through time.
template <class T>
struct LstmStep {
  std::vector<T> gate_i, gate_f, gate_g, gate_o;
  std::vector<T> c, tanh_c, h;
};

template <class T>
struct LstmTrace {
  std::vector<T> h0, c0;
  std::vector<LstmStep<T>> steps;

  const std::vector<T>& h_at(int t) const {
    return t < 0 ? h0 : steps[static_cast<size_t>(t)].h;
  }
  const std::vector<T>& c_at(int t) const {
    return t < 0 ? c0 : steps[static_cast<size_t>(t)].c;
  }
  std::vector<T> final_h() const { return steps.empty() ? h0 : steps.back().h; }
  std::vector<T> final_c() const { return steps.empty() ? c0 : steps.back().c; }
};

template <class T>
LstmStep<T> lstm_cell_forward(const LstmLayer<T>& layer,
                              const std::vector<T>& x,
                              const std::vector<T>& h_prev,
                              const std::vector<T>& c_prev) {
  const int h_dim = layer.hidden_dim;
  if (static_cast<int>(x.size()) != layer.input_dim ||
      static_cast<int>(h_prev.size()) != h_dim ||
      static_cast<int>(c_prev.size()) != h_dim) {
    raise(ErrorKind::ShapeError,
          "lstm_cell_forward: input dims do not match layer");
  }
  layer.check_shapes();

  std::vector<T> z(layer.bias);
  matvec_add(layer.w_x, x, z);
  matvec_add(layer.w_h, h_prev, z);

  LstmStep<T> step;
  step.gate_i.resize(static_cast<size_t>(h_dim));
  step.gate_f.resize(static_cast<size_t>(h_dim));
  step.gate_g.resize(static_cast<size_t>(h_dim));
  step.gate_o.resize(static_cast<size_t>(h_dim));
  step.c.resize(static_cast<size_t>(h_dim));
  step.tanh_c.resize(static_cast<size_t>(h_dim));
  step.h.resize(static_cast<size_t>(h_dim));
  for (int j = 0; j < h_dim; ++j) {
    const size_t js = static_cast<size_t>(j);
    const T zi = z[js];
    const T zf = z[static_cast<size_t>(h_dim) + js];
    const T zg = z[2 * static_cast<size_t>(h_dim) + js];
    const T zo = z[3 * static_cast<size_t>(h_dim) + js];
    step.gate_i[js] = sigmoid(zi);
    step.gate_f[js] = sigmoid(zf);
    step.gate_g[js] = std::tanh(zg);
    step.gate_o[js] = sigmoid(zo);
    step.c[js] = step.gate_f[js] * c_prev[js] + step.gate_i[js] * step.gate_g[js];
    step.tanh_c[js] = std::tanh(step.c[js]);
    step.h[js] = step.gate_o[js] * step.tanh_c[js];
  }
  return step;
}

// Runs one layer over a sequence starting from zero states.
template <class T>
LstmTrace<T> lstm_forward(const LstmLayer<T>& layer,
                          const std::vector<std::vector<T>>& inputs,
                          const std::vector<std::type_identity_t<T>>* h0 = nullptr,
                          const std::vector<std::type_identity_t<T>>* c0 = nullptr) {
  LstmTrace<T> trace;
  const size_t h_dim = static_cast<size_t>(layer.hidden_dim);
  trace.h0 = h0 ? *h0 : std::vector<T>(h_dim, T(0));
  trace.c0 = c0 ? *c0 : std::vector<T>(h_dim, T(0));
  trace.steps.reserve(inputs.size());
  const std::vector<T>* h_prev = &trace.h0;
  const std::vector<T>* c_prev = &trace.c0;
  for (const auto& x : inputs) {
    trace.steps.push_back(lstm_cell_forward(layer, x, *h_prev, *c_prev));
    h_prev = &trace.steps.back().h;
    c_prev = &trace.steps.back().c;
  }
  return trace;
}

// Backpropagation through the full sequence (no truncation).
//
// d_h_steps[t] is dLoss/dh_t accumulated by callers for every step;
// d_h_final/d_c_final are extra gradients flowing into the last states
// (taken from consumers of the final state). On return, grads holds the
// accumulated parameter gradients, d_inputs the per-step input gradients
// and, when requested, d_h0/d_c0 the gradients into the initial states.
template <class T>
void lstm_backward(const LstmLayer<T>& layer,
                   const std::vector<std::vector<T>>& inputs,
                   const LstmTrace<T>& trace,
                   const std::vector<std::vector<T>>& d_h_steps,
                   const std::vector<std::type_identity_t<T>>* d_h_final,
                   const std::vector<std::type_identity_t<T>>* d_c_final,
                   LstmLayer<T>& grads,
                   std::vector<std::vector<std::type_identity_t<T>>>* d_inputs,
                   std::vector<std::type_identity_t<T>>* d_h0,
                   std::vector<std::type_identity_t<T>>* d_c0) {
  const int h_dim = layer.hidden_dim;
  const size_t hs = static_cast<size_t>(h_dim);
  const int steps = static_cast<int>(trace.steps.size());

  std::vector<T> dh(hs, T(0));
  std::vector<T> dc(hs, T(0));
  if (d_h_final) add_scaled(dh, *d_h_final, T(1));
  if (d_c_final) add_scaled(dc, *d_c_final, T(1));

  if (d_inputs) {
    d_inputs->assign(static_cast<size_t>(steps),
                     std::vector<T>(static_cast<size_t>(layer.input_dim), T(0)));
  }
  std::vector<T> dz(4 * hs);

  for (int t = steps - 1; t >= 0; --t) {
    const LstmStep<T>& s = trace.steps[static_cast<size_t>(t)];
    if (t < static_cast<int>(d_h_steps.size()) &&
        !d_h_steps[static_cast<size_t>(t)].empty()) {
      add_scaled(dh, d_h_steps[static_cast<size_t>(t)], T(1));
    }
    const std::vector<T>& c_prev = trace.c_at(t - 1);
    const std::vector<T>& h_prev = trace.h_at(t - 1);

    for (int j = 0; j < h_dim; ++j) {
      const size_t js = static_cast<size_t>(j);
      const T d_o = dh[js] * s.tanh_c[js];
      const T d_c =
          dc[js] + dh[js] * s.gate_o[js] * (T(1) - s.tanh_c[js] * s.tanh_c[js]);
      const T d_i = d_c * s.gate_g[js];
      const T d_f = d_c * c_prev[js];
      const T d_g = d_c * s.gate_i[js];
      dz[js] = d_i * s.gate_i[js] * (T(1) - s.gate_i[js]);
      dz[hs + js] = d_f * s.gate_f[js] * (T(1) - s.gate_f[js]);
      dz[2 * hs + js] = d_g * (T(1) - s.gate_g[js] * s.gate_g[js]);
      dz[3 * hs + js] = d_o * s.gate_o[js] * (T(1) - s.gate_o[js]);
      dc[js] = d_c * s.gate_f[js];
    }

    const std::vector<T>& x = inputs[static_cast<size_t>(t)];
    outer_add(grads.w_x, dz, x);
    outer_add(grads.w_h, dz, h_prev);
    add_scaled(grads.bias, dz, T(1));

    if (d_inputs) {
      matvec_transpose_add(layer.w_x, dz, (*d_inputs)[static_cast<size_t>(t)]);
    }
    std::fill(dh.begin(), dh.end(), T(0));
    matvec_transpose_add(layer.w_h, dz, dh);
  }

  if (d_h0) *d_h0 = dh;
  if (d_c0) *d_c0 = dc;
}

// Stacked forward pass; layer l consumes layer l-1 hidden states.
template <class T>
std::vector<LstmTrace<T>> stack_forward(
    const std::vector<LstmLayer<T>>& layers,
    const std::vector<std::vector<T>>& inputs,
    const std::vector<std::vector<std::type_identity_t<T>>>* h0_per_layer = nullptr,
    const std::vector<std::vector<std::type_identity_t<T>>>* c0_per_layer = nullptr) {
  if (inputs.empty()) {
    raise(ErrorKind::EmptyInput, "stack_forward: empty sequence");
  }
  std::vector<LstmTrace<T>> traces;
  traces.reserve(layers.size());
  const std::vector<std::vector<T>>* current = &inputs;
  std::vector<std::vector<T>> buffer;
  for (size_t l = 0; l < layers.size(); ++l) {
    const std::vector<T>* h0 = h0_per_layer ? &(*h0_per_layer)[l] : nullptr;
    const std::vector<T>* c0 = c0_per_layer ? &(*c0_per_layer)[l] : nullptr;
    traces.push_back(lstm_forward(layers[l], *current, h0, c0));
    if (l + 1 < layers.size()) {
      buffer.clear();
      for (const auto& step : traces.back().steps) buffer.push_back(step.h);
      current = &buffer;
    }
  }
  return traces;
}

// Per-step hidden states of the top layer plus final (h, c) of every layer.
template <class T>
struct StackRun {
  std::vector<std::vector<T>> top_states;
  std::vector<std::vector<T>> final_h;
  std::vector<std::vector<T>> final_c;
};

template <class T>
StackRun<T> run_stack(const std::vector<LstmLayer<T>>& layers,
                      const std::vector<std::vector<T>>& inputs) {
  const auto traces = stack_forward(layers, inputs);
  StackRun<T> run;
  for (const auto& step : traces.back().steps) run.top_states.push_back(step.h);
  for (const auto& trace : traces) {
    run.final_h.push_back(trace.final_h());
    run.final_c.push_back(trace.final_c());
  }
  return run;
}

}  // namespace codemix

#endif  // CODEMIX_LSTM_HPP_
