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

#ifndef CODEMIX_CLASSIFIER_HPP_
#define CODEMIX_CLASSIFIER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "codemix/lstm.hpp"
#include "codemix/numeric.hpp"
#include "codemix/text.hpp"

namespace codemix {

// Character-level sequence classifier: learned char embedding, stacked
// LSTM, dense sigmoid head reading the final hidden state.
template <class T>
struct SeqClassifier {
  CharVocab vocab;
  Mat<T> embedding;              // vocab size x embed_dim
  std::vector<LstmLayer<T>> layers;
  Mat<T> out_w;                  // 1 x last hidden_dim
  std::vector<T> out_b;          // 1
};

using SeqClassifierParams = SeqClassifier<real_t>;

struct ClassifierSample {
  std::vector<int> chars;  // vocab indices, non-empty
  int label = 0;           // 1 = positive class
};

template <class T>
SeqClassifier<T> make_classifier(const CharVocab& vocab, int embed_dim,
                                 const std::vector<int>& hidden_dims,
                                 uint64_t seed) {
  Rng rng(seed);
  SeqClassifier<T> model;
  model.vocab = vocab;
  model.embedding = Mat<T>(vocab.size(), embed_dim);
  for (T& w : model.embedding.v) {
    w = static_cast<T>(rng.uniform(-kInitWeightRange, kInitWeightRange));
  }
  int in_dim = embed_dim;
  for (int h : hidden_dims) {
    model.layers.push_back(make_lstm_layer<T>(in_dim, h, rng));
    in_dim = h;
  }
  model.out_w = Mat<T>(1, in_dim);
  for (T& w : model.out_w.v) {
    w = static_cast<T>(rng.uniform(-kInitWeightRange, kInitWeightRange));
  }
  model.out_b.assign(1, T(0));
  return model;
}

template <class T>
SeqClassifier<T> zeros_like(const SeqClassifier<T>& m) {
  SeqClassifier<T> out;
  out.vocab = m.vocab;
  out.embedding = Mat<T>(m.embedding.rows, m.embedding.cols);
  for (const auto& layer : m.layers) out.layers.push_back(zeros_like(layer));
  out.out_w = Mat<T>(m.out_w.rows, m.out_w.cols);
  out.out_b.assign(m.out_b.size(), T(0));
  return out;
}

template <class T, class U>
SeqClassifier<T> convert_classifier(const SeqClassifier<U>& m) {
  SeqClassifier<T> out;
  out.vocab = m.vocab;
  out.embedding = convert_mat<T>(m.embedding);
  for (const auto& layer : m.layers) {
    LstmLayer<T> l;
    l.input_dim = layer.input_dim;
    l.hidden_dim = layer.hidden_dim;
    l.w_x = convert_mat<T>(layer.w_x);
    l.w_h = convert_mat<T>(layer.w_h);
    l.bias.assign(layer.bias.begin(), layer.bias.end());
    out.layers.push_back(std::move(l));
  }
  out.out_w = convert_mat<T>(m.out_w);
  out.out_b.assign(m.out_b.begin(), m.out_b.end());
  return out;
}

template <class T>
std::vector<std::pair<std::string, std::vector<T>*>> param_tensors(
    SeqClassifier<T>& m) {
  std::vector<std::pair<std::string, std::vector<T>*>> out;
  out.emplace_back("embedding", &m.embedding.v);
  for (size_t l = 0; l < m.layers.size(); ++l) {
    const std::string p = "lstm" + std::to_string(l) + ".";
    out.emplace_back(p + "w_x", &m.layers[l].w_x.v);
    out.emplace_back(p + "w_h", &m.layers[l].w_h.v);
    out.emplace_back(p + "bias", &m.layers[l].bias);
  }
  out.emplace_back("out_w", &m.out_w.v);
  out.emplace_back("out_b", &m.out_b);
  return out;
}

template <class T>
std::vector<std::vector<T>> embed_sequence(const Mat<T>& embedding,
                                           const std::vector<int>& indices) {
  std::vector<std::vector<T>> xs;
  xs.reserve(indices.size());
  for (int idx : indices) {
    if (idx < 0 || idx >= embedding.rows) {
      raise(ErrorKind::VocabError, "index " + std::to_string(idx) +
                                       " outside embedding table");
    }
    xs.emplace_back(embedding.row(idx),
                    embedding.row(idx) + embedding.cols);
  }
  return xs;
}

// Sigmoid probability of the positive class.
template <class T>
T classifier_score(const SeqClassifier<T>& model,
                   const std::vector<int>& chars) {
  if (chars.empty()) {
    raise(ErrorKind::EmptyInput, "classifier_score: empty sequence");
  }
  const auto xs = embed_sequence(model.embedding, chars);
  const auto traces = stack_forward(model.layers, xs);
  const auto& h_last = traces.back().steps.back().h;
  T logit = model.out_b[0];
  for (int j = 0; j < model.out_w.cols; ++j) {
    logit += model.out_w(0, j) * h_last[static_cast<size_t>(j)];
  }
  return sigmoid(logit);
}

// Mean binary cross-entropy over the batch.
template <class T>
T classifier_loss(const SeqClassifier<T>& model,
                  const std::vector<ClassifierSample>& batch) {
  if (batch.empty()) {
    raise(ErrorKind::EmptyInput, "classifier_loss: empty batch");
  }
  StableSum<T> total;
  for (const ClassifierSample& sample : batch) {
    const auto xs = embed_sequence(model.embedding, sample.chars);
    const auto traces = stack_forward(model.layers, xs);
    const auto& h_last = traces.back().steps.back().h;
    T logit = model.out_b[0];
    for (int j = 0; j < model.out_w.cols; ++j) {
      logit += model.out_w(0, j) * h_last[static_cast<size_t>(j)];
    }
    total.add(bce_from_logit(logit, static_cast<T>(sample.label)));
  }
  return total.value() / static_cast<T>(batch.size());
}

// Mean BCE plus full-BPTT gradients accumulated into `grads`.
template <class T>
T classifier_loss_and_grads(const SeqClassifier<T>& model,
                            const std::vector<ClassifierSample>& batch,
                            SeqClassifier<T>& grads) {
  if (batch.empty()) {
    raise(ErrorKind::EmptyInput, "classifier_loss_and_grads: empty batch");
  }
  const T inv_n = T(1) / static_cast<T>(batch.size());
  StableSum<T> total;
  const size_t n_layers = model.layers.size();

  for (const ClassifierSample& sample : batch) {
    const auto xs = embed_sequence(model.embedding, sample.chars);
    const auto traces = stack_forward(model.layers, xs);
    const auto& h_last = traces.back().steps.back().h;
    T logit = model.out_b[0];
    for (int j = 0; j < model.out_w.cols; ++j) {
      logit += model.out_w(0, j) * h_last[static_cast<size_t>(j)];
    }
    total.add(bce_from_logit(logit, static_cast<T>(sample.label)));

    // d loss / d logit, already scaled by the batch mean.
    const T d_logit =
        (sigmoid(logit) - static_cast<T>(sample.label)) * inv_n;
    grads.out_b[0] += d_logit;
    std::vector<T> dh_last(h_last.size(), T(0));
    for (int j = 0; j < model.out_w.cols; ++j) {
      grads.out_w(0, j) += d_logit * h_last[static_cast<size_t>(j)];
      dh_last[static_cast<size_t>(j)] = d_logit * model.out_w(0, j);
    }

    // Walk the stack top-down; each layer's input grads become the
    // hidden-state grads of the layer below.
    std::vector<std::vector<T>> d_h_steps(traces.back().steps.size());
    std::vector<T>* dh_final = &dh_last;
    std::vector<std::vector<T>> d_inputs;
    for (size_t l = n_layers; l-- > 0;) {
      const std::vector<std::vector<T>>* layer_inputs;
      std::vector<std::vector<T>> lower_h;
      if (l == 0) {
        layer_inputs = &xs;
      } else {
        for (const auto& step : traces[l - 1].steps) lower_h.push_back(step.h);
        layer_inputs = &lower_h;
      }
      std::vector<std::vector<T>> d_in;
      lstm_backward(model.layers[l], *layer_inputs, traces[l], d_h_steps,
                    dh_final, nullptr, grads.layers[l], &d_in, nullptr,
                    nullptr);
      d_h_steps = std::move(d_in);
      dh_final = nullptr;
    }
    // d_h_steps now holds input-embedding gradients.
    for (size_t t = 0; t < sample.chars.size(); ++t) {
      T* row = grads.embedding.row(sample.chars[t]);
      for (int j = 0; j < grads.embedding.cols; ++j) {
        row[j] += d_h_steps[t][static_cast<size_t>(j)];
      }
    }
  }
  return total.value() / static_cast<T>(batch.size());
}

}  // namespace codemix

#endif  // CODEMIX_CLASSIFIER_HPP_
