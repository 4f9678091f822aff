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

#ifndef CODEMIX_SEQ2SEQ_HPP_
#define CODEMIX_SEQ2SEQ_HPP_

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "codemix/lstm.hpp"
#include "codemix/numeric.hpp"
#include "codemix/text.hpp"

namespace codemix {

enum class EmbeddingMode { OneHot, Learned };

// Character-level encoder-decoder. Encoder final states seed the decoder;
// when attention is on, a scaled dot-product context over the encoder
// top-layer states feeds the output projection through ctx_w. With ctx_w
// zero the context contributes nothing and the model behaves exactly like
// its attention-free twin.
template <class T>
struct Seq2Seq {
  CharVocab src_vocab;
  CharVocab tgt_vocab;
  EmbeddingMode embedding = EmbeddingMode::OneHot;
  int embed_dim = 0;        // Learned mode only
  Mat<T> src_embed;         // Learned mode only
  Mat<T> tgt_embed;         // Learned mode only
  std::vector<LstmLayer<T>> encoder;
  std::vector<LstmLayer<T>> decoder;
  bool attention = true;
  Mat<T> out_w;             // V_tgt x H_dec
  Mat<T> ctx_w;             // V_tgt x H_enc, attention only
  std::vector<T> out_b;     // V_tgt

  int src_input_dim() const {
    return embedding == EmbeddingMode::OneHot ? src_vocab.size() : embed_dim;
  }
  int tgt_input_dim() const {
    return embedding == EmbeddingMode::OneHot ? tgt_vocab.size() : embed_dim;
  }
};

using Seq2SeqParams = Seq2Seq<real_t>;

struct IndexPair {
  std::vector<int> src;
  std::vector<int> tgt;
};

template <class T>
Seq2Seq<T> make_seq2seq(const CharVocab& src_vocab, const CharVocab& tgt_vocab,
                        const std::vector<int>& hidden_dims, bool attention,
                        EmbeddingMode embedding, int embed_dim, uint64_t seed) {
  if (hidden_dims.empty()) {
    raise(ErrorKind::ShapeError, "seq2seq needs at least one layer");
  }
  Rng rng(seed);
  Seq2Seq<T> model;
  model.src_vocab = src_vocab;
  model.tgt_vocab = tgt_vocab;
  model.embedding = embedding;
  model.attention = attention;
  if (embedding == EmbeddingMode::Learned) {
    model.embed_dim = embed_dim;
    model.src_embed = Mat<T>(src_vocab.size(), embed_dim);
    model.tgt_embed = Mat<T>(tgt_vocab.size(), embed_dim);
    for (T& w : model.src_embed.v) {
      w = static_cast<T>(rng.uniform(-kInitWeightRange, kInitWeightRange));
    }
    for (T& w : model.tgt_embed.v) {
      w = static_cast<T>(rng.uniform(-kInitWeightRange, kInitWeightRange));
    }
  }
  int in_dim = model.src_input_dim();
  for (int h : hidden_dims) {
    model.encoder.push_back(make_lstm_layer<T>(in_dim, h, rng));
    in_dim = h;
  }
  in_dim = model.tgt_input_dim();
  for (int h : hidden_dims) {
    model.decoder.push_back(make_lstm_layer<T>(in_dim, h, rng));
    in_dim = h;
  }
  const int h_top = hidden_dims.back();
  model.out_w = Mat<T>(tgt_vocab.size(), h_top);
  for (T& w : model.out_w.v) {
    w = static_cast<T>(rng.uniform(-kInitWeightRange, kInitWeightRange));
  }
  if (attention) {
    model.ctx_w = Mat<T>(tgt_vocab.size(), h_top);
    for (T& w : model.ctx_w.v) {
      w = static_cast<T>(rng.uniform(-kInitWeightRange, kInitWeightRange));
    }
  }
  model.out_b.assign(static_cast<size_t>(tgt_vocab.size()), T(0));
  return model;
}

template <class T>
Seq2Seq<T> zeros_like(const Seq2Seq<T>& m) {
  Seq2Seq<T> out;
  out.src_vocab = m.src_vocab;
  out.tgt_vocab = m.tgt_vocab;
  out.embedding = m.embedding;
  out.embed_dim = m.embed_dim;
  out.attention = m.attention;
  out.src_embed = Mat<T>(m.src_embed.rows, m.src_embed.cols);
  out.tgt_embed = Mat<T>(m.tgt_embed.rows, m.tgt_embed.cols);
  for (const auto& l : m.encoder) out.encoder.push_back(zeros_like(l));
  for (const auto& l : m.decoder) out.decoder.push_back(zeros_like(l));
  out.out_w = Mat<T>(m.out_w.rows, m.out_w.cols);
  out.ctx_w = Mat<T>(m.ctx_w.rows, m.ctx_w.cols);
  out.out_b.assign(m.out_b.size(), T(0));
  return out;
}

template <class T, class U>
LstmLayer<T> convert_layer(const LstmLayer<U>& layer) {
  LstmLayer<T> l;
  l.input_dim = layer.input_dim;
  l.hidden_dim = layer.hidden_dim;
  l.w_x = convert_mat<T>(layer.w_x);
  l.w_h = convert_mat<T>(layer.w_h);
  l.bias.assign(layer.bias.begin(), layer.bias.end());
  return l;
}

template <class T, class U>
Seq2Seq<T> convert_seq2seq(const Seq2Seq<U>& m) {
  Seq2Seq<T> out;
  out.src_vocab = m.src_vocab;
  out.tgt_vocab = m.tgt_vocab;
  out.embedding = m.embedding;
  out.embed_dim = m.embed_dim;
  out.attention = m.attention;
  out.src_embed = convert_mat<T>(m.src_embed);
  out.tgt_embed = convert_mat<T>(m.tgt_embed);
  for (const auto& l : m.encoder) out.encoder.push_back(convert_layer<T>(l));
  for (const auto& l : m.decoder) out.decoder.push_back(convert_layer<T>(l));
  out.out_w = convert_mat<T>(m.out_w);
  out.ctx_w = convert_mat<T>(m.ctx_w);
  out.out_b.assign(m.out_b.begin(), m.out_b.end());
  return out;
}

template <class T>
std::vector<std::pair<std::string, std::vector<T>*>> param_tensors(
    Seq2Seq<T>& m) {
  std::vector<std::pair<std::string, std::vector<T>*>> out;
  if (m.embedding == EmbeddingMode::Learned) {
    out.emplace_back("src_embed", &m.src_embed.v);
    out.emplace_back("tgt_embed", &m.tgt_embed.v);
  }
  for (size_t l = 0; l < m.encoder.size(); ++l) {
    const std::string p = "enc" + std::to_string(l) + ".";
    out.emplace_back(p + "w_x", &m.encoder[l].w_x.v);
    out.emplace_back(p + "w_h", &m.encoder[l].w_h.v);
    out.emplace_back(p + "bias", &m.encoder[l].bias);
  }
  for (size_t l = 0; l < m.decoder.size(); ++l) {
    const std::string p = "dec" + std::to_string(l) + ".";
    out.emplace_back(p + "w_x", &m.decoder[l].w_x.v);
    out.emplace_back(p + "w_h", &m.decoder[l].w_h.v);
    out.emplace_back(p + "bias", &m.decoder[l].bias);
  }
  out.emplace_back("out_w", &m.out_w.v);
  if (m.attention) out.emplace_back("ctx_w", &m.ctx_w.v);
  out.emplace_back("out_b", &m.out_b);
  return out;
}

namespace detail {

template <class T>
std::vector<std::vector<T>> build_inputs(const Seq2Seq<T>& m, bool source,
                                         const std::vector<int>& indices) {
  const int vocab_size = source ? m.src_vocab.size() : m.tgt_vocab.size();
  std::vector<std::vector<T>> xs;
  xs.reserve(indices.size());
  for (int idx : indices) {
    if (idx < 0 || idx >= vocab_size) {
      raise(ErrorKind::VocabError,
            "index " + std::to_string(idx) + " outside vocabulary of size " +
                std::to_string(vocab_size));
    }
    if (m.embedding == EmbeddingMode::OneHot) {
      std::vector<T> x(static_cast<size_t>(vocab_size), T(0));
      x[static_cast<size_t>(idx)] = T(1);
      xs.push_back(std::move(x));
    } else {
      const Mat<T>& table = source ? m.src_embed : m.tgt_embed;
      xs.emplace_back(table.row(idx), table.row(idx) + table.cols);
    }
  }
  return xs;
}

// Trims trailing PAD indices; PAD elsewhere is rejected by encode checks.
inline std::vector<int> strip_trailing_pad(const std::vector<int>& indices) {
  std::vector<int> out(indices);
  while (!out.empty() && out.back() == CharVocab::kPad) out.pop_back();
  return out;
}

}  // namespace detail

// Everything one forward pass produces, kept for backpropagation.
template <class T>
struct Seq2SeqActivations {
  std::vector<int> src;                      // after PAD stripping
  std::vector<int> prefix;
  std::vector<std::vector<T>> xs_src;
  std::vector<std::vector<T>> xs_dec;
  std::vector<LstmTrace<T>> enc_traces;
  std::vector<LstmTrace<T>> dec_traces;
  std::vector<std::vector<T>> alphas;        // per decoder step, attention only
  std::vector<std::vector<T>> contexts;      // per decoder step, attention only
  std::vector<std::vector<T>> probs;         // per decoder step, V_tgt
};

template <class T>
Seq2SeqActivations<T> seq2seq_run(const Seq2Seq<T>& model,
                                  const std::vector<int>& source,
                                  const std::vector<int>& target_prefix) {
  if (model.encoder.size() != model.decoder.size()) {
    raise(ErrorKind::ShapeError, "encoder/decoder depth mismatch");
  }
  Seq2SeqActivations<T> act;
  act.src = detail::strip_trailing_pad(source);
  if (act.src.empty()) {
    raise(ErrorKind::EmptyInput, "seq2seq: empty source");
  }
  act.prefix = target_prefix;
  act.xs_src = detail::build_inputs(model, true, act.src);
  act.enc_traces = stack_forward(model.encoder, act.xs_src);

  std::vector<std::vector<T>> h0, c0;
  for (size_t l = 0; l < model.encoder.size(); ++l) {
    if (model.encoder[l].hidden_dim != model.decoder[l].hidden_dim) {
      raise(ErrorKind::ShapeError,
            "encoder state dim does not match decoder layer " +
                std::to_string(l));
    }
    h0.push_back(act.enc_traces[l].final_h());
    c0.push_back(act.enc_traces[l].final_c());
  }

  if (target_prefix.empty()) return act;

  act.xs_dec = detail::build_inputs(model, false, target_prefix);
  act.dec_traces = stack_forward(model.decoder, act.xs_dec, &h0, &c0);

  const LstmTrace<T>& enc_top = act.enc_traces.back();
  const LstmTrace<T>& dec_top = act.dec_traces.back();
  const int h_dim = model.decoder.back().hidden_dim;
  const T scale = T(1) / std::sqrt(static_cast<T>(h_dim));
  const size_t src_len = enc_top.steps.size();

  for (size_t t = 0; t < dec_top.steps.size(); ++t) {
    const std::vector<T>& h_t = dec_top.steps[t].h;
    std::vector<T> logits(model.out_b);
    matvec_add(model.out_w, h_t, logits);
    if (model.attention) {
      std::vector<T> scores(src_len);
      for (size_t s = 0; s < src_len; ++s) {
        scores[s] = dot(h_t, enc_top.steps[s].h) * scale;
      }
      softmax(scores);
      std::vector<T> ctx(static_cast<size_t>(h_dim), T(0));
      for (size_t s = 0; s < src_len; ++s) {
        add_scaled(ctx, enc_top.steps[s].h, scores[s]);
      }
      matvec_add(model.ctx_w, ctx, logits);
      act.alphas.push_back(std::move(scores));
      act.contexts.push_back(std::move(ctx));
    }
    softmax(logits);
    act.probs.push_back(std::move(logits));
  }
  return act;
}

// Per-step output distributions under teacher forcing.
template <class T>
std::vector<std::vector<T>> seq2seq_forward(const Seq2Seq<T>& model,
                                            const std::vector<int>& source,
                                            const std::vector<int>& target_prefix) {
  return seq2seq_run(model, source, target_prefix).probs;
}

namespace detail {

inline std::vector<int> decoder_prefix(const std::vector<int>& tgt) {
  std::vector<int> prefix;
  prefix.reserve(tgt.size() + 1);
  prefix.push_back(CharVocab::kSos);
  prefix.insert(prefix.end(), tgt.begin(), tgt.end());
  return prefix;
}

inline std::vector<int> decoder_labels(const std::vector<int>& tgt) {
  std::vector<int> labels(tgt);
  labels.push_back(CharVocab::kEos);
  return labels;
}

inline size_t count_label_steps(const std::vector<IndexPair>& batch) {
  size_t total = 0;
  for (const IndexPair& pair : batch) {
    for (int label : decoder_labels(strip_trailing_pad(pair.tgt))) {
      if (label != CharVocab::kPad) ++total;
    }
  }
  return total;
}

}  // namespace detail

// Mean teacher-forced cross-entropy over all non-PAD label steps.
template <class T>
T seq2seq_loss(const Seq2Seq<T>& model, const std::vector<IndexPair>& batch) {
  if (batch.empty()) {
    raise(ErrorKind::EmptyInput, "seq2seq_loss: empty batch");
  }
  const size_t total_steps = detail::count_label_steps(batch);
  StableSum<T> total;
  for (const IndexPair& pair : batch) {
    const std::vector<int> tgt = detail::strip_trailing_pad(pair.tgt);
    const auto act =
        seq2seq_run(model, pair.src, detail::decoder_prefix(tgt));
    const std::vector<int> labels = detail::decoder_labels(tgt);
    for (size_t t = 0; t < labels.size(); ++t) {
      if (labels[t] == CharVocab::kPad) continue;
      const T p = act.probs[t][static_cast<size_t>(labels[t])];
      total.add(-std::log(std::max(p, std::numeric_limits<T>::min())));
    }
  }
  return total.value() / static_cast<T>(total_steps);
}

// Loss plus gradients for a teacher-forced batch, averaged over all
// counted label steps. PAD labels contribute nothing.
template <class T>
T seq2seq_loss_and_grads(const Seq2Seq<T>& model,
                         const std::vector<IndexPair>& batch,
                         Seq2Seq<T>& grads) {
  if (batch.empty()) {
    raise(ErrorKind::EmptyInput, "seq2seq_loss_and_grads: empty batch");
  }
  const size_t total_steps = detail::count_label_steps(batch);
  if (total_steps == 0) {
    raise(ErrorKind::DataError, "seq2seq batch has no label steps");
  }
  const T inv_total = T(1) / static_cast<T>(total_steps);
  StableSum<T> total;
  const size_t n_layers = model.decoder.size();
  const int h_dim = model.decoder.back().hidden_dim;
  const T scale = T(1) / std::sqrt(static_cast<T>(h_dim));

  for (const IndexPair& pair : batch) {
    const std::vector<int> tgt = detail::strip_trailing_pad(pair.tgt);
    const std::vector<int> prefix = detail::decoder_prefix(tgt);
    const std::vector<int> labels = detail::decoder_labels(tgt);
    const auto act = seq2seq_run(model, pair.src, prefix);

    const LstmTrace<T>& enc_top = act.enc_traces.back();
    const LstmTrace<T>& dec_top = act.dec_traces.back();
    const size_t src_len = enc_top.steps.size();
    const size_t dec_len = dec_top.steps.size();

    // Grads flowing into decoder top-layer hidden states and encoder
    // top-layer per-step states.
    std::vector<std::vector<T>> d_dec_h(
        dec_len, std::vector<T>(static_cast<size_t>(h_dim), T(0)));
    std::vector<std::vector<T>> d_enc_h(
        src_len, std::vector<T>(static_cast<size_t>(h_dim), T(0)));

    std::vector<T> d_logits(act.probs.empty() ? 0 : act.probs[0].size());
    for (size_t t = 0; t < dec_len; ++t) {
      if (labels[t] == CharVocab::kPad) continue;
      const std::vector<T>& probs = act.probs[t];
      const T p = probs[static_cast<size_t>(labels[t])];
      total.add(-std::log(std::max(p, std::numeric_limits<T>::min())));

      for (size_t j = 0; j < probs.size(); ++j) d_logits[j] = probs[j] * inv_total;
      d_logits[static_cast<size_t>(labels[t])] -= inv_total;

      add_scaled(grads.out_b, d_logits, T(1));
      outer_add(grads.out_w, d_logits, dec_top.steps[t].h);
      matvec_transpose_add(model.out_w, d_logits, d_dec_h[t]);

      if (model.attention) {
        const std::vector<T>& alpha = act.alphas[t];
        const std::vector<T>& ctx = act.contexts[t];
        outer_add(grads.ctx_w, d_logits, ctx);
        std::vector<T> d_ctx(static_cast<size_t>(h_dim), T(0));
        matvec_transpose_add(model.ctx_w, d_logits, d_ctx);

        std::vector<T> d_alpha(src_len, T(0));
        for (size_t s = 0; s < src_len; ++s) {
          d_alpha[s] = dot(d_ctx, enc_top.steps[s].h);
          add_scaled(d_enc_h[s], d_ctx, alpha[s]);
        }
        // Softmax backward.
        T inner = T(0);
        for (size_t s = 0; s < src_len; ++s) inner += d_alpha[s] * alpha[s];
        for (size_t s = 0; s < src_len; ++s) {
          const T d_score = alpha[s] * (d_alpha[s] - inner);
          add_scaled(d_dec_h[t], enc_top.steps[s].h, d_score * scale);
          add_scaled(d_enc_h[s], dec_top.steps[t].h, d_score * scale);
        }
      }
    }

    // Decoder BPTT, top layer down; collect initial-state grads per layer.
    std::vector<std::vector<T>> d_h0(n_layers), d_c0(n_layers);
    std::vector<std::vector<T>> d_h_steps = std::move(d_dec_h);
    for (size_t l = n_layers; l-- > 0;) {
      const std::vector<std::vector<T>>* layer_inputs;
      std::vector<std::vector<T>> lower_h;
      if (l == 0) {
        layer_inputs = &act.xs_dec;
      } else {
        for (const auto& s : act.dec_traces[l - 1].steps) lower_h.push_back(s.h);
        layer_inputs = &lower_h;
      }
      std::vector<std::vector<T>> d_in;
      lstm_backward(model.decoder[l], *layer_inputs, act.dec_traces[l],
                    d_h_steps, nullptr, nullptr, grads.decoder[l], &d_in,
                    &d_h0[l], &d_c0[l]);
      d_h_steps = std::move(d_in);
    }
    if (model.embedding == EmbeddingMode::Learned) {
      for (size_t t = 0; t < prefix.size(); ++t) {
        T* row = grads.tgt_embed.row(prefix[t]);
        for (int j = 0; j < grads.tgt_embed.cols; ++j) {
          row[j] += d_h_steps[t][static_cast<size_t>(j)];
        }
      }
    }

    // Encoder BPTT. The top layer receives the attention grads per step
    // and the decoder initial-state grads on its final step.
    d_h_steps = std::move(d_enc_h);
    for (size_t l = n_layers; l-- > 0;) {
      const std::vector<std::vector<T>>* layer_inputs;
      std::vector<std::vector<T>> lower_h;
      if (l == 0) {
        layer_inputs = &act.xs_src;
      } else {
        for (const auto& s : act.enc_traces[l - 1].steps) lower_h.push_back(s.h);
        layer_inputs = &lower_h;
      }
      std::vector<std::vector<T>> d_in;
      lstm_backward(model.encoder[l], *layer_inputs, act.enc_traces[l],
                    d_h_steps, &d_h0[l], &d_c0[l], grads.encoder[l], &d_in,
                    nullptr, nullptr);
      d_h_steps = std::move(d_in);
    }
    if (model.embedding == EmbeddingMode::Learned) {
      for (size_t t = 0; t < act.src.size(); ++t) {
        T* row = grads.src_embed.row(act.src[t]);
        for (int j = 0; j < grads.src_embed.cols; ++j) {
          row[j] += d_h_steps[t][static_cast<size_t>(j)];
        }
      }
    }
  }

  const T loss = total.value() / static_cast<T>(total_steps);
  if (!std::isfinite(static_cast<double>(loss))) {
    raise(ErrorKind::NumericalError, "non-finite loss");
  }
  return loss;
}

// Greedy decoding: start from SOS, feed back the argmax, stop at EOS or
// max_len. SOS/EOS/PAD never appear in the returned indices.
template <class T>
std::vector<int> greedy_decode(const Seq2Seq<T>& model,
                               const std::vector<int>& source, int max_len) {
  const std::vector<int> src = detail::strip_trailing_pad(source);
  if (src.empty()) {
    raise(ErrorKind::EmptyInput, "greedy_decode: empty source");
  }
  std::vector<int> out;
  if (max_len <= 0) return out;

  const auto xs_src = detail::build_inputs(model, true, src);
  const auto enc_traces = stack_forward(model.encoder, xs_src);
  const LstmTrace<T>& enc_top = enc_traces.back();
  const int h_dim = model.decoder.back().hidden_dim;
  const T scale = T(1) / std::sqrt(static_cast<T>(h_dim));

  std::vector<std::vector<T>> h(model.decoder.size());
  std::vector<std::vector<T>> c(model.decoder.size());
  for (size_t l = 0; l < model.decoder.size(); ++l) {
    h[l] = enc_traces[l].final_h();
    c[l] = enc_traces[l].final_c();
  }

  int input = CharVocab::kSos;
  for (int step = 0; step < max_len; ++step) {
    std::vector<std::vector<T>> x =
        detail::build_inputs(model, false, std::vector<int>{input});
    std::vector<T>* in = &x[0];
    for (size_t l = 0; l < model.decoder.size(); ++l) {
      LstmStep<T> s = lstm_cell_forward(model.decoder[l], *in, h[l], c[l]);
      h[l] = std::move(s.h);
      c[l] = std::move(s.c);
      in = &h[l];
    }
    std::vector<T> logits(model.out_b);
    matvec_add(model.out_w, h.back(), logits);
    if (model.attention) {
      std::vector<T> scores(enc_top.steps.size());
      for (size_t s = 0; s < enc_top.steps.size(); ++s) {
        scores[s] = dot(h.back(), enc_top.steps[s].h) * scale;
      }
      softmax(scores);
      std::vector<T> ctx(static_cast<size_t>(h_dim), T(0));
      for (size_t s = 0; s < enc_top.steps.size(); ++s) {
        add_scaled(ctx, enc_top.steps[s].h, scores[s]);
      }
      matvec_add(model.ctx_w, ctx, logits);
    }
    int best = 0;
    for (size_t j = 1; j < logits.size(); ++j) {
      if (logits[j] > logits[static_cast<size_t>(best)]) {
        best = static_cast<int>(j);
      }
    }
    if (best == CharVocab::kEos) break;
    if (best != CharVocab::kPad && best != CharVocab::kSos) {
      out.push_back(best);
    }
    input = best;
  }
  return out;
}

}  // namespace codemix

#endif  // CODEMIX_SEQ2SEQ_HPP_
