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

#ifndef CODEMIX_NUMERIC_HPP_
#define CODEMIX_NUMERIC_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "codemix/error.hpp"

namespace codemix {

#ifdef CODEMIX_REAL_FLOAT32
using real_t = float;
#else
using real_t = double;
#endif

// Dense row-major matrix.
template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> v;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, T(0)) {}

  T& operator()(int r, int c) {
    return v[static_cast<size_t>(r) * cols + c];
  }
  const T& operator()(int r, int c) const {
    return v[static_cast<size_t>(r) * cols + c];
  }

  const T* row(int r) const { return v.data() + static_cast<size_t>(r) * cols; }
  T* row(int r) { return v.data() + static_cast<size_t>(r) * cols; }

  size_t size() const { return v.size(); }
  void fill(T value) { std::fill(v.begin(), v.end(), value); }
};

using Matrix = Mat<real_t>;

template <class T, class U>
Mat<T> convert_mat(const Mat<U>& m) {
  Mat<T> out(m.rows, m.cols);
  for (size_t i = 0; i < m.v.size(); ++i) out.v[i] = static_cast<T>(m.v[i]);
  return out;
}

// y += A x
template <class T>
void matvec_add(const Mat<T>& a, const std::vector<T>& x, std::vector<T>& y) {
  if (static_cast<int>(x.size()) != a.cols ||
      static_cast<int>(y.size()) != a.rows) {
    raise(ErrorKind::ShapeError,
          "matvec: " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
              " with x[" + std::to_string(x.size()) + "], y[" +
              std::to_string(y.size()) + "]");
  }
  const T* p = a.v.data();
  for (int r = 0; r < a.rows; ++r) {
    T acc = T(0);
    for (int c = 0; c < a.cols; ++c) acc += p[c] * x[static_cast<size_t>(c)];
    y[static_cast<size_t>(r)] += acc;
    p += a.cols;
  }
}

// x += A^T y
template <class T>
void matvec_transpose_add(const Mat<T>& a, const std::vector<T>& y,
                          std::vector<T>& x) {
  if (static_cast<int>(x.size()) != a.cols ||
      static_cast<int>(y.size()) != a.rows) {
    raise(ErrorKind::ShapeError, "matvec_transpose: shape mismatch");
  }
  const T* p = a.v.data();
  for (int r = 0; r < a.rows; ++r) {
    const T yr = y[static_cast<size_t>(r)];
    if (yr != T(0)) {
      for (int c = 0; c < a.cols; ++c) x[static_cast<size_t>(c)] += p[c] * yr;
    }
    p += a.cols;
  }
}

// A += y x^T
template <class T>
void outer_add(Mat<T>& a, const std::vector<T>& y, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != a.cols ||
      static_cast<int>(y.size()) != a.rows) {
    raise(ErrorKind::ShapeError, "outer_add: shape mismatch");
  }
  T* p = a.v.data();
  for (int r = 0; r < a.rows; ++r) {
    const T yr = y[static_cast<size_t>(r)];
    if (yr != T(0)) {
      for (int c = 0; c < a.cols; ++c) p[c] += yr * x[static_cast<size_t>(c)];
    }
    p += a.cols;
  }
}

template <class T>
void add_scaled(std::vector<T>& y, const std::vector<T>& x, T scale) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += scale * x[i];
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T acc = T(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Compensated accumulator; keeps loss sums reproducible to a few ulps,
// which the finite-difference checker depends on.
template <class T>
class StableSum {
 public:
  void add(T value) {
    const T t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = T(0);
  T comp_ = T(0);
};

template <class T>
T sigmoid(T z) {
  if (z >= T(0)) {
    return T(1) / (T(1) + std::exp(-z));
  }
  const T e = std::exp(z);
  return e / (T(1) + e);
}

// Numerically stable binary cross-entropy from the raw logit.
template <class T>
T bce_from_logit(T logit, T target) {
  const T max_part = logit > T(0) ? logit : T(0);
  return max_part - logit * target + std::log1p(std::exp(-std::abs(logit)));
}

// In-place softmax.
template <class T>
void softmax(std::vector<T>& z) {
  T max_z = z[0];
  for (T x : z) max_z = std::max(max_z, x);
  T sum = T(0);
  for (T& x : z) {
    x = std::exp(x - max_z);
    sum += x;
  }
  for (T& x : z) x /= sum;
}

}  // namespace codemix

#endif  // CODEMIX_NUMERIC_HPP_
