// Copyright 2026 The graphpe Authors
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

#include "graphpe/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphpe/error.hpp"

namespace graphpe {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

DenseMatrix DenseMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      fail(Errc::kShapeMismatch, "ragged row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<double> DenseMatrix::row(std::size_t r) const {
  std::vector<double> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

void DenseMatrix::set_row(std::size_t r, std::span<const double> values) {
  if (values.size() != cols_) {
    fail(Errc::kShapeMismatch, "set_row: width " + std::to_string(values.size()) +
                                   " != " + std::to_string(cols_));
  }
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.cols(), m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) t(c, r) = m(r, c);
  }
  return t;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(Errc::kShapeMismatch, "multiply: " + std::to_string(a.rows()) + "x" +
                                   std::to_string(a.cols()) + " * " +
                                   std::to_string(b.rows()) + "x" +
                                   std::to_string(b.cols()));
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto dst = out.column(j);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double bkj = b(k, j);
      if (bkj == 0.0) continue;
      auto src = a.column(k);
      for (std::size_t i = 0; i < a.rows(); ++i) dst[i] += src[i] * bkj;
    }
  }
  return out;
}

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) {
    fail(Errc::kShapeMismatch, "matvec: cols " + std::to_string(a.cols()) +
                                   " != " + std::to_string(x.size()));
  }
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (x[k] == 0.0) continue;
    auto col = a.column(k);
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += col[i] * x[k];
  }
  return y;
}

std::vector<double> multiply_transposed(const DenseMatrix& a,
                                        std::span<const double> x) {
  if (a.rows() != x.size()) {
    fail(Errc::kShapeMismatch, "matvec^T: rows " + std::to_string(a.rows()) +
                                   " != " + std::to_string(x.size()));
  }
  std::vector<double> y(a.cols(), 0.0);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    auto col = a.column(c);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) acc += col[i] * x[i];
    y[c] = acc;
  }
  return y;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(Errc::kShapeMismatch, "add: shapes differ");
  }
  DenseMatrix out = a;
  auto dst = out.data();
  auto src = b.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return out;
}

DenseMatrix scale(const DenseMatrix& a, double factor) {
  DenseMatrix out = a;
  for (double& v : out.data()) v *= factor;
  return out;
}

DenseMatrix hconcat(const DenseMatrix& left, const DenseMatrix& right) {
  if (left.rows() != right.rows()) {
    fail(Errc::kShapeMismatch, "hconcat: row counts differ");
  }
  DenseMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t c = 0; c < left.cols(); ++c) {
    std::ranges::copy(left.column(c), out.column(c).begin());
  }
  for (std::size_t c = 0; c < right.cols(); ++c) {
    std::ranges::copy(right.column(c), out.column(left.cols() + c).begin());
  }
  return out;
}

double max_abs(const DenseMatrix& m) { return max_abs(m.data()); }

double max_abs(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(Errc::kShapeMismatch, "max_abs_diff: shapes differ");
  }
  double best = 0.0;
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) {
    best = std::max(best, std::abs(x[i] - y[i]));
  }
  return best;
}

double frobenius_norm(const DenseMatrix& m) {
  double acc = 0.0;
  for (double x : m.data()) acc += x * x;
  return std::sqrt(acc);
}

bool all_finite(const DenseMatrix& m) {
  return std::ranges::all_of(m.data(), [](double x) { return std::isfinite(x); });
}

double sorted_sum(std::span<double> terms) {
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

}  // namespace graphpe
