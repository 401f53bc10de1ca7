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

#ifndef GRAPHPE_MATRIX_HPP_
#define GRAPHPE_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace graphpe {

// Dense real matrix stored column-major. Node feature matrices use one row per
// node; edge feature matrices use one row per stored arc.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static DenseMatrix identity(std::size_t n);
  // Row-wise literal, e.g. from_rows({{1, -1}, {-1, 1}}). Rows must agree.
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static DenseMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[c * rows_ + r];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[c * rows_ + r];
  }

  std::span<double> column(std::size_t c) {
    return {data_.data() + c * rows_, rows_};
  }
  std::span<const double> column(std::size_t c) const {
    return {data_.data() + c * rows_, rows_};
  }
  std::vector<double> row(std::size_t r) const;
  void set_row(std::size_t r, std::span<const double> values);

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  bool operator==(const DenseMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
// a * x for a column vector x.
std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);
// a^T * x.
std::vector<double> multiply_transposed(const DenseMatrix& a,
                                        std::span<const double> x);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, double factor);
// Horizontal concatenation; row counts must agree.
DenseMatrix hconcat(const DenseMatrix& left, const DenseMatrix& right);

double max_abs(const DenseMatrix& m);
double max_abs(std::span<const double> v);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double frobenius_norm(const DenseMatrix& m);
bool all_finite(const DenseMatrix& m);

// Sorts `terms` and adds them in ascending order, so the result depends only
// on the multiset of terms.
double sorted_sum(std::span<double> terms);

}  // namespace graphpe

#endif  // GRAPHPE_MATRIX_HPP_
