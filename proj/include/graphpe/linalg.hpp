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

#ifndef GRAPHPE_LINALG_HPP_
#define GRAPHPE_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "graphpe/matrix.hpp"

namespace graphpe {

// Eigendecomposition of a real symmetric matrix, M = U diag(values) U^T.
//
// Eigenvalues are ascending and column i of `vectors` pairs with value i.
// Every column is sign-canonical: its first entry with magnitude above
// kSignCanonThreshold is positive. Columns inside a cluster of (numerically)
// equal eigenvalues are ordered lexicographically, so the result is a pure
// function of the input matrix.
struct SymEigen {
  std::vector<double> values;
  DenseMatrix vectors;
};

inline constexpr double kSignCanonThreshold = 1e-10;

struct JacobiOptions {
  // Convergence when the off-diagonal Frobenius norm falls below
  // off_diagonal_tolerance * max(1, ||M||_F).
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
  // Asymmetry tolerance, relative to max(1, max|M_ij|).
  double symmetry_tolerance = 1e-10;
};

// Cyclic Jacobi rotations. Throws kNotSymmetric or kNoConvergence.
SymEigen sym_eig(const DenseMatrix& m, const JacobiOptions& options = {});

// Flips the sign of `v` so that its first entry above the threshold is
// positive. Zero vectors are left alone.
void canonicalize_sign(std::span<double> v);

// diag(P^1), ..., diag(P^K), by repeated multiplication. Each entry sums its
// terms in sorted order, so outputs are exactly permutation equivariant.
std::vector<std::vector<double>> mat_power_diagonals(const DenseMatrix& p,
                                                     std::size_t k);

// P^0, ..., P^(count-1), with the same summation order.
std::vector<DenseMatrix> matrix_powers(const DenseMatrix& p, std::size_t count);

// LU factorization with partial pivoting. Reusable across right-hand sides.
class LuDecomposition {
 public:
  // Throws kSingular when a pivot magnitude is below
  // pivot_tolerance * max(1, max|A_ij|).
  explicit LuDecomposition(const DenseMatrix& a, double pivot_tolerance = 1e-12);

  std::size_t size() const noexcept { return lu_.rows(); }
  std::vector<double> solve(std::span<const double> b) const;

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> pivots_;
};

// Solves a x = b. The returned x satisfies ||a x - b||_inf <= 1e-9 ||b||_inf;
// one round of iterative refinement is applied when the first solve misses.
std::vector<double> linear_solve(const DenseMatrix& a, std::span<const double> b);

// U exp(scale * Lambda) U^T for symmetric m.
DenseMatrix spectral_exp(const DenseMatrix& m, double scale);

// Reassembles U diag(values) U^T.
DenseMatrix reconstruct(const SymEigen& eig);

}  // namespace graphpe

#endif  // GRAPHPE_LINALG_HPP_
