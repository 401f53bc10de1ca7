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

#include "graphpe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphpe/error.hpp"

namespace graphpe {
namespace {

// m * p where every entry sums its nonzero terms in ascending order, so the
// result does not depend on how the nodes are numbered.
DenseMatrix ordered_product(const DenseMatrix& m, const DenseMatrix& p) {
  const std::size_t n = m.rows();
  DenseMatrix out(n, p.cols());
  std::vector<std::size_t> support;
  std::vector<double> terms;
  for (std::size_t j = 0; j < p.cols(); ++j) {
    const auto pcol = p.column(j);
    support.clear();
    for (std::size_t l = 0; l < pcol.size(); ++l) {
      if (pcol[l] != 0.0) support.push_back(l);
    }
    for (std::size_t i = 0; i < n; ++i) {
      terms.clear();
      for (std::size_t l : support) {
        const double t = m(i, l) * pcol[l];
        if (t != 0.0) terms.push_back(t);
      }
      out(i, j) = sorted_sum(terms);
    }
  }
  return out;
}


double off_diagonal_norm(const DenseMatrix& a) {
  double acc = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != c) acc += a(r, c) * a(r, c);
    }
  }
  return std::sqrt(acc);
}

void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    const double np = c * akp - s * akq;
    const double nq = s * akp + c * akq;
    a(k, p) = np;
    a(p, k) = np;
    a(k, q) = nq;
    a(q, k) = nq;
  }
  auto vp = v.column(p);
  auto vq = v.column(q);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = vp[k];
    const double y = vq[k];
    vp[k] = c * x - s * y;
    vq[k] = s * x + c * y;
  }
}

bool lexicographic_less(std::span<const double> a, std::span<const double> b) {
  return std::ranges::lexicographical_compare(a, b);
}

}  // namespace

void canonicalize_sign(std::span<double> v) {
  for (double x : v) {
    if (std::abs(x) > kSignCanonThreshold) {
      if (x < 0.0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

SymEigen sym_eig(const DenseMatrix& m, const JacobiOptions& options) {
  if (!m.square()) {
    fail(Errc::kNotSymmetric, "sym_eig: matrix is " + std::to_string(m.rows()) +
                                  "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  const double sym_tol = options.symmetry_tolerance * std::max(1.0, max_abs(m));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m(r, c) - m(c, r)) > sym_tol) {
        fail(Errc::kNotSymmetric, "sym_eig: entry (" + std::to_string(r) + "," +
                                      std::to_string(c) + ") is asymmetric");
      }
    }
  }

  DenseMatrix a = m;
  // Work on the exactly symmetrized input.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c + 1; r < n; ++r) {
      const double avg = 0.5 * (a(r, c) + a(c, r));
      a(r, c) = avg;
      a(c, r) = avg;
    }
  }
  DenseMatrix v = DenseMatrix::identity(n);
  const double threshold =
      options.off_diagonal_tolerance * std::max(1.0, frobenius_norm(a));

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, v, p, q);
      }
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    fail(Errc::kNoConvergence, "sym_eig: no convergence after " +
                                   std::to_string(options.max_sweeps) +
                                   " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t i, std::size_t j) {
    return a(i, i) < a(j, j);
  });

  SymEigen out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    auto dst = out.vectors.column(i);
    std::ranges::copy(v.column(order[i]), dst.begin());
    canonicalize_sign(dst);
  }

  // Order columns within clusters of equal eigenvalues. Eigenvalues stay
  // sorted; only the vectors move inside a cluster.
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n && out.values[end] - out.values[end - 1] <=
                          1e-9 * std::max(1.0, std::abs(out.values[end]))) {
      ++end;
    }
    if (end - begin > 1) {
      std::vector<std::vector<double>> cols;
      for (std::size_t i = begin; i < end; ++i) {
        auto c = out.vectors.column(i);
        cols.emplace_back(c.begin(), c.end());
      }
      std::ranges::sort(cols, [](const auto& x, const auto& y) {
        return lexicographic_less(x, y);
      });
      for (std::size_t i = begin; i < end; ++i) {
        std::ranges::copy(cols[i - begin], out.vectors.column(i).begin());
      }
    }
    begin = end;
  }
  return out;
}

std::vector<std::vector<double>> mat_power_diagonals(const DenseMatrix& p,
                                                     std::size_t k) {
  if (!p.square()) fail(Errc::kShapeMismatch, "mat_power_diagonals: not square");
  std::vector<std::vector<double>> out;
  out.reserve(k);
  DenseMatrix power = p;
  for (std::size_t step = 1; step <= k; ++step) {
    if (step > 1) power = ordered_product(power, p);
    std::vector<double> diag(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) diag[i] = power(i, i);
    out.push_back(std::move(diag));
  }
  return out;
}

std::vector<DenseMatrix> matrix_powers(const DenseMatrix& p, std::size_t count) {
  if (!p.square()) fail(Errc::kShapeMismatch, "matrix_powers: not square");
  std::vector<DenseMatrix> out;
  out.reserve(count);
  for (std::size_t step = 0; step < count; ++step) {
    if (step == 0) {
      out.push_back(DenseMatrix::identity(p.rows()));
    } else if (step == 1) {
      out.push_back(p);
    } else {
      out.push_back(ordered_product(out.back(), p));
    }
  }
  return out;
}

LuDecomposition::LuDecomposition(const DenseMatrix& a, double pivot_tolerance)
    : lu_(a), pivots_(a.rows()) {
  if (!a.square()) fail(Errc::kShapeMismatch, "LU: matrix is not square");
  const std::size_t n = a.rows();
  const double tol = pivot_tolerance * std::max(1.0, max_abs(a));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu_(r, k)) > best) {
        best = std::abs(lu_(r, k));
        pivot = r;
      }
    }
    if (best < tol) {
      fail(Errc::kSingular, "LU: pivot " + std::to_string(k) + " below tolerance");
    }
    pivots_[k] = pivot;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(pivot, c));
    }
    const double inv = 1.0 / lu_(k, k);
    for (std::size_t r = k + 1; r < n; ++r) lu_(r, k) *= inv;
    for (std::size_t c = k + 1; c < n; ++c) {
      const double ukc = lu_(k, c);
      if (ukc == 0.0) continue;
      auto col = lu_.column(c);
      auto lcol = lu_.column(k);
      for (std::size_t r = k + 1; r < n; ++r) col[r] -= lcol[r] * ukc;
    }
  }
}

std::vector<double> LuDecomposition::solve(std::span<const double> b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) fail(Errc::kShapeMismatch, "LU solve: rhs size mismatch");
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) std::swap(x[k], x[pivots_[k]]);
  for (std::size_t c = 0; c < n; ++c) {
    const double xc = x[c];
    if (xc == 0.0) continue;
    auto col = lu_.column(c);
    for (std::size_t r = c + 1; r < n; ++r) x[r] -= col[r] * xc;
  }
  for (std::size_t c = n; c-- > 0;) {
    x[c] /= lu_(c, c);
    const double xc = x[c];
    if (xc == 0.0) continue;
    auto col = lu_.column(c);
    for (std::size_t r = 0; r < c; ++r) x[r] -= col[r] * xc;
  }
  return x;
}

std::vector<double> linear_solve(const DenseMatrix& a, std::span<const double> b) {
  const LuDecomposition lu(a);
  std::vector<double> x = lu.solve(b);
  const double bound = 1e-9 * max_abs(b);
  auto residual = [&](const std::vector<double>& candidate) {
    std::vector<double> r = multiply(a, candidate);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    return r;
  };
  std::vector<double> r = residual(x);
  if (max_abs(r) <= bound) return x;
  const std::vector<double> dx = lu.solve(r);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  if (max_abs(residual(x)) > bound) {
    fail(Errc::kSingular, "linear_solve: residual bound not met (ill-conditioned)");
  }
  return x;
}

DenseMatrix reconstruct(const SymEigen& eig) {
  const std::size_t n = eig.values.size();
  DenseMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto u = eig.vectors.column(k);
    const double lambda = eig.values[k];
    for (std::size_t c = 0; c < n; ++c) {
      const double f = lambda * u[c];
      if (f == 0.0) continue;
      auto col = out.column(c);
      for (std::size_t r = 0; r < n; ++r) col[r] += u[r] * f;
    }
  }
  return out;
}

DenseMatrix spectral_exp(const DenseMatrix& m, double scale) {
  SymEigen eig = sym_eig(m);
  for (double& lambda : eig.values) lambda = std::exp(scale * lambda);
  DenseMatrix out = reconstruct(eig);
  const std::size_t n = out.rows();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c + 1; r < n; ++r) {
      const double avg = 0.5 * (out(r, c) + out(c, r));
      out(r, c) = avg;
      out(c, r) = avg;
    }
  }
  return out;
}

}  // namespace graphpe
