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

#include <algorithm>
#include <cmath>
#include <string>

#include "graphpe/error.hpp"
#include "graphpe/layers.hpp"

namespace graphpe {
namespace {

void require_shape(const DenseMatrix& m, std::size_t rows, std::size_t cols,
                   const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    fail(Errc::kShapeMismatch, std::string(name) + " must be " +
                                   std::to_string(rows) + "x" + std::to_string(cols) +
                                   ", got " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()));
  }
}

double activate(double z, Nonlinearity f) {
  return f == Nonlinearity::kRelu ? std::max(0.0, z) : z;
}

double activate_grad(double z, Nonlinearity f) {
  if (f == Nonlinearity::kIdentity) return 1.0;
  return z > 0.0 ? 1.0 : 0.0;
}

// Row r of `m` as a vector.
std::vector<double> row_of(const DenseMatrix& m, std::size_t r) { return m.row(r); }

void outer_add(DenseMatrix& acc, std::span<const double> left,
               std::span<const double> right, double scale = 1.0) {
  for (std::size_t c = 0; c < right.size(); ++c) {
    const double f = scale * right[c];
    if (f == 0.0) continue;
    auto col = acc.column(c);
    for (std::size_t r = 0; r < left.size(); ++r) col[r] += left[r] * f;
  }
}

void check_inputs(const Graph& g, const DenseMatrix& x, const DenseMatrix& e_hat,
                  const GritLayerParams& p) {
  p.validate();
  if (x.rows() != g.num_nodes() || x.cols() != p.node_dim()) {
    fail(Errc::kShapeMismatch, "grit: x must be nodes x " +
                                   std::to_string(p.node_dim()));
  }
  if (e_hat.rows() != g.num_arcs()) {
    fail(Errc::kEdgeSetMismatch, "grit: edge rows " + std::to_string(e_hat.rows()) +
                                     " != arcs " + std::to_string(g.num_arcs()));
  }
  if (e_hat.cols() != p.edge_dim()) {
    fail(Errc::kShapeMismatch, "grit: edge width must be " +
                                   std::to_string(p.edge_dim()));
  }
}

// Intermediate values of the sparse forward pass, per arc.
struct ArcCache {
  std::vector<double> e;       // input edge vector
  std::vector<double> qk;      // W_Q x_i + W_K x_j
  std::vector<double> gate;    // W_Ew e
  std::vector<double> z;       // pre-activation
  std::vector<double> e_new;   // rho(z)
  std::vector<double> value;   // W_V x_j + W_EV e_new
  double logit = 0.0;
  double weight = 0.0;
};

std::vector<ArcCache> forward_cache(const Graph& g, const DenseMatrix& x,
                                    const DenseMatrix& e_hat,
                                    const GritLayerParams& p) {
  const std::size_t n = g.num_nodes();
  const EdgeUpdateSpec& eu = p.edge_update;
  std::vector<std::vector<double>> xq(n), xk(n), xv(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<double> xv_row = row_of(x, v);
    xq[v] = multiply(eu.w_q, xv_row);
    xk[v] = multiply(eu.w_k, xv_row);
    xv[v] = multiply(p.w_v, xv_row);
  }

  std::vector<ArcCache> cache(g.num_arcs());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t begin = g.arc_begin(i);
    const std::size_t end = begin + g.degree(i);
    double max_logit = -INFINITY;
    for (std::size_t a = begin; a < end; ++a) {
      const std::size_t j = g.arc_target(a);
      ArcCache& c = cache[a];
      c.e = row_of(e_hat, a);
      c.gate = multiply(eu.w_ew, c.e);
      const std::vector<double> bias = multiply(eu.w_eb, c.e);
      c.qk.resize(p.edge_dim());
      c.z.resize(p.edge_dim());
      c.e_new.resize(p.edge_dim());
      c.logit = 0.0;
      for (std::size_t f = 0; f < p.edge_dim(); ++f) {
        c.qk[f] = xq[i][f] + xk[j][f];
        c.z[f] = c.qk[f] * c.gate[f] + bias[f];
        c.e_new[f] = activate(c.z[f], eu.nonlinearity);
        c.logit += p.attn_w[f] * c.e_new[f];
      }
      c.value = multiply(p.w_ev, c.e_new);
      for (std::size_t f = 0; f < c.value.size(); ++f) c.value[f] += xv[j][f];
      max_logit = std::max(max_logit, c.logit);
    }
    std::vector<double> exps;
    for (std::size_t a = begin; a < end; ++a) {
      cache[a].weight = std::exp(cache[a].logit - max_logit);
      exps.push_back(cache[a].weight);
    }
    const double total = sorted_sum(exps);
    for (std::size_t a = begin; a < end; ++a) cache[a].weight /= total;
  }
  return cache;
}

}  // namespace

void GritLayerParams::validate() const {
  const std::size_t d = w_v.rows();
  const std::size_t de = attn_w.size();
  require_shape(w_v, d, d, "W_V");
  require_shape(w_ev, d, de, "W_EV");
  require_shape(edge_update.w_q, de, d, "W_Q");
  require_shape(edge_update.w_k, de, d, "W_K");
  require_shape(edge_update.w_ew, de, de, "W_Ew");
  require_shape(edge_update.w_eb, de, de, "W_Eb");
  const bool finite =
      all_finite(w_v) && all_finite(w_ev) && all_finite(edge_update.w_q) &&
      all_finite(edge_update.w_k) && all_finite(edge_update.w_ew) &&
      all_finite(edge_update.w_eb) &&
      std::ranges::all_of(attn_w, [](double v) { return std::isfinite(v); });
  if (!finite) fail(Errc::kShapeMismatch, "grit parameters must be finite");
}

SparseGritResult sparse_grit_forward(const Graph& g, const DenseMatrix& x,
                                     const DenseMatrix& e_hat,
                                     const GritLayerParams& p) {
  check_inputs(g, x, e_hat, p);
  const std::vector<ArcCache> cache = forward_cache(g, x, e_hat, p);
  SparseGritResult out{DenseMatrix(g.num_nodes(), p.node_dim()),
                       DenseMatrix(g.num_arcs(), p.edge_dim())};
  std::vector<double> terms;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    const std::size_t begin = g.arc_begin(i);
    const std::size_t end = begin + g.degree(i);
    for (std::size_t f = 0; f < p.node_dim(); ++f) {
      terms.clear();
      for (std::size_t a = begin; a < end; ++a) {
        terms.push_back(cache[a].weight * cache[a].value[f]);
      }
      out.nodes(i, f) = sorted_sum(terms);
    }
  }
  for (std::size_t a = 0; a < g.num_arcs(); ++a) out.edges.set_row(a, cache[a].e_new);
  return out;
}

std::vector<double> sparse_grit_attention(const Graph& g, const DenseMatrix& x,
                                          const DenseMatrix& e_hat,
                                          const GritLayerParams& p) {
  check_inputs(g, x, e_hat, p);
  const std::vector<ArcCache> cache = forward_cache(g, x, e_hat, p);
  std::vector<double> weights(cache.size());
  for (std::size_t a = 0; a < cache.size(); ++a) weights[a] = cache[a].weight;
  return weights;
}

DenseGritResult dense_grit_forward(const Graph& g, const DenseMatrix& x,
                                   const PairTensor& e_hat_full,
                                   const GritLayerParams& p) {
  p.validate();
  const std::size_t n = g.num_nodes();
  check_dense_capacity(n, "dense_grit_forward");
  const std::size_t d = p.node_dim();
  const std::size_t de = p.edge_dim();
  if (x.rows() != n || x.cols() != d) {
    fail(Errc::kShapeMismatch, "dense grit: x must be nodes x " + std::to_string(d));
  }
  if (e_hat_full.num_nodes() != n || e_hat_full.dim() != de) {
    fail(Errc::kShapeMismatch, "dense grit: pair tensor must be n x n x " +
                                   std::to_string(de));
  }
  const EdgeUpdateSpec& eu = p.edge_update;

  // acc += m * v, skipping zero entries of v.
  auto accumulate = [](const DenseMatrix& m, std::span<const double> v,
                       std::span<double> acc) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0.0) continue;
      const auto col = m.column(c);
      for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += col[r] * v[c];
    }
  };

  std::vector<std::vector<double>> xq(n, std::vector<double>(de));
  std::vector<std::vector<double>> xk(n, std::vector<double>(de));
  std::vector<std::vector<double>> xv(n, std::vector<double>(d));
  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<double> row = x.row(v);
    accumulate(eu.w_q, row, xq[v]);
    accumulate(eu.w_k, row, xk[v]);
    accumulate(p.w_v, row, xv[v]);
  }

  DenseGritResult out{DenseMatrix(n, d), PairTensor(n, de)};
  std::vector<double> logits(n);
  std::vector<std::vector<double>> values(n, std::vector<double>(d));
  std::vector<double> gate(de), bias(de);
  for (std::size_t i = 0; i < n && n > 1; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto e = e_hat_full.at(i, j);
      auto e_new = out.pairs.at(i, j);
      std::fill(gate.begin(), gate.end(), 0.0);
      std::fill(bias.begin(), bias.end(), 0.0);
      accumulate(eu.w_ew, e, gate);
      accumulate(eu.w_eb, e, bias);
      double logit = 0.0;
      for (std::size_t f = 0; f < de; ++f) {
        const double z = (xq[i][f] + xk[j][f]) * gate[f] + bias[f];
        e_new[f] = activate(z, eu.nonlinearity);
        logit += p.attn_w[f] * e_new[f];
      }
      logits[j] = logit;
      values[j] = xv[j];
      accumulate(p.w_ev, e_new, values[j]);
    }
    double max_logit = -INFINITY;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) max_logit = std::max(max_logit, logits[j]);
    }
    std::vector<double> weights;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) weights.push_back(std::exp(logits[j] - max_logit));
    }
    const double total = sorted_sum(weights);
    std::vector<double> terms;
    for (std::size_t r = 0; r < d; ++r) {
      terms.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) terms.push_back(std::exp(logits[j] - max_logit) / total * values[j][r]);
      }
      out.nodes(i, r) = sorted_sum(terms);
    }
  }
  return out;
}

GritGradients sparse_grit_backward(const Graph& g, const DenseMatrix& x,
                                   const DenseMatrix& e_hat,
                                   const GritLayerParams& p,
                                   const DenseMatrix& upstream) {
  check_inputs(g, x, e_hat, p);
  const std::size_t n = g.num_nodes();
  const std::size_t d = p.node_dim();
  const std::size_t de = p.edge_dim();
  if (upstream.rows() != n || upstream.cols() != d) {
    fail(Errc::kShapeMismatch, "grit backward: upstream must be nodes x " +
                                   std::to_string(d));
  }
  const EdgeUpdateSpec& eu = p.edge_update;
  const std::vector<ArcCache> cache = forward_cache(g, x, e_hat, p);

  GritGradients grad{DenseMatrix(n, d),      DenseMatrix(g.num_arcs(), de),
                     DenseMatrix(d, d),      DenseMatrix(d, de),
                     std::vector<double>(de), DenseMatrix(de, d),
                     DenseMatrix(de, d),     DenseMatrix(de, de),
                     DenseMatrix(de, de)};

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t begin = g.arc_begin(i);
    const std::size_t end = begin + g.degree(i);
    if (begin == end) continue;
    const std::vector<double> up = row_of(upstream, i);
    const std::vector<double> xi = row_of(x, i);

    // d<up, x_i>/d weight_a = up . value_a; softmax Jacobian on top.
    std::vector<double> dweight(end - begin);
    double mean = 0.0;
    for (std::size_t a = begin; a < end; ++a) {
      double dot = 0.0;
      for (std::size_t f = 0; f < d; ++f) dot += up[f] * cache[a].value[f];
      dweight[a - begin] = dot;
      mean += cache[a].weight * dot;
    }

    for (std::size_t a = begin; a < end; ++a) {
      const ArcCache& c = cache[a];
      const std::size_t j = g.arc_target(a);
      const std::vector<double> xj = row_of(x, j);
      const double dlogit = c.weight * (dweight[a - begin] - mean);

      // value = W_V x_j + W_EV e_new, scaled by weight.
      std::vector<double> dvalue(d);
      for (std::size_t f = 0; f < d; ++f) dvalue[f] = c.weight * up[f];
      outer_add(grad.w_v, dvalue, xj);
      outer_add(grad.w_ev, dvalue, c.e_new);
      const std::vector<double> dxj_value = multiply_transposed(p.w_v, dvalue);
      for (std::size_t f = 0; f < d; ++f) grad.x(j, f) += dxj_value[f];

      std::vector<double> de_new = multiply_transposed(p.w_ev, dvalue);
      for (std::size_t f = 0; f < de; ++f) {
        de_new[f] += dlogit * p.attn_w[f];
        grad.attn_w[f] += dlogit * c.e_new[f];
      }

      std::vector<double> dz(de), dqk(de), dgate(de);
      for (std::size_t f = 0; f < de; ++f) {
        dz[f] = de_new[f] * activate_grad(c.z[f], eu.nonlinearity);
        dqk[f] = dz[f] * c.gate[f];
        dgate[f] = dz[f] * c.qk[f];
      }
      outer_add(grad.w_q, dqk, xi);
      outer_add(grad.w_k, dqk, xj);
      outer_add(grad.w_ew, dgate, c.e);
      outer_add(grad.w_eb, dz, c.e);

      const std::vector<double> dxi = multiply_transposed(eu.w_q, dqk);
      const std::vector<double> dxj = multiply_transposed(eu.w_k, dqk);
      for (std::size_t f = 0; f < d; ++f) {
        grad.x(i, f) += dxi[f];
        grad.x(j, f) += dxj[f];
      }
      const std::vector<double> de_gate = multiply_transposed(eu.w_ew, dgate);
      const std::vector<double> de_bias = multiply_transposed(eu.w_eb, dz);
      for (std::size_t f = 0; f < de; ++f) grad.e_hat(a, f) += de_gate[f] + de_bias[f];
    }
  }
  return grad;
}

}  // namespace graphpe
