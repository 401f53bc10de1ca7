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

#include "graphpe/layers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphpe/error.hpp"

namespace graphpe {
namespace {

void require_square(const DenseMatrix& m, std::size_t d, const char* name) {
  if (m.rows() != d || m.cols() != d) {
    fail(Errc::kShapeMismatch, std::string(name) + " must be " + std::to_string(d) +
                                   "x" + std::to_string(d));
  }
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

std::vector<double> Mlp::apply(std::span<const double> x) const {
  if (identity()) return {x.begin(), x.end()};
  if (w1.cols() != x.size() || b1.size() != w1.rows() || w2.cols() != w1.rows() ||
      b2.size() != w2.rows()) {
    fail(Errc::kShapeMismatch, "mlp: inconsistent shapes");
  }
  std::vector<double> hidden = multiply(w1, x);
  for (std::size_t i = 0; i < hidden.size(); ++i) {
    hidden[i] = std::max(0.0, hidden[i] + b1[i]);
  }
  std::vector<double> out = multiply(w2, hidden);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b2[i];
  return out;
}

DenseMatrix gatedgcn_forward(const Graph& g, const DenseMatrix& x,
                             const GatedGcnParams& p) {
  const std::size_t n = g.num_nodes();
  const std::size_t d = x.cols();
  if (x.rows() != n) fail(Errc::kShapeMismatch, "gatedgcn: x rows != nodes");
  require_square(p.u, d, "gatedgcn U");
  require_square(p.v, d, "gatedgcn V");
  require_square(p.a, d, "gatedgcn A");
  require_square(p.b, d, "gatedgcn B");

  const DenseMatrix xt = transpose(x);  // column v is x_v
  std::vector<std::vector<double>> ux(n), vx(n), ax(n), bx(n);
  for (std::size_t v = 0; v < n; ++v) {
    ux[v] = multiply(p.u, xt.column(v));
    vx[v] = multiply(p.v, xt.column(v));
    ax[v] = multiply(p.a, xt.column(v));
    bx[v] = multiply(p.b, xt.column(v));
  }
  DenseMatrix out(n, d);
  std::vector<double> terms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      terms.clear();
      for (std::size_t j : g.neighbors(i)) {
        terms.push_back(sigmoid(ax[i][c] + bx[j][c]) * vx[j][c]);
      }
      out(i, c) = std::max(0.0, ux[i][c] + sorted_sum(terms));
    }
  }
  return out;
}

DenseMatrix gine_forward(const Graph& g, const DenseMatrix& x, const DenseMatrix& e,
                         const GineParams& p) {
  const std::size_t n = g.num_nodes();
  const std::size_t d = x.cols();
  if (x.rows() != n) fail(Errc::kShapeMismatch, "gine: x rows != nodes");
  if (e.rows() != g.num_arcs()) {
    fail(Errc::kEdgeSetMismatch, "gine: edge rows != arcs");
  }
  if (g.num_arcs() > 0 && e.cols() != d) {
    fail(Errc::kShapeMismatch, "gine: edge width must equal node width");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  std::size_t out_dim = 0;
  std::vector<double> terms;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> acc(d);
    for (std::size_t c = 0; c < d; ++c) {
      terms.clear();
      for (std::size_t a = g.arc_begin(i); a < g.arc_begin(i) + g.degree(i); ++a) {
        terms.push_back(std::max(0.0, x(g.arc_target(a), c) + e(a, c)));
      }
      acc[c] = (1.0 + p.epsilon) * x(i, c) + sorted_sum(terms);
    }
    rows.push_back(p.mlp.apply(acc));
    out_dim = rows.back().size();
  }
  DenseMatrix out(n, out_dim);
  for (std::size_t i = 0; i < n; ++i) out.set_row(i, rows[i]);
  return out;
}

DenseMatrix stack_layers(const Graph& g, const DenseMatrix& x, const DenseMatrix& e,
                         const std::vector<LayerSpec>& layers, Connection connection,
                         const StackOptions& options) {
  if (e.rows() != g.num_arcs()) {
    fail(Errc::kEdgeSetMismatch, "stack_layers: edge rows != arcs");
  }
  Graph topology = g;
  DenseMatrix edges = e;
  if (connection == Connection::kFullyConnected) {
    // Arc rows may be asymmetric (updated GRIT edges), so go through a
    // directed view with the same arc layout.
    std::vector<NodePair> arcs;
    arcs.reserve(g.num_arcs());
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
      arcs.emplace_back(g.arc_source(a), g.arc_target(a));
    }
    topology = complete_rewire(Graph::from_arcs(arcs, g.num_nodes(), true, e,
                                                BuildOptions{g.allows_self_loops()}));
    edges = *topology.edge_features();
  }

  DenseMatrix h = x;
  for (const LayerSpec& spec : layers) {
    DenseMatrix next;
    if (const auto* gated = std::get_if<GatedGcnParams>(&spec)) {
      next = gatedgcn_forward(topology, h, *gated);
    } else if (const auto* gine = std::get_if<GineParams>(&spec)) {
      next = gine_forward(topology, h, edges, *gine);
    } else {
      SparseGritResult r =
          sparse_grit_forward(topology, h, edges, std::get<GritLayerParams>(spec));
      next = std::move(r.nodes);
      edges = std::move(r.edges);
    }
    if (options.residual) {
      if (next.rows() != h.rows() || next.cols() != h.cols()) {
        fail(Errc::kShapeMismatch, "stack_layers: residual needs equal widths");
      }
      next = add(next, h);
    }
    h = std::move(next);
  }
  return h;
}

}  // namespace graphpe
