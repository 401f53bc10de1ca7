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

#include "graphpe/generators.hpp"

#include <numeric>

#include "graphpe/error.hpp"

namespace graphpe {

double uniform_real(std::mt19937_64& gen, double lo, double hi) {
  const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::size_t uniform_index(std::mt19937_64& gen, std::size_t bound) {
  if (bound == 0) fail(Errc::kIndexOutOfRange, "uniform_index: empty range");
  const std::uint64_t b = bound;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t draw = gen();
  while (draw >= limit) draw = gen();
  return static_cast<std::size_t>(draw % b);
}

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen,
                          double lo, double hi) {
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform_real(gen, lo, hi);
  }
  return m;
}

DenseMatrix random_symmetric(std::size_t n, std::mt19937_64& gen) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = m(j, i) = uniform_real(gen, -1.0, 1.0);
    }
  }
  return m;
}

GritLayerParams random_grit_params(std::size_t node_dim, std::size_t edge_dim,
                                   std::mt19937_64& gen, Nonlinearity rho) {
  GritLayerParams p;
  p.w_v = random_matrix(node_dim, node_dim, gen);
  p.w_ev = random_matrix(node_dim, edge_dim, gen);
  p.attn_w.resize(edge_dim);
  for (double& w : p.attn_w) w = uniform_real(gen, -0.5, 0.5);
  p.edge_update.w_q = random_matrix(edge_dim, node_dim, gen);
  p.edge_update.w_k = random_matrix(edge_dim, node_dim, gen);
  p.edge_update.w_ew = random_matrix(edge_dim, edge_dim, gen);
  p.edge_update.w_eb = random_matrix(edge_dim, edge_dim, gen);
  p.edge_update.nonlinearity = rho;
  return p;
}

GatedGcnParams random_gatedgcn_params(std::size_t dim, std::mt19937_64& gen) {
  GatedGcnParams p;
  p.u = random_matrix(dim, dim, gen);
  p.v = random_matrix(dim, dim, gen);
  p.a = random_matrix(dim, dim, gen);
  p.b = random_matrix(dim, dim, gen);
  return p;
}

GineParams random_gine_params(std::size_t dim, std::mt19937_64& gen) {
  GineParams p;
  p.epsilon = uniform_real(gen, -0.5, 0.5);
  p.mlp.w1 = random_matrix(dim, dim, gen);
  p.mlp.b1.resize(dim);
  for (double& b : p.mlp.b1) b = uniform_real(gen, -0.5, 0.5);
  p.mlp.w2 = random_matrix(dim, dim, gen);
  p.mlp.b2.resize(dim);
  for (double& b : p.mlp.b2) b = uniform_real(gen, -0.5, 0.5);
  return p;
}

Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& gen) {
  std::vector<NodePair> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (uniform_real(gen, 0.0, 1.0) < p) edges.push_back({u, v});
    }
  }
  return Graph::build(edges, n, false);
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& gen) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_index(gen, i)]);
  }
  return perm;
}

Graph path_graph(std::size_t n) {
  std::vector<NodePair> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::build(edges, n, false);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(Errc::kIndexOutOfRange, "cycle_graph needs at least 3 nodes");
  std::vector<NodePair> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::build(edges, n, false);
}

Graph complete_graph(std::size_t n) {
  std::vector<NodePair> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::build(edges, n, false);
}

Graph star_graph(std::size_t leaves) {
  std::vector<NodePair> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::build(edges, leaves + 1, false);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.directed() != b.directed()) {
    fail(Errc::kDirectedUnsupported, "disjoint_union: mixed directedness");
  }
  std::vector<NodePair> arcs;
  const std::size_t shift = a.num_nodes();
  for (std::size_t x = 0; x < a.num_arcs(); ++x) {
    arcs.push_back({a.arc_source(x), a.arc_target(x)});
  }
  for (std::size_t x = 0; x < b.num_arcs(); ++x) {
    arcs.push_back({b.arc_source(x) + shift, b.arc_target(x) + shift});
  }
  return Graph::from_arcs(arcs, a.num_nodes() + b.num_nodes(), a.directed(),
                         std::nullopt);
}

}  // namespace graphpe
