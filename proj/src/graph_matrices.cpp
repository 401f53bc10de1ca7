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

#include "graphpe/graph_matrices.hpp"

#include <cmath>

#include "graphpe/error.hpp"

namespace graphpe {
namespace {

void require_undirected(const Graph& g, const char* what) {
  if (g.directed()) {
    fail(Errc::kDirectedUnsupported,
         std::string(what) + " is defined for undirected graphs only");
  }
}

}  // namespace

DenseMatrix adjacency_matrix(const Graph& g) {
  check_dense_capacity(g.num_nodes(), "adjacency_matrix");
  DenseMatrix a(g.num_nodes(), g.num_nodes());
  for (std::size_t arc = 0; arc < g.num_arcs(); ++arc) {
    a(g.arc_source(arc), g.arc_target(arc)) = 1.0;
  }
  return a;
}

std::vector<double> degree_vector(const Graph& g) {
  std::vector<double> d(g.num_nodes());
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    d[v] = static_cast<double>(g.degree(v));
  }
  return d;
}

DenseMatrix walk_matrix(const Graph& g) {
  check_dense_capacity(g.num_nodes(), "walk_matrix");
  DenseMatrix p(g.num_nodes(), g.num_nodes());
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    const std::size_t deg = g.degree(v);
    if (deg == 0) continue;
    const double w = 1.0 / static_cast<double>(deg);
    for (std::size_t u : g.neighbors(v)) p(v, u) = w;
  }
  return p;
}

DenseMatrix laplacian(const Graph& g) {
  require_undirected(g, "laplacian");
  DenseMatrix l = adjacency_matrix(g);
  for (double& x : l.data()) x = -x;
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    l(v, v) += static_cast<double>(g.degree(v));
  }
  return l;
}

DenseMatrix normalized_laplacian(const Graph& g) {
  require_undirected(g, "normalized_laplacian");
  check_dense_capacity(g.num_nodes(), "normalized_laplacian");
  const std::size_t n = g.num_nodes();
  std::vector<double> inv_sqrt(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) > 0) {
      inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
    }
  }
  DenseMatrix l(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) > 0) l(v, v) = 1.0;
  }
  for (std::size_t arc = 0; arc < g.num_arcs(); ++arc) {
    const std::size_t u = g.arc_source(arc);
    const std::size_t v = g.arc_target(arc);
    l(u, v) -= inv_sqrt[u] * inv_sqrt[v];
  }
  return l;
}

DerivedMatrices derive_matrices(const Graph& g) {
  require_undirected(g, "derive_matrices");
  DerivedMatrices out;
  out.adjacency = adjacency_matrix(g);
  out.degree = degree_vector(g);
  out.laplacian = laplacian(g);
  out.norm_laplacian = normalized_laplacian(g);
  out.walk_matrix = walk_matrix(g);
  return out;
}

}  // namespace graphpe
