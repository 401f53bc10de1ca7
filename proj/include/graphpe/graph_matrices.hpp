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

#ifndef GRAPHPE_GRAPH_MATRICES_HPP_
#define GRAPHPE_GRAPH_MATRICES_HPP_

#include <vector>

#include "graphpe/graph.hpp"
#include "graphpe/matrix.hpp"

namespace graphpe {

// Dense matrices derived from a graph. Degree-0 nodes get zero rows in
// D^{-1} and D^{-1/2}, so their walk-matrix row is zero and their diagonal
// entry of the normalized Laplacian is 0 (L_sym = D^{-1/2} (D - A) D^{-1/2}).
struct DerivedMatrices {
  DenseMatrix adjacency;
  std::vector<double> degree;
  DenseMatrix laplacian;       // D - A
  DenseMatrix norm_laplacian;  // I - D^{-1/2} A D^{-1/2} on non-isolated nodes
  DenseMatrix walk_matrix;     // D^{-1} A
};

// Undirected graphs only (kDirectedUnsupported otherwise).
DerivedMatrices derive_matrices(const Graph& g);

DenseMatrix adjacency_matrix(const Graph& g);
// Out-degree per node.
std::vector<double> degree_vector(const Graph& g);
// D^{-1} A with out-degrees; valid for directed graphs.
DenseMatrix walk_matrix(const Graph& g);
// Undirected only.
DenseMatrix laplacian(const Graph& g);
DenseMatrix normalized_laplacian(const Graph& g);

}  // namespace graphpe

#endif  // GRAPHPE_GRAPH_MATRICES_HPP_
