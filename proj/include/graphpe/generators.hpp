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

#ifndef GRAPHPE_GENERATORS_HPP_
#define GRAPHPE_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "graphpe/graph.hpp"
#include "graphpe/layers.hpp"
#include "graphpe/matrix.hpp"

namespace graphpe {

// Uniform double in [lo, hi) built from the top 53 bits of one draw, so the
// sequence is identical across standard libraries.
double uniform_real(std::mt19937_64& gen, double lo, double hi);
// Uniform integer in [0, bound).
std::size_t uniform_index(std::mt19937_64& gen, std::size_t bound);

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen,
                          double lo = -0.5, double hi = 0.5);
DenseMatrix random_symmetric(std::size_t n, std::mt19937_64& gen);

GritLayerParams random_grit_params(std::size_t node_dim, std::size_t edge_dim,
                                   std::mt19937_64& gen,
                                   Nonlinearity rho = Nonlinearity::kRelu);
GatedGcnParams random_gatedgcn_params(std::size_t dim, std::mt19937_64& gen);
GineParams random_gine_params(std::size_t dim, std::mt19937_64& gen);

// Erdos-Renyi G(n, p), undirected.
Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& gen);
// Uniform random permutation, perm[old] = new.
std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& gen);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Center 0 joined to `leaves` leaves.
Graph star_graph(std::size_t leaves);
// Disjoint union, nodes of `b` shifted by a.num_nodes(). Features dropped.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace graphpe

#endif  // GRAPHPE_GENERATORS_HPP_
