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

#ifndef GRAPHPE_LAYERS_HPP_
#define GRAPHPE_LAYERS_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "graphpe/graph.hpp"
#include "graphpe/matrix.hpp"
#include "graphpe/pe.hpp"

namespace graphpe {

// Node matrices have one row per node. Edge matrices have one row per stored
// arc of the graph they are used with, in CSR order. Every layer aggregates
// node i over the arcs (i, j) stored in CSR row i.

enum class Nonlinearity { kRelu, kIdentity };

// e'_ij = rho((W_Q x_i + W_K x_j) * (W_Ew e_ij) + W_Eb e_ij), elementwise
// product, rho per `nonlinearity`.
struct EdgeUpdateSpec {
  DenseMatrix w_q;   // d_e x d
  DenseMatrix w_k;   // d_e x d
  DenseMatrix w_ew;  // d_e x d_e
  DenseMatrix w_eb;  // d_e x d_e
  Nonlinearity nonlinearity = Nonlinearity::kRelu;
};

struct GritLayerParams {
  DenseMatrix w_v;             // d x d
  DenseMatrix w_ev;            // d x d_e
  std::vector<double> attn_w;  // d_e
  EdgeUpdateSpec edge_update;

  std::size_t node_dim() const noexcept { return w_v.rows(); }
  std::size_t edge_dim() const noexcept { return attn_w.size(); }
  // Throws kShapeMismatch on inconsistent shapes or non-finite entries.
  void validate() const;
};

struct GatedGcnParams {
  DenseMatrix u, v, a, b;  // d x d each
};

// Two-layer perceptron with a ReLU between the layers. Empty = identity.
struct Mlp {
  DenseMatrix w1;
  std::vector<double> b1;
  DenseMatrix w2;
  std::vector<double> b2;

  bool identity() const noexcept { return w1.empty() && w2.empty(); }
  std::vector<double> apply(std::span<const double> x) const;
};

struct GineParams {
  double epsilon = 0.0;
  Mlp mlp;
};

// x'_i = ReLU(U x_i + sum_j sigmoid(A x_i + B x_j) * V x_j).
DenseMatrix gatedgcn_forward(const Graph& g, const DenseMatrix& x,
                             const GatedGcnParams& p);

// x'_i = h((1 + eps) x_i + sum_j ReLU(x_j + e_ij)).
DenseMatrix gine_forward(const Graph& g, const DenseMatrix& x, const DenseMatrix& e,
                         const GineParams& p);

struct SparseGritResult {
  DenseMatrix nodes;  // n x d
  DenseMatrix edges;  // num_arcs x d_e, updated edge vectors
};

// Attention restricted to stored arcs:
//   x_i = sum_j softmax_j(attn_w . e'_ij) (W_V x_j + W_EV e'_ij)
// with the softmax taken per node over its own arcs (max-shifted). Nodes
// without arcs get a zero row. Throws kShapeMismatch, kEdgeSetMismatch.
SparseGritResult sparse_grit_forward(const Graph& g, const DenseMatrix& x,
                                     const DenseMatrix& e_hat,
                                     const GritLayerParams& p);

// Per-arc attention weights of the layer above.
std::vector<double> sparse_grit_attention(const Graph& g, const DenseMatrix& x,
                                          const DenseMatrix& e_hat,
                                          const GritLayerParams& p);

struct DenseGritResult {
  DenseMatrix nodes;
  PairTensor pairs;  // diagonal entries unused, left zero
};

// Same update with every node attending to all other nodes; pair (i, j) of
// `e_hat_full` is the edge vector of arc i -> j. Only the node count of `g`
// is used. Throws kCapacityExceeded, kShapeMismatch.
DenseGritResult dense_grit_forward(const Graph& g, const DenseMatrix& x,
                                   const PairTensor& e_hat_full,
                                   const GritLayerParams& p);

struct GritGradients {
  DenseMatrix x;
  DenseMatrix e_hat;
  DenseMatrix w_v;
  DenseMatrix w_ev;
  std::vector<double> attn_w;
  DenseMatrix w_q;
  DenseMatrix w_k;
  DenseMatrix w_ew;
  DenseMatrix w_eb;
};

// Gradients of <upstream, sparse_grit_forward(...).nodes>.
GritGradients sparse_grit_backward(const Graph& g, const DenseMatrix& x,
                                   const DenseMatrix& e_hat,
                                   const GritLayerParams& p,
                                   const DenseMatrix& upstream);

using LayerSpec = std::variant<GatedGcnParams, GineParams, GritLayerParams>;

enum class Connection { kSparse, kFullyConnected };

struct StackOptions {
  // x_{l+1} = f_l(x_l) + x_l when set; widths must then agree.
  bool residual = false;
};

// Applies `layers` in order. `e` has one row per arc of `g`. With
// kFullyConnected the graph (with `e` attached) goes through complete_rewire
// first, so edge widths grow by the virtual-edge indicator column. GRIT
// layers pass their updated edge vectors on to the next layer.
DenseMatrix stack_layers(const Graph& g, const DenseMatrix& x, const DenseMatrix& e,
                         const std::vector<LayerSpec>& layers, Connection connection,
                         const StackOptions& options = {});

}  // namespace graphpe

#endif  // GRAPHPE_LAYERS_HPP_
