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

#ifndef GRAPHPE_GRAPH_HPP_
#define GRAPHPE_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "graphpe/matrix.hpp"

namespace graphpe {

using NodePair = std::pair<std::size_t, std::size_t>;

struct BuildOptions {
  bool allow_self_loops = false;
};

// Immutable CSR graph. Row v of the CSR structure lists the targets of the
// arcs stored from v in strictly increasing order; arc ids are positions in
// that layout and index the rows of the edge feature matrix. Undirected graphs
// store both arcs of every edge with identical feature rows.
class Graph {
 public:
  Graph() = default;

  // One arc per pair for directed graphs, two for undirected ones. Throws
  // kIndexOutOfRange, kDuplicateEdge (also for a pair and its reverse in an
  // undirected list) and kSelfLoop.
  static Graph build(std::span<const NodePair> edges, std::size_t num_nodes,
                     bool directed, const BuildOptions& options = {});
  // `edge_features` has one row per input pair.
  static Graph build(std::span<const NodePair> edges, std::size_t num_nodes,
                     bool directed, const DenseMatrix& edge_features,
                     const BuildOptions& options = {});
  // Explicit arc list in any order; `arc_features` rows follow `arcs`.
  // Undirected graphs must list both directions.
  static Graph from_arcs(std::span<const NodePair> arcs, std::size_t num_nodes,
                         bool directed,
                         const std::optional<DenseMatrix>& arc_features,
                         const BuildOptions& options = {});

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_arcs() const noexcept { return targets_.size(); }
  // Undirected edges count each {u, v} once.
  std::size_t num_edges() const noexcept;
  bool directed() const noexcept { return directed_; }
  bool allows_self_loops() const noexcept { return allow_self_loops_; }

  std::span<const std::size_t> row_offsets() const noexcept { return offsets_; }
  std::span<const std::size_t> col_indices() const noexcept { return targets_; }
  std::span<const std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  std::size_t arc_begin(std::size_t v) const { return offsets_[v]; }
  std::size_t arc_source(std::size_t arc) const { return sources_[arc]; }
  std::size_t arc_target(std::size_t arc) const { return targets_[arc]; }
  std::optional<std::size_t> find_arc(std::size_t u, std::size_t v) const;

  const std::optional<DenseMatrix>& node_features() const noexcept {
    return node_features_;
  }
  const std::optional<DenseMatrix>& edge_features() const noexcept {
    return edge_features_;
  }
  Graph with_node_features(DenseMatrix features) const;
  // One row per arc in CSR order.
  Graph with_edge_features(DenseMatrix arc_features) const;
  Graph without_features() const;

  // Set on the output of complete_rewire; the last edge feature column is the
  // virtual-edge indicator.
  bool rewired() const noexcept { return rewired_; }

  // Undirected: each edge once as (min, max). Directed: every arc.
  std::vector<NodePair> edge_pairs() const;
  // Feature rows matching edge_pairs(), if edge features are present.
  std::optional<DenseMatrix> edge_pair_features() const;

  bool operator==(const Graph& other) const = default;

 private:
  friend Graph complete_rewire(const Graph& g);
  friend Graph permute(const Graph& g, std::span<const std::size_t> perm);

  std::size_t num_nodes_ = 0;
  bool directed_ = false;
  bool allow_self_loops_ = false;
  bool rewired_ = false;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> targets_;
  std::vector<std::size_t> sources_;
  std::optional<DenseMatrix> node_features_;
  std::optional<DenseMatrix> edge_features_;
};

// Relabels nodes: node v of `g` becomes perm[v]. Features move with their
// nodes and arcs.
Graph permute(const Graph& g, std::span<const std::size_t> perm);

// Rows of `m` reordered so row v moves to row perm[v].
DenseMatrix permute_rows(const DenseMatrix& m, std::span<const std::size_t> perm);

// Arc feature rows of `g` reordered to match the arc layout of permute(g, perm).
DenseMatrix permute_arc_rows(const Graph& g, const DenseMatrix& arc_rows,
                             std::span<const std::size_t> perm);

// Complete graph on the same nodes without self-loops. Original arcs keep
// their feature rows, added arcs get zeros; an indicator column (1 = added) is
// appended. Applying it to a rewired graph returns the graph unchanged.
// Throws kCapacityExceeded above the dense limit.
Graph complete_rewire(const Graph& g);

bool is_complete(const Graph& g);

// Number of connected components (weak connectivity for directed graphs).
std::size_t count_components(const Graph& g);

// Node-count cap for operations that materialize n x n data. Defaults to
// 4096, overridable through GRAPHPE_DENSE_LIMIT or set_dense_limit().
std::size_t dense_limit();
void set_dense_limit(std::optional<std::size_t> limit);
void check_dense_capacity(std::size_t num_nodes, std::string_view what);

}  // namespace graphpe

#endif  // GRAPHPE_GRAPH_HPP_
