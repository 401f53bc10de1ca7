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

#include "graphpe/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string>

#include "graphpe/error.hpp"

namespace graphpe {
namespace {

std::atomic<std::size_t> g_dense_limit_override{0};

constexpr std::size_t kDefaultDenseLimit = 4096;

std::string pair_text(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

std::size_t dense_limit() {
  if (const std::size_t o = g_dense_limit_override.load(); o != 0) return o;
  if (const char* env = std::getenv("GRAPHPE_DENSE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultDenseLimit;
}

void set_dense_limit(std::optional<std::size_t> limit) {
  g_dense_limit_override.store(limit.value_or(0));
}

void check_dense_capacity(std::size_t num_nodes, std::string_view what) {
  const std::size_t limit = dense_limit();
  if (num_nodes > limit) {
    fail(Errc::kCapacityExceeded,
         std::string(what) + ": " + std::to_string(num_nodes) +
             " nodes exceeds dense limit " + std::to_string(limit));
  }
}

Graph Graph::build(std::span<const NodePair> edges, std::size_t num_nodes,
                   bool directed, const BuildOptions& options) {
  std::vector<NodePair> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& [u, v] : edges) {
    arcs.emplace_back(u, v);
    if (!directed && u != v) arcs.emplace_back(v, u);
  }
  return from_arcs(arcs, num_nodes, directed, std::nullopt, options);
}

Graph Graph::build(std::span<const NodePair> edges, std::size_t num_nodes,
                   bool directed, const DenseMatrix& edge_features,
                   const BuildOptions& options) {
  if (edge_features.rows() != edges.size()) {
    fail(Errc::kShapeMismatch, "edge feature rows " +
                                   std::to_string(edge_features.rows()) +
                                   " != edge count " + std::to_string(edges.size()));
  }
  std::vector<NodePair> arcs;
  std::vector<std::size_t> source_row;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    arcs.emplace_back(u, v);
    source_row.push_back(i);
    if (!directed && u != v) {
      arcs.emplace_back(v, u);
      source_row.push_back(i);
    }
  }
  DenseMatrix arc_features(arcs.size(), edge_features.cols());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t c = 0; c < edge_features.cols(); ++c) {
      arc_features(a, c) = edge_features(source_row[a], c);
    }
  }
  return from_arcs(arcs, num_nodes, directed, arc_features, options);
}

Graph Graph::from_arcs(std::span<const NodePair> arcs, std::size_t num_nodes,
                       bool directed,
                       const std::optional<DenseMatrix>& arc_features,
                       const BuildOptions& options) {
  if (arc_features && arc_features->rows() != arcs.size()) {
    fail(Errc::kShapeMismatch, "arc feature rows " +
                                   std::to_string(arc_features->rows()) +
                                   " != arc count " + std::to_string(arcs.size()));
  }
  for (const auto& [u, v] : arcs) {
    if (u >= num_nodes || v >= num_nodes) {
      fail(Errc::kIndexOutOfRange, "edge " + pair_text(u, v) + " with " +
                                       std::to_string(num_nodes) + " nodes");
    }
    if (u == v && !options.allow_self_loops) {
      fail(Errc::kSelfLoop, "self-loop at node " + std::to_string(u));
    }
  }

  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::sort(order, [&](std::size_t a, std::size_t b) {
    return arcs[a] < arcs[b];
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (arcs[order[i]] == arcs[order[i - 1]]) {
      const auto [u, v] = arcs[order[i]];
      fail(Errc::kDuplicateEdge, "duplicate edge " + pair_text(u, v));
    }
  }

  Graph g;
  g.num_nodes_ = num_nodes;
  g.directed_ = directed;
  g.allow_self_loops_ = options.allow_self_loops;
  g.offsets_.assign(num_nodes + 1, 0);
  g.targets_.resize(arcs.size());
  g.sources_.resize(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [u, v] = arcs[order[i]];
    g.sources_[i] = u;
    g.targets_[i] = v;
    ++g.offsets_[u + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  if (arc_features) {
    DenseMatrix sorted(arcs.size(), arc_features->cols());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t c = 0; c < sorted.cols(); ++c) {
        sorted(i, c) = (*arc_features)(order[i], c);
      }
    }
    g.edge_features_ = std::move(sorted);
  }

  if (!directed) {
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
      const std::size_t u = g.sources_[a];
      const std::size_t v = g.targets_[a];
      const auto back = g.find_arc(v, u);
      if (!back) {
        fail(Errc::kEdgeSetMismatch,
             "undirected arc " + pair_text(u, v) + " lacks its reverse");
      }
      if (g.edge_features_) {
        for (std::size_t c = 0; c < g.edge_features_->cols(); ++c) {
          if ((*g.edge_features_)(a, c) != (*g.edge_features_)(*back, c)) {
            fail(Errc::kEdgeSetMismatch, "undirected arc " + pair_text(u, v) +
                                             " has asymmetric features");
          }
        }
      }
    }
  }
  return g;
}

std::size_t Graph::num_edges() const noexcept {
  if (directed_) return num_arcs();
  std::size_t loops = 0;
  for (std::size_t a = 0; a < num_arcs(); ++a) {
    if (sources_[a] == targets_[a]) ++loops;
  }
  return loops + (num_arcs() - loops) / 2;
}

std::span<const std::size_t> Graph::neighbors(std::size_t v) const {
  return std::span<const std::size_t>(targets_).subspan(
      offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::degree(std::size_t v) const {
  return offsets_[v + 1] - offsets_[v];
}

std::optional<std::size_t> Graph::find_arc(std::size_t u, std::size_t v) const {
  if (u >= num_nodes_) return std::nullopt;
  const auto row = neighbors(u);
  const auto it = std::ranges::lower_bound(row, v);
  if (it == row.end() || *it != v) return std::nullopt;
  return offsets_[u] + static_cast<std::size_t>(it - row.begin());
}

Graph Graph::with_node_features(DenseMatrix features) const {
  if (features.rows() != num_nodes_) {
    fail(Errc::kShapeMismatch, "node feature rows " +
                                   std::to_string(features.rows()) +
                                   " != node count " + std::to_string(num_nodes_));
  }
  Graph g = *this;
  g.node_features_ = std::move(features);
  return g;
}

Graph Graph::with_edge_features(DenseMatrix arc_features) const {
  std::vector<NodePair> arcs;
  arcs.reserve(num_arcs());
  for (std::size_t a = 0; a < num_arcs(); ++a) {
    arcs.emplace_back(sources_[a], targets_[a]);
  }
  Graph g = from_arcs(arcs, num_nodes_, directed_, std::move(arc_features),
                      BuildOptions{allow_self_loops_});
  g.node_features_ = node_features_;
  return g;
}

Graph Graph::without_features() const {
  Graph g = *this;
  g.node_features_.reset();
  g.edge_features_.reset();
  g.rewired_ = false;
  return g;
}

std::vector<NodePair> Graph::edge_pairs() const {
  std::vector<NodePair> out;
  for (std::size_t a = 0; a < num_arcs(); ++a) {
    if (directed_ || sources_[a] <= targets_[a]) {
      out.emplace_back(sources_[a], targets_[a]);
    }
  }
  return out;
}

std::optional<DenseMatrix> Graph::edge_pair_features() const {
  if (!edge_features_) return std::nullopt;
  std::vector<std::size_t> rows;
  for (std::size_t a = 0; a < num_arcs(); ++a) {
    if (directed_ || sources_[a] <= targets_[a]) rows.push_back(a);
  }
  DenseMatrix out(rows.size(), edge_features_->cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      out(i, c) = (*edge_features_)(rows[i], c);
    }
  }
  return out;
}

DenseMatrix permute_rows(const DenseMatrix& m, std::span<const std::size_t> perm) {
  if (perm.size() != m.rows()) {
    fail(Errc::kSizeMismatch, "permutation size " + std::to_string(perm.size()) +
                                  " != rows " + std::to_string(m.rows()));
  }
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(perm[r], c) = m(r, c);
  }
  return out;
}

DenseMatrix permute_arc_rows(const Graph& g, const DenseMatrix& arc_rows,
                             std::span<const std::size_t> perm) {
  if (arc_rows.rows() != g.num_arcs() || perm.size() != g.num_nodes()) {
    fail(Errc::kSizeMismatch, "permute_arc_rows: size mismatch");
  }
  std::vector<NodePair> arcs;
  for (std::size_t a = 0; a < g.num_arcs(); ++a) {
    arcs.emplace_back(perm[g.arc_source(a)], perm[g.arc_target(a)]);
  }
  // Directed view, so asymmetric rows of undirected graphs are accepted.
  const Graph moved = Graph::from_arcs(arcs, g.num_nodes(), true, arc_rows,
                                       BuildOptions{g.allows_self_loops()});
  return *moved.edge_features();
}

Graph permute(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.num_nodes()) {
    fail(Errc::kSizeMismatch, "permutation size " + std::to_string(perm.size()) +
                                  " != nodes " + std::to_string(g.num_nodes()));
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) {
      fail(Errc::kIndexOutOfRange, "not a permutation");
    }
    seen[p] = true;
  }
  std::vector<NodePair> arcs;
  arcs.reserve(g.num_arcs());
  for (std::size_t a = 0; a < g.num_arcs(); ++a) {
    arcs.emplace_back(perm[g.arc_source(a)], perm[g.arc_target(a)]);
  }
  Graph out = Graph::from_arcs(arcs, g.num_nodes(), g.directed(),
                               g.edge_features(),
                               BuildOptions{g.allows_self_loops()});
  if (g.node_features()) {
    out = out.with_node_features(permute_rows(*g.node_features(), perm));
  }
  out.rewired_ = g.rewired();
  return out;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.num_nodes();
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t others = 0;
    for (std::size_t u : g.neighbors(v)) {
      if (u != v) ++others;
    }
    if (others != n - 1) return false;
  }
  return true;
}

Graph complete_rewire(const Graph& g) {
  if (g.rewired()) return g;
  const std::size_t n = g.num_nodes();
  check_dense_capacity(n, "complete_rewire");
  const std::size_t in_cols = g.edge_features() ? g.edge_features()->cols() : 0;

  std::vector<NodePair> arcs;
  arcs.reserve(n * (n > 0 ? n - 1 : 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  DenseMatrix features(arcs.size(), in_cols + 1);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const auto [u, v] = arcs[a];
    const auto original = g.find_arc(u, v);
    if (original) {
      for (std::size_t c = 0; c < in_cols; ++c) {
        features(a, c) = (*g.edge_features())(*original, c);
      }
    } else {
      features(a, in_cols) = 1.0;
    }
  }
  // A directed input can leave (u, v) original and (v, u) virtual; the
  // result is then directed as well.
  Graph out = Graph::from_arcs(arcs, n, g.directed(), features);
  if (g.node_features()) out.node_features_ = g.node_features();
  out.rewired_ = true;
  return out;
}

std::size_t count_components(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n;
  for (std::size_t a = 0; a < g.num_arcs(); ++a) {
    const std::size_t ru = find(g.arc_source(a));
    const std::size_t rv = find(g.arc_target(a));
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components;
}

}  // namespace graphpe
