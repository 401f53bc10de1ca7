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

#ifndef GRAPHPE_WL_HPP_
#define GRAPHPE_WL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphpe/graph.hpp"
#include "graphpe/matrix.hpp"

namespace graphpe {

// Result of 1-WL color refinement. Colors in every round are canonical: the
// rank of the node's signature among the sorted distinct signatures of that
// round. They therefore depend only on the labeled graph up to isomorphism,
// never on node order or on hash values.
struct WLColoring {
  std::vector<std::size_t> colors;
  std::size_t rounds = 0;
  // history[0] is the initial coloring, history[r] the coloring after round r.
  std::vector<std::vector<std::size_t>> history;
  bool stable = false;

  std::size_t num_colors() const;
};

struct WLOptions {
  // Directed graphs: also hash the multiset of in-neighbor colors.
  bool include_in_neighbors = false;
};

// Each round replaces color(v) by the rank of
//   (color(v), sorted multiset of (edge_label(v,u), color(u)) over arcs v->u)
// and stops once a round leaves the partition unchanged or after max_rounds.
// `edge_labels` is indexed by arc id. Throws kSizeMismatch.
WLColoring wl_refine(const Graph& g,
                     std::optional<std::span<const std::int64_t>> init_colors,
                     std::optional<std::span<const std::int64_t>> edge_labels,
                     std::size_t max_rounds, const WLOptions& options = {});

// True iff the two colorings induce the same partition of the nodes.
bool partitions_equal(const WLColoring& a, const WLColoring& b);
bool partitions_equal(std::span<const std::size_t> a,
                      std::span<const std::size_t> b);

// Refines to stability and compares the stable colors of u and v.
bool wl_distinguishes_nodes(
    const Graph& g, std::size_t u, std::size_t v,
    std::optional<std::span<const std::int64_t>> edge_labels = std::nullopt);

// Maps each row of `rows` to an integer label: entries are bucketed to
// multiples of `bucket`, and distinct bucketed rows are ranked in sorted order.
std::vector<std::int64_t> quantize_rows(const DenseMatrix& rows, double bucket);

}  // namespace graphpe

#endif  // GRAPHPE_WL_HPP_
