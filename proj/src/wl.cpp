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

#include "graphpe/wl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "graphpe/error.hpp"

namespace graphpe {
namespace {

using Signature = std::vector<std::int64_t>;

template <typename T>
std::vector<std::size_t> dense_ranks(const std::vector<T>& keys) {
  std::vector<T> distinct = keys;
  std::ranges::sort(distinct);
  const auto [first, last] = std::ranges::unique(distinct);
  distinct.erase(first, last);
  std::vector<std::size_t> ranks(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ranks[i] = static_cast<std::size_t>(
        std::ranges::lower_bound(distinct, keys[i]) - distinct.begin());
  }
  return ranks;
}

std::size_t distinct_count(const std::vector<std::size_t>& colors) {
  return std::set<std::size_t>(colors.begin(), colors.end()).size();
}

}  // namespace

std::size_t WLColoring::num_colors() const { return distinct_count(colors); }

WLColoring wl_refine(const Graph& g,
                     std::optional<std::span<const std::int64_t>> init_colors,
                     std::optional<std::span<const std::int64_t>> edge_labels,
                     std::size_t max_rounds, const WLOptions& options) {
  const std::size_t n = g.num_nodes();
  if (init_colors && init_colors->size() != n) {
    fail(Errc::kSizeMismatch, "init colors " + std::to_string(init_colors->size()) +
                                  " != nodes " + std::to_string(n));
  }
  if (edge_labels && edge_labels->size() != g.num_arcs()) {
    fail(Errc::kSizeMismatch, "edge labels " + std::to_string(edge_labels->size()) +
                                  " != arcs " + std::to_string(g.num_arcs()));
  }
  auto label = [&](std::size_t arc) -> std::int64_t {
    return edge_labels ? (*edge_labels)[arc] : 0;
  };

  // In-arcs, only needed for directed graphs with the flag set.
  std::vector<std::vector<std::size_t>> in_arcs;
  const bool use_in = g.directed() && options.include_in_neighbors;
  if (use_in) {
    in_arcs.resize(n);
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
      in_arcs[g.arc_target(a)].push_back(a);
    }
  }

  WLColoring out;
  if (init_colors) {
    out.colors = dense_ranks(std::vector<std::int64_t>(init_colors->begin(),
                                                       init_colors->end()));
  } else {
    out.colors.assign(n, 0);
  }
  out.history.push_back(out.colors);

  std::size_t current_count = distinct_count(out.colors);
  for (std::size_t round = 0; round < max_rounds; ++round) {
    std::vector<Signature> signatures(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::pair<std::int64_t, std::int64_t>> out_multiset;
      for (std::size_t a = g.arc_begin(v); a < g.arc_begin(v) + g.degree(v); ++a) {
        out_multiset.emplace_back(label(a),
                                  static_cast<std::int64_t>(out.colors[g.arc_target(a)]));
      }
      std::ranges::sort(out_multiset);
      Signature& sig = signatures[v];
      sig.push_back(static_cast<std::int64_t>(out.colors[v]));
      sig.push_back(static_cast<std::int64_t>(out_multiset.size()));
      for (const auto& [l, c] : out_multiset) {
        sig.push_back(l);
        sig.push_back(c);
      }
      if (use_in) {
        std::vector<std::pair<std::int64_t, std::int64_t>> in_multiset;
        for (std::size_t a : in_arcs[v]) {
          in_multiset.emplace_back(
              label(a), static_cast<std::int64_t>(out.colors[g.arc_source(a)]));
        }
        std::ranges::sort(in_multiset);
        sig.push_back(static_cast<std::int64_t>(in_multiset.size()));
        for (const auto& [l, c] : in_multiset) {
          sig.push_back(l);
          sig.push_back(c);
        }
      }
    }
    out.colors = dense_ranks(signatures);
    out.history.push_back(out.colors);
    out.rounds = round + 1;
    const std::size_t next_count = distinct_count(out.colors);
    if (next_count == current_count) {
      out.stable = true;
      break;
    }
    current_count = next_count;
  }
  return out;
}

bool partitions_equal(std::span<const std::size_t> a,
                      std::span<const std::size_t> b) {
  if (a.size() != b.size()) {
    fail(Errc::kSizeMismatch, "partitions_equal: node counts differ");
  }
  std::map<std::size_t, std::size_t> forward;
  std::map<std::size_t, std::size_t> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto [f, f_new] = forward.emplace(a[i], b[i]);
    if (!f_new && f->second != b[i]) return false;
    const auto [r, r_new] = backward.emplace(b[i], a[i]);
    if (!r_new && r->second != a[i]) return false;
  }
  return true;
}

bool partitions_equal(const WLColoring& a, const WLColoring& b) {
  return partitions_equal(a.colors, b.colors);
}

bool wl_distinguishes_nodes(const Graph& g, std::size_t u, std::size_t v,
                            std::optional<std::span<const std::int64_t>> edge_labels) {
  if (u >= g.num_nodes() || v >= g.num_nodes()) {
    fail(Errc::kIndexOutOfRange, "wl_distinguishes_nodes: node out of range");
  }
  const WLColoring c =
      wl_refine(g, std::nullopt, edge_labels, std::max<std::size_t>(g.num_nodes(), 1));
  return c.colors[u] != c.colors[v];
}

std::vector<std::int64_t> quantize_rows(const DenseMatrix& rows, double bucket) {
  std::vector<std::vector<std::int64_t>> keys(rows.rows());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    keys[r].reserve(rows.cols());
    for (std::size_t c = 0; c < rows.cols(); ++c) {
      keys[r].push_back(static_cast<std::int64_t>(std::llround(rows(r, c) / bucket)));
    }
  }
  const std::vector<std::size_t> ranks = dense_ranks(keys);
  return {ranks.begin(), ranks.end()};
}

}  // namespace graphpe
