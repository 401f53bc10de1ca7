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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "graphpe/error.hpp"
#include "graphpe/generators.hpp"
#include "graphpe/wl.hpp"
#include "support/oracles.hpp"

namespace graphpe {
namespace {

WLColoring stable(const Graph& g) {
  return wl_refine(g, std::nullopt, std::nullopt, std::max<std::size_t>(g.num_nodes(), 1));
}

TEST(WLRefine, TriangleSingleColor) {
  const WLColoring c = stable(complete_graph(3));
  EXPECT_EQ(c.num_colors(), 1u);
  EXPECT_TRUE(c.stable);
  EXPECT_EQ(c.history.front(), (std::vector<std::size_t>{0, 0, 0}));
}

TEST(WLRefine, StarTwoColors) {
  const WLColoring c = stable(star_graph(3));
  EXPECT_EQ(c.num_colors(), 2u);
  EXPECT_NE(c.colors[0], c.colors[1]);
  EXPECT_EQ(c.colors[1], c.colors[2]);
  EXPECT_EQ(c.colors[2], c.colors[3]);
  EXPECT_TRUE(wl_distinguishes_nodes(star_graph(3), 0, 1));
  EXPECT_FALSE(wl_distinguishes_nodes(star_graph(3), 1, 3));
}

TEST(WLRefine, HexagonVersusTwoTriangles) {
  const Graph c6 = cycle_graph(6);
  const Graph two = disjoint_union(cycle_graph(3), cycle_graph(3));
  const WLColoring a = stable(c6);
  const WLColoring b = stable(two);
  EXPECT_TRUE(partitions_equal(a, b));
  EXPECT_EQ(a.colors, b.colors);
  EXPECT_EQ(testing::naive_wl(c6, 6), testing::naive_wl(two, 6));
}

TEST(WLRefine, MaxRoundsCaps) {
  const Graph p = path_graph(7);
  const WLColoring one = wl_refine(p, std::nullopt, std::nullopt, 1);
  EXPECT_EQ(one.rounds, 1u);
  EXPECT_FALSE(one.stable);
  EXPECT_EQ(one.num_colors(), 2u);
  const WLColoring full = stable(p);
  EXPECT_TRUE(full.stable);
  EXPECT_EQ(full.num_colors(), 4u);
}

TEST(WLRefine, InitialColorsAndSizeChecks) {
  const Graph k3 = complete_graph(3);
  const std::vector<std::int64_t> init{5, 9, 5};
  const WLColoring c = wl_refine(k3, init, std::nullopt, 3);
  EXPECT_EQ(c.colors[0], c.colors[2]);
  EXPECT_NE(c.colors[0], c.colors[1]);
  const std::vector<std::int64_t> short_init{1, 2};
  try {
    wl_refine(k3, short_init, std::nullopt, 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSizeMismatch);
  }
}

TEST(WLRefine, EdgeLabelsSeparate) {
  // Path a - b - c with different labels on the two edges.
  const Graph p = path_graph(3);
  std::vector<std::int64_t> labels(p.num_arcs(), 0);
  labels[*p.find_arc(0, 1)] = 1;
  labels[*p.find_arc(1, 0)] = 1;
  const WLColoring plain = stable(p);
  EXPECT_EQ(plain.colors[0], plain.colors[2]);
  const WLColoring labeled = wl_refine(p, std::nullopt, labels, 3);
  EXPECT_NE(labeled.colors[0], labeled.colors[2]);
  EXPECT_TRUE(wl_distinguishes_nodes(p, 0, 2, labels));

  const Graph k2 = complete_graph(2);
  const std::vector<std::int64_t> asym{0, 1};
  EXPECT_TRUE(wl_distinguishes_nodes(k2, 0, 1, asym));
}

TEST(WLRefine, DirectedInNeighbors) {
  const std::vector<NodePair> arcs{{0, 1}, {1, 2}};
  const Graph g = Graph::build(arcs, 3, true);
  const WLColoring out_only = wl_refine(g, std::nullopt, std::nullopt, 3);
  WLOptions opt;
  opt.include_in_neighbors = true;
  const WLColoring both = wl_refine(g, std::nullopt, std::nullopt, 3, opt);
  EXPECT_GE(both.num_colors(), out_only.num_colors());
  EXPECT_EQ(both.num_colors(), 3u);
}

TEST(WLRefine, PartitionsMonotone) {
  std::mt19937_64 gen(30);
  for (int t = 0; t < 100; ++t) {
    const Graph g = erdos_renyi(10, 0.3, gen);
    const WLColoring c = stable(g);
    for (std::size_t r = 1; r < c.history.size(); ++r) {
      std::map<std::size_t, std::size_t> coarse_of;
      for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        auto [it, fresh] = coarse_of.emplace(c.history[r][v], c.history[r - 1][v]);
        EXPECT_EQ(it->second, c.history[r - 1][v]);
      }
    }
  }
}

TEST(WLRefine, MatchesNaivePartition) {
  std::mt19937_64 gen(31);
  for (int t = 0; t < 100; ++t) {
    const Graph g = erdos_renyi(9, 0.3, gen);
    const WLColoring c = stable(g);
    const auto naive = testing::naive_wl(g, g.num_nodes());
    for (std::size_t u = 0; u < 9; ++u) {
      for (std::size_t v = 0; v < 9; ++v) {
        ASSERT_EQ(c.colors[u] == c.colors[v], naive[u] == naive[v]);
      }
    }
  }
}

TEST(WLRefine, IsomorphismInvariant) {
  std::mt19937_64 gen(32);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + uniform_index(gen, 10);
    const Graph g = erdos_renyi(n, 0.35, gen);
    const auto perm = random_permutation(n, gen);
    const WLColoring a = stable(g);
    const WLColoring b = stable(permute(g, perm));
    for (std::size_t v = 0; v < n; ++v) ASSERT_EQ(a.colors[v], b.colors[perm[v]]);
  }
}

TEST(PartitionsEqual, Examples) {
  const std::vector<std::size_t> a{0, 0, 1}, b{3, 3, 2}, c{0, 1, 1};
  EXPECT_TRUE(partitions_equal(a, b));
  EXPECT_FALSE(partitions_equal(a, c));
  const std::vector<std::size_t> d{0, 0};
  EXPECT_THROW(partitions_equal(a, d), Error);
}

TEST(QuantizeRows, BucketsAndRanks) {
  const DenseMatrix rows = DenseMatrix::from_rows({{0.5, 1.0}, {0.5 + 1e-12, 1.0}, {0.0, 2.0}});
  const auto labels = quantize_rows(rows, 1e-9);
  EXPECT_EQ(labels[0], labels[1]);
  EXPECT_EQ(labels[2], 0);
  EXPECT_EQ(labels[0], 1);
}

}  // namespace
}  // namespace graphpe
