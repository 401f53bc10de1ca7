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

#include <cmath>
#include <random>

#include "graphpe/error.hpp"
#include "graphpe/generators.hpp"
#include "graphpe/graph_matrices.hpp"
#include "graphpe/linalg.hpp"
#include "graphpe/pe.hpp"
#include "graphpe/wl.hpp"
#include "support/oracles.hpp"

namespace graphpe {
namespace {

PEConfig config(PEKind kind, std::size_t k = 1) {
  PEConfig cfg;
  cfg.kind = kind;
  cfg.k = k;
  cfg.beta = 1.0;
  cfg.alpha = 0.15;
  cfg.hidden_dim = 8;
  cfg.wl_iters = 3;
  return cfg;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::kIoError;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(LapPE, PathOfTwo) {
  const DenseMatrix pe = lap_pe(path_graph(2), config(PEKind::kLapPE)).node_pe;
  ASSERT_EQ(pe.cols(), 2u);
  EXPECT_NEAR(pe(0, 0), kInvSqrt2, 1e-12);
  EXPECT_NEAR(pe(0, 1), 2.0, 1e-12);
  EXPECT_NEAR(pe(1, 0), -kInvSqrt2, 1e-12);
  EXPECT_NEAR(pe(1, 1), 2.0, 1e-12);
}

TEST(LapPE, TriangleEigenvalueSlot) {
  const DenseMatrix pe = lap_pe(complete_graph(3), config(PEKind::kLapPE)).node_pe;
  double sum = 0.0, norm = 0.0;
  for (std::size_t v = 0; v < 3; ++v) {
    EXPECT_NEAR(pe(v, 1), 1.5, 1e-12);
    sum += pe(v, 0);
    norm += pe(v, 0) * pe(v, 0);
  }
  // Orthogonal to the constant vector and unit length.
  EXPECT_NEAR(sum, 0.0, 1e-12);
  EXPECT_NEAR(norm, 1.0, 1e-12);
  const double first = pe(0, 0);
  const DenseMatrix again = lap_pe(complete_graph(3), config(PEKind::kLapPE)).node_pe;
  EXPECT_EQ(again(0, 0), first);
}

TEST(LapPE, SeedsFlipWholeColumns) {
  std::mt19937_64 gen(12);
  const Graph g = erdos_renyi(9, 0.5, gen);
  PEConfig cfg = config(PEKind::kLapPE, 4);
  const DenseMatrix base = lap_pe(g, cfg).node_pe;
  cfg.seed = 77;
  const DenseMatrix flipped = lap_pe(g, cfg).node_pe;
  EXPECT_EQ(lap_pe(g, cfg).node_pe, flipped);
  for (std::size_t slot = 0; slot < 4; ++slot) {
    const bool same = flipped(0, 2 * slot) == base(0, 2 * slot);
    for (std::size_t v = 0; v < 9; ++v) {
      EXPECT_EQ(flipped(v, 2 * slot), same ? base(v, 2 * slot) : -base(v, 2 * slot));
      EXPECT_EQ(flipped(v, 2 * slot + 1), base(v, 2 * slot + 1));
    }
  }
}

TEST(LapPE, Errors) {
  EXPECT_EQ(code_of([] { lap_pe(path_graph(2), config(PEKind::kLapPE, 2)); }),
            Errc::kNotEnoughEigenvectors);
  const std::vector<NodePair> arcs{{0, 1}, {1, 2}};
  const Graph directed = Graph::build(arcs, 3, true);
  EXPECT_EQ(code_of([&] { lap_pe(directed, config(PEKind::kLapPE)); }),
            Errc::kDirectedUnsupported);
}

TEST(LapPE, SlotsAscendingAndPadded) {
  const Graph g = disjoint_union(path_graph(3), path_graph(2));
  const DenseMatrix pe = lap_pe(g, config(PEKind::kLapPE, 4)).node_pe;
  // Two components leave three nontrivial eigenpairs.
  std::vector<double> slots;
  for (std::size_t s = 0; s < 4; ++s) slots.push_back(pe(0, 2 * s + 1));
  EXPECT_GT(slots[0], 1e-9);
  EXPECT_LE(slots[0], slots[1]);
  EXPECT_LE(slots[1], slots[2]);
  for (std::size_t v = 0; v < 5; ++v) {
    EXPECT_EQ(pe(v, 6), 0.0);
    EXPECT_EQ(pe(v, 7), 0.0);
  }
}

TEST(ESLapPE, MatchesCanonicalLapPE) {
  PEConfig cfg = config(PEKind::kESLapPE);
  const DenseMatrix es = eslap_pe(path_graph(2), cfg).node_pe;
  EXPECT_EQ(es, lap_pe(path_graph(2), config(PEKind::kLapPE)).node_pe);
  cfg.seed = 5;
  EXPECT_EQ(eslap_pe(path_graph(2), cfg).node_pe, es);
}

TEST(ESLapPE, EdgelessGraphIsZero) {
  const DenseMatrix pe = eslap_pe(Graph::build({}, 2, false), config(PEKind::kESLapPE)).node_pe;
  EXPECT_EQ(max_abs(pe), 0.0);
}

TEST(SignNet, PlusAndMinus) {
  const auto [plus, minus] = signnet_features(path_graph(2), config(PEKind::kSignNet));
  EXPECT_NEAR(plus.node_pe(0, 0), kInvSqrt2, 1e-12);
  EXPECT_NEAR(plus.node_pe(0, 1), 2.0, 1e-12);
  EXPECT_NEAR(minus.node_pe(0, 0), -kInvSqrt2, 1e-12);
  EXPECT_NEAR(minus.node_pe(0, 1), 2.0, 1e-12);
}

TEST(SignNet, SlotsCancelAndEigenvaluesAgree) {
  std::mt19937_64 gen(13);
  const Graph g = erdos_renyi(8, 0.5, gen);
  const auto [plus, minus] = signnet_features(g, config(PEKind::kSignNet, 3));
  for (std::size_t v = 0; v < 8; ++v) {
    for (std::size_t s = 0; s < 3; ++s) {
      EXPECT_EQ(plus.node_pe(v, 2 * s) + minus.node_pe(v, 2 * s), 0.0);
      EXPECT_EQ(plus.node_pe(v, 2 * s + 1), minus.node_pe(v, 2 * s + 1));
    }
  }
}

TEST(SignNet, SymmetrizedMapIgnoresGlobalFlip) {
  std::mt19937_64 gen(14);
  const Graph g = erdos_renyi(7, 0.6, gen);
  const auto [plus, minus] = signnet_features(g, config(PEKind::kSignNet, 2));
  // phi(x) = a x^3 + b x^2 + c x, applied to both halves and summed.
  const double a = 0.7, b = -1.3, c = 0.4;
  auto phi = [&](double x) { return a * x * x * x + b * x * x + c * x; };
  for (std::size_t v = 0; v < 7; ++v) {
    for (std::size_t s = 0; s < 2; ++s) {
      const double x = plus.node_pe(v, 2 * s);
      const double y = minus.node_pe(v, 2 * s);
      EXPECT_NEAR(phi(x) + phi(y), phi(-x) + phi(-y), 1e-15);
    }
  }
}

TEST(SignNet, ComputeConcatenatesHalves) {
  const PEOutput out = compute_pe(path_graph(3), config(PEKind::kSignNet, 1));
  ASSERT_EQ(out.node_pe.cols(), 4u);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(out.node_pe(v, 0), -out.node_pe(v, 2));
}

TEST(GCKN, PathOfTwo) {
  const DenseMatrix pe = gckn_pe(path_graph(2), config(PEKind::kGCKN)).node_pe;
  EXPECT_NEAR(std::abs(pe(0, 0)), kInvSqrt2, 1e-12);
  EXPECT_NEAR(pe(0, 0), -pe(1, 0), 1e-12);
  EXPECT_NEAR(pe(0, 1), std::exp(-2.0), 1e-12);
  EXPECT_NEAR(pe(1, 1), std::exp(-2.0), 1e-12);
}

TEST(GCKN, TriangleSlot) {
  const DenseMatrix pe = gckn_pe(complete_graph(3), config(PEKind::kGCKN)).node_pe;
  for (std::size_t v = 0; v < 3; ++v) EXPECT_NEAR(pe(v, 1), std::exp(-1.5), 1e-12);
}

TEST(GCKN, SmallBetaApproachesIdentity) {
  PEConfig cfg = config(PEKind::kGCKN, 2);
  cfg.beta = 1e-9;
  std::mt19937_64 gen(15);
  const DenseMatrix pe = gckn_pe(erdos_renyi(6, 0.7, gen), cfg).node_pe;
  for (std::size_t v = 0; v < 6; ++v) {
    EXPECT_NEAR(pe(v, 1), 1.0, 1e-8);
    EXPECT_NEAR(pe(v, 3), 1.0, 1e-8);
  }
}

TEST(GCKN, SlotsDescendingInUnitInterval) {
  std::mt19937_64 gen(16);
  for (int t = 0; t < 10; ++t) {
    const Graph g = erdos_renyi(8, 0.4, gen);
    const DenseMatrix pe = gckn_pe(g, config(PEKind::kGCKN, 4)).node_pe;
    for (std::size_t s = 0; s < 4; ++s) {
      const double slot = pe(0, 2 * s + 1);
      if (slot == 0.0) continue;  // padding
      EXPECT_GT(slot, 0.0);
      EXPECT_LE(slot, 1.0);
      if (s > 0 && pe(0, 2 * s - 1) != 0.0) {
        EXPECT_LE(slot, pe(0, 2 * s - 1) + 1e-15);
      }
    }
  }
}

TEST(RWSE, Examples) {
  const DenseMatrix k3 = rwse(complete_graph(3), config(PEKind::kRWSE, 3)).node_pe;
  for (std::size_t v = 0; v < 3; ++v) {
    EXPECT_EQ(k3.row(v), (std::vector<double>{0, 0.5, 0.25}));
  }
  const DenseMatrix p2 = rwse(path_graph(2), config(PEKind::kRWSE, 2)).node_pe;
  for (std::size_t v = 0; v < 2; ++v) EXPECT_EQ(p2.row(v), (std::vector<double>{0, 1}));
  const DenseMatrix empty = rwse(Graph::build({}, 4, false), config(PEKind::kRWSE, 5)).node_pe;
  EXPECT_EQ(max_abs(empty), 0.0);
}

TEST(RWDIFF, Examples) {
  const DenseMatrix k3 = rwdiff(complete_graph(3), config(PEKind::kRWDIFF, 3)).node_pe;
  for (std::size_t v = 0; v < 3; ++v) {
    EXPECT_EQ(k3.row(v), (std::vector<double>{1, 0, 0.5}));
  }
  const DenseMatrix one = rwdiff(star_graph(3), config(PEKind::kRWDIFF, 1)).node_pe;
  ASSERT_EQ(one.cols(), 1u);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(one(v, 0), 1.0);
}

TEST(RWDIFF, ShiftedRWSE) {
  std::mt19937_64 gen(17);
  const Graph g = erdos_renyi(9, 0.4, gen);
  const DenseMatrix diff = rwdiff(g, config(PEKind::kRWDIFF, 5)).node_pe;
  const DenseMatrix se = rwse(g, config(PEKind::kRWSE, 4)).node_pe;
  for (std::size_t v = 0; v < 9; ++v) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(diff(v, c + 1), se(v, c));
  }
}

TEST(RRWP, TrianglePairs) {
  const PEOutput out = rrwp(complete_graph(3), config(PEKind::kRRWP, 2));
  ASSERT_TRUE(out.pair_pe);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(out.node_pe.row(v), (std::vector<double>{1, 0}));
  const auto p01 = out.pair_pe->at(0, 1);
  EXPECT_EQ(p01[0], 0.0);
  EXPECT_EQ(p01[1], 0.5);
}

TEST(RRWP, DiagonalAndRowSums) {
  std::mt19937_64 gen(18);
  const Graph g = erdos_renyi(10, 0.3, gen);
  const PEOutput out = rrwp(g, config(PEKind::kRRWP, 5));
  for (std::size_t i = 0; i < 10; ++i) {
    const auto diag = out.pair_pe->at(i, i);
    EXPECT_EQ(out.node_pe.row(i), std::vector<double>(diag.begin(), diag.end()));
    if (g.degree(i) == 0) continue;
    for (std::size_t k = 1; k < 5; ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j < 10; ++j) sum += out.pair_pe->at(i, j)[k];
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(RRWP, DenseLimit) {
  set_dense_limit(3);
  EXPECT_EQ(code_of([] { rrwp(path_graph(4), config(PEKind::kRRWP, 2)); }),
            Errc::kCapacityExceeded);
  set_dense_limit(std::nullopt);
}

TEST(PPR, TwoNodes) {
  PEConfig cfg = config(PEKind::kPPR);
  cfg.alpha = 0.5;
  const DenseMatrix pe = ppr_pe(path_graph(2), cfg).node_pe;
  EXPECT_NEAR(pe(0, 0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(pe(0, 1), 1.0 / 3.0, 1e-15);
}

TEST(PPR, RowsAreDistributions) {
  std::mt19937_64 gen(19);
  for (int t = 0; t < 10; ++t) {
    const Graph g = erdos_renyi(12, 0.35, gen);
    const DenseMatrix pe = ppr_pe(g, config(PEKind::kPPR)).node_pe;
    for (std::size_t i = 0; i < 12; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < 12; ++j) {
        EXPECT_GE(pe(i, j), -1e-15);
        sum += pe(i, j);
      }
      if (g.degree(i) > 0) {
        EXPECT_NEAR(sum, 1.0, 1e-9);
      }
    }
  }
}

TEST(PPR, PureTeleportLimit) {
  PEConfig cfg = config(PEKind::kPPR);
  cfg.alpha = 1.0 - 1e-12;
  const DenseMatrix pe = ppr_pe(cycle_graph(5), cfg).node_pe;
  EXPECT_LE(max_abs_diff(pe, DenseMatrix::identity(5)), 1e-11);
}

TEST(WalkKinds, MatchOraclesOnSmallGraphs) {
  const std::size_t steps = 4;
  for (const Graph& g : testing::connected_graphs_up_to(5)) {
    const auto walks = testing::enumerate_walks(g, steps);
    const DenseMatrix se = rwse(g, config(PEKind::kRWSE, steps)).node_pe;
    const DenseMatrix diff = rwdiff(g, config(PEKind::kRWDIFF, steps)).node_pe;
    const PEOutput rr = rrwp(g, config(PEKind::kRRWP, steps));
    const DenseMatrix ppr = ppr_pe(g, config(PEKind::kPPR)).node_pe;
    const auto want_ppr = testing::ppr_oracle(g, 0.15);
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      for (std::size_t s = 0; s < steps; ++s) {
        ASSERT_NEAR(se(i, s), walks[s + 1][i][i], 1e-10);
        ASSERT_NEAR(diff(i, s), walks[s][i][i], 1e-10);
      }
      for (std::size_t j = 0; j < g.num_nodes(); ++j) {
        for (std::size_t s = 0; s < steps; ++s) {
          ASSERT_NEAR(rr.pair_pe->at(i, j)[s], walks[s][i][j], 1e-10);
        }
        ASSERT_NEAR(ppr(i, j), want_ppr[i][j], 1e-10);
      }
    }
  }
}

TEST(WLPE, VertexTransitiveRowsAgree) {
  for (std::size_t dh : {2u, 8u, 16u}) {
    PEConfig cfg = config(PEKind::kWLPE);
    cfg.hidden_dim = dh;
    const DenseMatrix pe = wlpe(complete_graph(3), cfg).node_pe;
    ASSERT_EQ(pe.cols(), dh);
    EXPECT_EQ(pe.row(0), pe.row(1));
    EXPECT_EQ(pe.row(1), pe.row(2));
  }
}

TEST(WLPE, StarSplitsCenter) {
  const DenseMatrix pe = wlpe(star_graph(3), config(PEKind::kWLPE)).node_pe;
  EXPECT_NE(pe.row(0), pe.row(1));
  EXPECT_EQ(pe.row(1), pe.row(2));
  EXPECT_EQ(pe.row(2), pe.row(3));
}

TEST(WLPE, ZeroColorEmbedding) {
  EXPECT_EQ(sinusoidal_embedding(0.0, 6), (std::vector<double>{0, 1, 0, 1, 0, 1}));
  const auto e = sinusoidal_embedding(3.0, 4);
  EXPECT_DOUBLE_EQ(e[0], std::sin(3.0));
  EXPECT_DOUBLE_EQ(e[1], std::cos(3.0 / std::pow(10000.0, 0.25)));
  EXPECT_DOUBLE_EQ(e[2], std::sin(3.0 / std::pow(10000.0, 0.5)));
  EXPECT_DOUBLE_EQ(e[3], std::cos(3.0 / std::pow(10000.0, 0.75)));
}

TEST(WLPE, RowsEqualIffColorsEqual) {
  std::mt19937_64 gen(20);
  for (int t = 0; t < 30; ++t) {
    const Graph g = erdos_renyi(10, 0.25, gen);
    PEConfig cfg = config(PEKind::kWLPE);
    cfg.wl_iters = 10;
    cfg.hidden_dim = 16;
    const DenseMatrix pe = wlpe(g, cfg).node_pe;
    const WLColoring c = wl_refine(g, std::nullopt, std::nullopt, 10);
    for (std::size_t u = 0; u < 10; ++u) {
      for (std::size_t v = 0; v < 10; ++v) {
        EXPECT_EQ(pe.row(u) == pe.row(v), c.colors[u] == c.colors[v]);
      }
    }
  }
}

TEST(WLPE, NodeFeaturesSeedColors) {
  const Graph g = complete_graph(3).with_node_features(DenseMatrix::from_rows({{1}, {2}, {1}}));
  const DenseMatrix pe = wlpe(g, config(PEKind::kWLPE)).node_pe;
  EXPECT_EQ(pe.row(0), pe.row(2));
  EXPECT_NE(pe.row(0), pe.row(1));
  EXPECT_EQ(hash_feature_row(std::vector<double>{-0.0}),
            hash_feature_row(std::vector<double>{0.0}));
}

TEST(ComputePE, Dispatch) {
  const Graph g = cycle_graph(5);
  EXPECT_EQ(compute_pe(g, config(PEKind::kRWSE, 3)).node_pe,
            rwse(g, config(PEKind::kRWSE, 3)).node_pe);
  PEConfig cfg = config(PEKind::kLapPE, 2);
  cfg.seed = 3;
  EXPECT_EQ(compute_pe(g, cfg).node_pe, compute_pe(g, cfg).node_pe);
}

TEST(ComputePE, ConfigErrors) {
  const Graph g = cycle_graph(4);
  EXPECT_EQ(code_of([&] { compute_pe(g, config(PEKind::kRWSE, 0)); }), Errc::kConfigError);
  PEConfig bad_alpha = config(PEKind::kPPR);
  bad_alpha.alpha = 1.0;
  EXPECT_EQ(code_of([&] { compute_pe(g, bad_alpha); }), Errc::kConfigError);
  PEConfig bad_beta = config(PEKind::kGCKN);
  bad_beta.beta = 0.0;
  EXPECT_EQ(code_of([&] { compute_pe(g, bad_beta); }), Errc::kConfigError);
  PEConfig odd = config(PEKind::kWLPE);
  odd.hidden_dim = 3;
  EXPECT_EQ(code_of([&] { compute_pe(g, odd); }), Errc::kConfigError);
  EXPECT_EQ(parse_pe_kind("rrwp"), PEKind::kRRWP);
  EXPECT_FALSE(parse_pe_kind("nope"));
}

}  // namespace
}  // namespace graphpe
