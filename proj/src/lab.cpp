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

#include "graphpe/lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "graphpe/error.hpp"
#include "graphpe/generators.hpp"
#include "graphpe/layers.hpp"
#include "graphpe/pe.hpp"
#include "graphpe/wl.hpp"

namespace graphpe {
namespace {

// The dependency graph with one pair feature row per arc: RRWP entries of
// `g` followed by the virtual-edge indicator.
struct RewiredInputs {
  Graph rewired;
  DenseMatrix arc_rows;
  std::vector<std::int64_t> labels;
  std::vector<std::size_t> stable_colors;
  std::size_t wl_rounds = 0;
};

RewiredInputs rewired_inputs(const Graph& g, std::size_t steps) {
  RewiredInputs in;
  in.rewired = complete_rewire(g.without_features());
  const std::size_t n = g.num_nodes();
  PEConfig cfg;
  cfg.kind = PEKind::kRRWP;
  cfg.k = steps;
  const PairTensor pairs = *rrwp(g.without_features(), cfg).pair_pe;
  const DenseMatrix& indicator = *in.rewired.edge_features();
  in.arc_rows = DenseMatrix(in.rewired.num_arcs(), steps + 1);
  for (std::size_t a = 0; a < in.rewired.num_arcs(); ++a) {
    const auto row = pairs.at(in.rewired.arc_source(a), in.rewired.arc_target(a));
    for (std::size_t c = 0; c < steps; ++c) in.arc_rows(a, c) = row[c];
    in.arc_rows(a, steps) = indicator(a, indicator.cols() - 1);
  }
  in.labels = quantize_rows(in.arc_rows, kLabelBucket);
  const WLColoring wl = wl_refine(in.rewired, std::nullopt,
                                  std::span<const std::int64_t>(in.labels),
                                  std::max<std::size_t>(n, 1));
  in.stable_colors = wl.colors;
  in.wl_rounds = wl.rounds;
  return in;
}

double row_distance(const DenseMatrix& m, std::size_t u, std::size_t v) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    best = std::max(best, std::abs(m(u, c) - m(v, c)));
  }
  return best;
}

}  // namespace

TrialReport run_upper_bound_trial(const Graph& g, std::size_t num_layers,
                                  std::size_t num_param_seeds, double tol,
                                  const TrialOptions& options) {
  const std::size_t n = g.num_nodes();
  check_dense_capacity(n, "run_upper_bound_trial");
  const std::size_t steps = options.rrwp_steps ? options.rrwp_steps
                                               : std::max<std::size_t>(num_layers, 1);
  const RewiredInputs in = rewired_inputs(g, steps);
  constexpr std::size_t kNodeDim = 4;
  const std::size_t edge_dim = steps + 1;

  TrialReport report;
  report.graph_id = options.graph_id;
  report.tolerance = tol;
  report.layers = num_layers;
  report.regime = "random parameters, upper bound";

  for (std::size_t s = 0; s < num_param_seeds; ++s) {
    const std::uint64_t seed = options.base_seed + s;
    report.seeds.push_back(seed);
    std::mt19937_64 gen(seed);
    DenseMatrix x(n, kNodeDim, 1.0);
    PairTensor e(n, edge_dim);
    for (std::size_t a = 0; a < in.rewired.num_arcs(); ++a) {
      auto dst = e.at(in.rewired.arc_source(a), in.rewired.arc_target(a));
      for (std::size_t c = 0; c < edge_dim; ++c) dst[c] = in.arc_rows(a, c);
    }
    for (std::size_t layer = 0; layer < num_layers; ++layer) {
      const GritLayerParams p = random_grit_params(kNodeDim, edge_dim, gen);
      DenseGritResult step = dense_grit_forward(in.rewired, x, e, p);
      x = add(x, step.nodes);
      e = std::move(step.pairs);
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        ++report.node_pairs_tested;
        if (in.stable_colors[u] == in.stable_colors[v] && row_distance(x, u, v) > tol) {
          ++report.wl_merged_gt_separated;
        }
      }
    }
  }
  return report;
}

TrialReport run_attainment_trial(const Graph& g, double tol,
                                 const TrialOptions& options) {
  const std::size_t n = g.num_nodes();
  check_dense_capacity(n, "run_attainment_trial");
  const std::size_t steps = options.rrwp_steps ? options.rrwp_steps : 3;
  const RewiredInputs in = rewired_inputs(g, steps);

  const std::size_t b = in.labels.empty()
                            ? 1
                            : static_cast<std::size_t>(*std::ranges::max_element(
                                  in.labels)) + 1;
  if (b > kMaxAlphabet) {
    fail(Errc::kAlphabetTooLarge, std::to_string(b) + " edge label symbols, limit " +
                                      std::to_string(kMaxAlphabet));
  }
  const double eps = std::sqrt(2.0);
  const std::size_t layers = in.wl_rounds + 1;

  TrialReport report;
  report.graph_id = options.graph_id;
  report.tolerance = tol;
  report.layers = layers;
  report.regime = "constructive parameters, finite alphabet";

  std::vector<std::size_t> symbols(n, 0);
  DenseMatrix h;
  for (std::size_t layer = 0; layer < layers; ++layer) {
    const std::size_t a =
        n == 0 ? 1 : *std::ranges::max_element(symbols) + 1;
    if (a > kMaxAlphabet) {
      fail(Errc::kAlphabetTooLarge, std::to_string(a) + " node symbols, limit " +
                                        std::to_string(kMaxAlphabet));
    }
    // Coordinate (p, q) = p * b + q of the joint (color, label) space.
    const std::size_t dim = a * b;
    DenseMatrix x(n, dim);
    for (std::size_t v = 0; v < n; ++v) x(v, symbols[v] * b) = 1.0;
    PairTensor e(n, dim);
    for (std::size_t arc = 0; arc < in.rewired.num_arcs(); ++arc) {
      e.at(in.rewired.arc_source(arc), in.rewired.arc_target(arc))
          [static_cast<std::size_t>(in.labels[arc])] = 1.0;
    }

    GritLayerParams p;
    p.w_v = DenseMatrix(dim, dim);
    p.w_ev = DenseMatrix::identity(dim);
    p.attn_w.assign(dim, 0.0);
    p.edge_update.w_q = DenseMatrix(dim, dim);
    p.edge_update.w_k = DenseMatrix(dim, dim);
    p.edge_update.w_ew = DenseMatrix(dim, dim);
    p.edge_update.w_eb = DenseMatrix(dim, dim);
    p.edge_update.nonlinearity = Nonlinearity::kIdentity;
    for (std::size_t sym = 0; sym < a; ++sym) {
      for (std::size_t q = 0; q < b; ++q) {
        p.edge_update.w_k(sym * b + q, sym * b) = 1.0;
        p.edge_update.w_ew(sym * b + q, q) = 1.0;
      }
    }

    const DenseMatrix mean = dense_grit_forward(in.rewired, x, e, p).nodes;
    const double count_scale = n > 1 ? static_cast<double>(n - 1) : 0.0;
    h = add(x, scale(mean, eps * count_scale));

    // Injective relabel of the distinct combined vectors.
    std::map<std::vector<std::int64_t>, std::size_t> codes;
    std::vector<std::vector<std::int64_t>> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t c = 0; c < dim; ++c) {
        keys[v].push_back(static_cast<std::int64_t>(std::llround(h(v, c) / kLabelBucket)));
      }
      codes.emplace(keys[v], 0);
    }
    std::size_t next = 0;
    for (auto& [key, code] : codes) code = next++;
    for (std::size_t v = 0; v < n; ++v) symbols[v] = codes[keys[v]];
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      ++report.node_pairs_tested;
      const double dist = row_distance(h, u, v);
      const bool merged = in.stable_colors[u] == in.stable_colors[v];
      if (!merged && dist <= tol) ++report.wl_separated_gt_merged_after_tuning;
      if (merged && dist > kMergedTolerance) ++report.wl_merged_gt_separated;
    }
  }
  return report;
}

}  // namespace graphpe
