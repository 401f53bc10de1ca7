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

#include "graphpe/pe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "graphpe/error.hpp"
#include "graphpe/graph_matrices.hpp"
#include "graphpe/linalg.hpp"
#include "graphpe/wl.hpp"

namespace graphpe {
namespace {

bool is_spectral(PEKind kind) {
  return kind == PEKind::kLapPE || kind == PEKind::kESLapPE ||
         kind == PEKind::kSignNet || kind == PEKind::kGCKN;
}

void require_kind(const PEConfig& cfg, PEKind expected) {
  if (cfg.kind != expected) {
    fail(Errc::kConfigError, "expected kind " + std::string(pe_kind_name(expected)) +
                                 ", got " + std::string(pe_kind_name(cfg.kind)));
  }
  cfg.validate();
}

std::vector<double> sign_vector(std::size_t k, std::uint64_t seed) {
  std::vector<double> signs(k, 1.0);
  if (seed == 0) return signs;
  std::mt19937_64 gen(seed);
  for (double& s : signs) s = (gen() >> 63) != 0 ? -1.0 : 1.0;
  return signs;
}

// Fills rows with interleaved (sign * vector entry, eigenvalue) slots taken
// from `eig` at `picks`; slots beyond picks.size() stay zero.
DenseMatrix spectral_rows(const SymEigen& eig, const std::vector<std::size_t>& picks,
                          std::size_t k, std::uint64_t seed) {
  const std::size_t n = eig.values.size();
  const std::vector<double> signs = sign_vector(k, seed);
  DenseMatrix out(n, 2 * k);
  for (std::size_t slot = 0; slot < picks.size() && slot < k; ++slot) {
    const std::size_t idx = picks[slot];
    auto u = eig.vectors.column(idx);
    for (std::size_t v = 0; v < n; ++v) {
      out(v, 2 * slot) = signs[slot] * u[v];
      out(v, 2 * slot + 1) = eig.values[idx];
    }
  }
  return out;
}

void check_spectral_preconditions(const Graph& g, const PEConfig& cfg) {
  if (g.directed()) {
    fail(Errc::kDirectedUnsupported, "spectral encodings need an undirected graph");
  }
  if (cfg.k >= g.num_nodes()) {
    fail(Errc::kNotEnoughEigenvectors,
         "k = " + std::to_string(cfg.k) + " with " +
             std::to_string(g.num_nodes()) + " nodes");
  }
}

PEOutput laplacian_encoding(const Graph& g, const PEConfig& cfg, std::uint64_t seed) {
  check_spectral_preconditions(g, cfg);
  const SymEigen eig = sym_eig(normalized_laplacian(g));
  const std::size_t trivial = count_components(g);
  std::vector<std::size_t> picks;
  for (std::size_t i = trivial; i < eig.values.size() && picks.size() < cfg.k; ++i) {
    picks.push_back(i);
  }
  return PEOutput{spectral_rows(eig, picks, cfg.k, seed), std::nullopt, cfg};
}

}  // namespace

std::string_view pe_kind_name(PEKind kind) {
  switch (kind) {
    case PEKind::kLapPE: return "lappe";
    case PEKind::kESLapPE: return "eslappe";
    case PEKind::kSignNet: return "signnet";
    case PEKind::kGCKN: return "gckn";
    case PEKind::kRWSE: return "rwse";
    case PEKind::kRWDIFF: return "rwdiff";
    case PEKind::kRRWP: return "rrwp";
    case PEKind::kPPR: return "ppr";
    case PEKind::kWLPE: return "wlpe";
  }
  return "unknown";
}

std::optional<PEKind> parse_pe_kind(std::string_view name) {
  for (PEKind kind : kAllPEKinds) {
    if (pe_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

void PEConfig::validate() const {
  const std::string name(pe_kind_name(kind));
  if (is_spectral(kind) || kind == PEKind::kRWSE || kind == PEKind::kRWDIFF ||
      kind == PEKind::kRRWP) {
    if (k == 0) fail(Errc::kConfigError, name + ": k must be >= 1");
  }
  if (kind == PEKind::kGCKN && !(beta > 0.0 && std::isfinite(beta))) {
    fail(Errc::kConfigError, "gckn: beta must be a positive finite number");
  }
  if (kind == PEKind::kPPR && !(alpha > 0.0 && alpha < 1.0)) {
    fail(Errc::kConfigError, "ppr: alpha must lie in (0, 1)");
  }
  if (kind == PEKind::kWLPE) {
    if (hidden_dim == 0 || hidden_dim % 2 != 0) {
      fail(Errc::kConfigError, "wlpe: hidden_dim must be even and positive");
    }
    if (wl_iters == 0) fail(Errc::kConfigError, "wlpe: wl_iters must be >= 1");
  }
}

PEOutput lap_pe(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kLapPE);
  return laplacian_encoding(g, cfg, cfg.seed);
}

PEOutput eslap_pe(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kESLapPE);
  return laplacian_encoding(g, cfg, 0);
}

std::pair<PEOutput, PEOutput> signnet_features(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kSignNet);
  PEOutput plus = laplacian_encoding(g, cfg, 0);
  PEOutput minus{plus.node_pe, std::nullopt, plus.config};
  for (std::size_t v = 0; v < minus.node_pe.rows(); ++v) {
    for (std::size_t c = 0; c < minus.node_pe.cols(); c += 2) {
      minus.node_pe(v, c) = -minus.node_pe(v, c);
    }
  }
  return {std::move(plus), std::move(minus)};
}

PEOutput gckn_pe(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kGCKN);
  check_spectral_preconditions(g, cfg);
  const DenseMatrix kernel = spectral_exp(normalized_laplacian(g), -cfg.beta);
  const SymEigen eig = sym_eig(kernel);
  const std::size_t n = eig.values.size();
  const std::size_t trivial = count_components(g);
  std::vector<std::size_t> picks;
  for (std::size_t rank = trivial; rank < n && picks.size() < cfg.k; ++rank) {
    picks.push_back(n - 1 - rank);
  }
  return PEOutput{spectral_rows(eig, picks, cfg.k, cfg.seed), std::nullopt, cfg};
}

PEOutput rwse(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kRWSE);
  const auto diagonals = mat_power_diagonals(walk_matrix(g), cfg.k);
  DenseMatrix out(g.num_nodes(), cfg.k);
  for (std::size_t step = 0; step < cfg.k; ++step) {
    std::ranges::copy(diagonals[step], out.column(step).begin());
  }
  return PEOutput{std::move(out), std::nullopt, cfg};
}

PEOutput rwdiff(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kRWDIFF);
  DenseMatrix out(g.num_nodes(), cfg.k);
  for (double& x : out.column(0)) x = 1.0;
  if (cfg.k > 1) {
    const auto diagonals = mat_power_diagonals(walk_matrix(g), cfg.k - 1);
    for (std::size_t step = 0; step + 1 < cfg.k; ++step) {
      std::ranges::copy(diagonals[step], out.column(step + 1).begin());
    }
  }
  return PEOutput{std::move(out), std::nullopt, cfg};
}

PEOutput rrwp(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kRRWP);
  const std::size_t n = g.num_nodes();
  check_dense_capacity(n, "rrwp");
  const std::vector<DenseMatrix> powers = matrix_powers(walk_matrix(g), cfg.k);
  PairTensor pairs(n, cfg.k);
  for (std::size_t step = 0; step < cfg.k; ++step) {
    const DenseMatrix& p = powers[step];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) pairs.at(i, j)[step] = p(i, j);
    }
  }
  DenseMatrix node(n, cfg.k);
  for (std::size_t v = 0; v < n; ++v) node.set_row(v, pairs.at(v, v));
  return PEOutput{std::move(node), std::move(pairs), cfg};
}

PEOutput ppr_pe(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kPPR);
  const std::size_t n = g.num_nodes();
  check_dense_capacity(n, "ppr");
  const DenseMatrix p = walk_matrix(g);
  // Row k of alpha (I - (1 - alpha) P)^{-1} solves M^T x = alpha e_k.
  DenseMatrix system_t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      system_t(j, i) = (i == j ? 1.0 : 0.0) - (1.0 - cfg.alpha) * p(i, j);
    }
  }
  DenseMatrix out(n, n);
  std::vector<double> rhs(n, 0.0);
  for (std::size_t root = 0; root < n; ++root) {
    rhs[root] = cfg.alpha;
    out.set_row(root, linear_solve(system_t, rhs));
    rhs[root] = 0.0;
  }
  return PEOutput{std::move(out), std::nullopt, cfg};
}

std::uint64_t hash_feature_row(std::span<const double> row) {
  std::uint64_t h = 1469598103934665603ULL;
  for (double x : row) {
    if (x == 0.0) x = 0.0;
    std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffULL;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::vector<double> sinusoidal_embedding(double x, std::size_t hidden_dim) {
  std::vector<double> out(hidden_dim);
  const double d = static_cast<double>(hidden_dim);
  for (std::size_t l = 0; l < hidden_dim / 2; ++l) {
    const double two_l = 2.0 * static_cast<double>(l);
    out[2 * l] = std::sin(x / std::pow(10000.0, two_l / d));
    out[2 * l + 1] = std::cos(x / std::pow(10000.0, (two_l + 1.0) / d));
  }
  return out;
}

PEOutput wlpe(const Graph& g, const PEConfig& cfg) {
  require_kind(cfg, PEKind::kWLPE);
  std::optional<std::vector<std::int64_t>> init;
  if (g.node_features()) {
    init.emplace(g.num_nodes());
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
      (*init)[v] = std::bit_cast<std::int64_t>(
          hash_feature_row(g.node_features()->row(v)));
    }
  }
  std::optional<std::span<const std::int64_t>> init_span;
  if (init) init_span = std::span<const std::int64_t>(*init);
  const WLColoring coloring = wl_refine(g, init_span, std::nullopt, cfg.wl_iters);
  DenseMatrix out(g.num_nodes(), cfg.hidden_dim);
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    out.set_row(v, sinusoidal_embedding(static_cast<double>(coloring.colors[v]),
                                        cfg.hidden_dim));
  }
  return PEOutput{std::move(out), std::nullopt, cfg};
}

PEOutput compute_pe(const Graph& g, const PEConfig& cfg) {
  cfg.validate();
  switch (cfg.kind) {
    case PEKind::kLapPE: return lap_pe(g, cfg);
    case PEKind::kESLapPE: return eslap_pe(g, cfg);
    case PEKind::kSignNet: {
      auto [plus, minus] = signnet_features(g, cfg);
      return PEOutput{hconcat(plus.node_pe, minus.node_pe), std::nullopt, cfg};
    }
    case PEKind::kGCKN: return gckn_pe(g, cfg);
    case PEKind::kRWSE: return rwse(g, cfg);
    case PEKind::kRWDIFF: return rwdiff(g, cfg);
    case PEKind::kRRWP: return rrwp(g, cfg);
    case PEKind::kPPR: return ppr_pe(g, cfg);
    case PEKind::kWLPE: return wlpe(g, cfg);
  }
  fail(Errc::kConfigError, "unknown PE kind");
}

}  // namespace graphpe
