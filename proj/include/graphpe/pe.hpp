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

#ifndef GRAPHPE_PE_HPP_
#define GRAPHPE_PE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphpe/graph.hpp"
#include "graphpe/matrix.hpp"

namespace graphpe {

enum class PEKind {
  kLapPE,
  kESLapPE,
  kSignNet,
  kGCKN,
  kRWSE,
  kRWDIFF,
  kRRWP,
  kPPR,
  kWLPE,
};

inline constexpr PEKind kAllPEKinds[] = {
    PEKind::kLapPE, PEKind::kESLapPE, PEKind::kSignNet,
    PEKind::kGCKN,  PEKind::kRWSE,    PEKind::kRWDIFF,
    PEKind::kRRWP,  PEKind::kPPR,     PEKind::kWLPE,
};

// Lowercase identifiers used on the command line and in CSV output:
// lappe, eslappe, signnet, gckn, rwse, rwdiff, rrwp, ppr, wlpe.
std::string_view pe_kind_name(PEKind kind);
std::optional<PEKind> parse_pe_kind(std::string_view name);

// Parameters not used by `kind` are ignored. Missing required parameters
// are zero/unset and rejected by validate().
struct PEConfig {
  PEKind kind = PEKind::kRWSE;
  std::size_t k = 0;           // eigenpairs (spectral kinds) or walk steps
  double beta = 0.0;           // GCKN diffusion time, > 0
  double alpha = 0.0;          // PPR teleport probability, in (0, 1)
  std::size_t hidden_dim = 0;  // WLPE embedding width, even
  std::size_t wl_iters = 0;    // WLPE refinement rounds
  std::uint64_t seed = 0;      // sign flips for LapPE/GCKN; 0 = canonical

  // Throws kConfigError.
  void validate() const;
};

// Dense n x n x dim tensor of per-pair features, pair (i, j) at
// data[(i * n + j) * dim + f].
class PairTensor {
 public:
  PairTensor() = default;
  PairTensor(std::size_t num_nodes, std::size_t dim)
      : n_(num_nodes), dim_(dim), data_(num_nodes * num_nodes * dim, 0.0) {}

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<double> at(std::size_t i, std::size_t j) {
    return {data_.data() + (i * n_ + j) * dim_, dim_};
  }
  std::span<const double> at(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * n_ + j) * dim_, dim_};
  }
  std::span<const double> data() const noexcept { return data_; }

  bool operator==(const PairTensor& other) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

struct PEOutput {
  DenseMatrix node_pe;
  std::optional<PairTensor> pair_pe;  // RRWP only
  PEConfig config;
};

// Spectral kinds. Node row v interleaves (s_i * u_i[v], lambda_i) for the k
// selected eigenpairs, d_pe = 2k. Eigenpairs with eigenvalue 0 (one per
// connected component) are skipped; missing pairs are zero padded.
// Throws kNotEnoughEigenvectors (k >= n) and kDirectedUnsupported.
PEOutput lap_pe(const Graph& g, const PEConfig& cfg);
PEOutput eslap_pe(const Graph& g, const PEConfig& cfg);
// (canonical, negated eigenvector slots).
std::pair<PEOutput, PEOutput> signnet_features(const Graph& g, const PEConfig& cfg);
// Eigenpairs of exp(-beta L_sym), largest kernel eigenvalue first, skipping
// the trivial ones.
PEOutput gckn_pe(const Graph& g, const PEConfig& cfg);

// Random-walk kinds, P = D^{-1} A.
PEOutput rwse(const Graph& g, const PEConfig& cfg);    // diag(P^1..P^K)
PEOutput rwdiff(const Graph& g, const PEConfig& cfg);  // diag(P^0..P^{K-1})
PEOutput rrwp(const Graph& g, const PEConfig& cfg);    // [P^0..P^{K-1}]_{ij}
// Row k is the personalized PageRank distribution rooted at k:
// alpha * e_k^T (I - (1 - alpha) P)^{-1}.
PEOutput ppr_pe(const Graph& g, const PEConfig& cfg);

// Sinusoidal embedding of stable-or-capped WL colors.
PEOutput wlpe(const Graph& g, const PEConfig& cfg);
// The sinusoidal map alone: (sin(x / 10000^{2l/d}), cos(x / 10000^{(2l+1)/d})).
std::vector<double> sinusoidal_embedding(double x, std::size_t hidden_dim);
// Stable 64-bit FNV-1a hash of a feature row (-0.0 hashes like 0.0).
std::uint64_t hash_feature_row(std::span<const double> row);

// Dispatch on cfg.kind after validation. For SignNet the node_pe is the
// canonical half followed by the negated half (d_pe = 4k).
PEOutput compute_pe(const Graph& g, const PEConfig& cfg);

}  // namespace graphpe

#endif  // GRAPHPE_PE_HPP_
