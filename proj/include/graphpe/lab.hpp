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

#ifndef GRAPHPE_LAB_HPP_
#define GRAPHPE_LAB_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphpe/graph.hpp"

namespace graphpe {

inline constexpr double kMergedTolerance = 1e-7;
inline constexpr double kSeparatedTolerance = 1e-4;
inline constexpr double kLabelBucket = 1e-9;
inline constexpr std::size_t kMaxAlphabet = 64;

struct TrialReport {
  std::string graph_id;
  std::size_t node_pairs_tested = 0;
  // WL merged the pair but the embeddings differ by more than the tolerance.
  std::size_t wl_merged_gt_separated = 0;
  // WL separated the pair but the constructed embeddings did not.
  std::size_t wl_separated_gt_merged_after_tuning = 0;
  double tolerance = 0.0;
  std::vector<std::uint64_t> seeds;
  std::size_t layers = 0;
  std::string regime;
};

struct TrialOptions {
  std::string graph_id;
  std::uint64_t base_seed = 1;
  // Walk length of the RRWP edge labels, 0 = pick per trial.
  std::size_t rrwp_steps = 0;
};

// Dense GRIT stacks on the complete rewiring of `g`, node inputs all ones,
// pair inputs the RRWP vectors of `g` plus the virtual-edge indicator. For
// each seed, pairs of nodes whose stable edge-labeled WL colors agree must
// embed within `tol` in the sup norm. Every unordered pair is tested once
// per seed.
// Throws kCapacityExceeded.
TrialReport run_upper_bound_trial(const Graph& g, std::size_t num_layers,
                                  std::size_t num_param_seeds,
                                  double tol = kMergedTolerance,
                                  const TrialOptions& options = {});

// Hand-set parameters: zero query and attention vector (uniform weights),
// key and edge gates that one-hot the (neighbor color, edge label) pair,
// identity value path, and a self term weighted by sqrt(2). Colors are
// relabeled between layers. Pairs WL separates must end up more than `tol`
// apart. Throws kCapacityExceeded, kAlphabetTooLarge.
TrialReport run_attainment_trial(const Graph& g, double tol = kSeparatedTolerance,
                                 const TrialOptions& options = {});

}  // namespace graphpe

#endif  // GRAPHPE_LAB_HPP_
