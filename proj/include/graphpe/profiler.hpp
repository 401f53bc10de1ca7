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

#ifndef GRAPHPE_PROFILER_HPP_
#define GRAPHPE_PROFILER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphpe/graph.hpp"
#include "graphpe/pe.hpp"

namespace graphpe {

struct ProfileRecord {
  PEKind pe_kind = PEKind::kLapPE;
  std::string dataset_id;
  std::size_t graphs = 0;
  double total_seconds = 0.0;  // median over reps
  std::size_t peak_bytes = 0;  // max over reps, above the pre-run baseline
  PEConfig params;
  std::string host_fingerprint;
  std::size_t failures = 0;          // graphs whose PE threw, first rep
  std::uint64_t output_checksum = 0;  // of the first rep's outputs
};

struct ProfileOptions {
  std::string dataset_id = "dataset";
  // Worker threads. Above 1 the peak covers all workers together.
  std::size_t jobs = 1;
};

// Runs compute_pe over the dataset `reps` times, holding each rep's outputs
// until it ends. Throws kConfigError for reps == 0.
ProfileRecord profile_pe(std::span<const Graph> dataset, const PEConfig& cfg,
                         std::size_t reps, const ProfileOptions& options = {});

// FNV-1a over the bit patterns of every output value, graph by graph.
std::uint64_t pe_checksum(std::span<const PEOutput> outputs);

// CSV `pe,dataset,graphs,seconds,peak_mb`, rows sorted by (dataset, pe),
// MB = 2^20 bytes.
std::string emit_profile_table(std::span<const ProfileRecord> records);

// Shortest decimal that parses back to `x`, always with a '.' or exponent.
std::string format_real(double x);

}  // namespace graphpe

#endif  // GRAPHPE_PROFILER_HPP_
