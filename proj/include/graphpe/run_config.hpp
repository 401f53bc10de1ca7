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

#ifndef GRAPHPE_RUN_CONFIG_HPP_
#define GRAPHPE_RUN_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphpe/graph.hpp"
#include "graphpe/layers.hpp"
#include "graphpe/pe.hpp"

namespace graphpe {

enum class LayerKind { kGrit, kGine, kGatedGcn };

struct RunConfig {
  std::vector<std::string> inputs;
  PEConfig pe = default_pe_config(PEKind::kRWSE);
  Connection connection = Connection::kSparse;
  std::vector<LayerKind> layers;
  std::size_t width = 16;  // node and edge width inside the stack
  bool residual = false;
  std::string output;
  std::uint64_t seed = 1;

  static PEConfig default_pe_config(PEKind kind);
};

// Flat `key = value` lines, `#` comments. Keys: input (repeatable), pe.kind,
// pe.k, pe.beta, pe.alpha, pe.dh, pe.wl_iters, pe.seed, connection
// (sparse | full), layers (comma list of grit, gine, gatedgcn), width,
// residual, output, seed. Throws kConfigError.
RunConfig parse_run_config(std::string_view text);
void apply_config_value(RunConfig& cfg, std::string_view key, std::string_view value);

// PE node rows (after any node features), projected to `width`, through the
// configured stack with seeded uniform(-0.5, 0.5) parameters. Edge inputs are
// the RRWP pair rows, else the edge features, else ones.
DenseMatrix run_layers(const RunConfig& cfg, const Graph& g);

}  // namespace graphpe

#endif  // GRAPHPE_RUN_CONFIG_HPP_
