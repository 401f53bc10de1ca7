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

#include "graphpe/run_config.hpp"

#include <charconv>
#include <random>
#include <string>

#include "graphpe/error.hpp"
#include "graphpe/generators.hpp"

namespace graphpe {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    fail(Errc::kConfigError, std::string(key) + ": invalid number '" +
                                 std::string(value) + "'");
  }
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  const std::string s(value);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    fail(Errc::kConfigError, std::string(key) + ": invalid number '" + s + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail(Errc::kConfigError, std::string(key) + ": expected true or false");
}

DenseMatrix arc_inputs(const Graph& g, const PEOutput& pe) {
  if (pe.pair_pe) {
    DenseMatrix rows(g.num_arcs(), pe.pair_pe->dim());
    for (std::size_t a = 0; a < g.num_arcs(); ++a) {
      rows.set_row(a, pe.pair_pe->at(g.arc_source(a), g.arc_target(a)));
    }
    return rows;
  }
  if (g.edge_features()) return *g.edge_features();
  return DenseMatrix(g.num_arcs(), 1, 1.0);
}

}  // namespace

PEConfig RunConfig::default_pe_config(PEKind kind) {
  PEConfig cfg;
  cfg.kind = kind;
  cfg.k = 8;
  cfg.beta = 1.0;
  cfg.alpha = 0.15;
  cfg.hidden_dim = 16;
  cfg.wl_iters = 3;
  cfg.seed = 0;
  return cfg;
}

void apply_config_value(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "input") {
    cfg.inputs.emplace_back(value);
  } else if (key == "pe.kind") {
    const auto kind = parse_pe_kind(value);
    if (!kind) fail(Errc::kConfigError, "pe.kind: unknown kind '" + std::string(value) + "'");
    cfg.pe.kind = *kind;
  } else if (key == "pe.k") {
    cfg.pe.k = parse_number<std::size_t>(key, value);
  } else if (key == "pe.beta") {
    cfg.pe.beta = parse_real(key, value);
  } else if (key == "pe.alpha") {
    cfg.pe.alpha = parse_real(key, value);
  } else if (key == "pe.dh") {
    cfg.pe.hidden_dim = parse_number<std::size_t>(key, value);
  } else if (key == "pe.wl_iters") {
    cfg.pe.wl_iters = parse_number<std::size_t>(key, value);
  } else if (key == "pe.seed") {
    cfg.pe.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "connection") {
    if (value == "sparse") {
      cfg.connection = Connection::kSparse;
    } else if (value == "full") {
      cfg.connection = Connection::kFullyConnected;
    } else {
      fail(Errc::kConfigError, "connection: expected sparse or full");
    }
  } else if (key == "layers") {
    cfg.layers.clear();
    std::string_view rest = value;
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = trim(rest.substr(0, comma));
      if (item == "grit") {
        cfg.layers.push_back(LayerKind::kGrit);
      } else if (item == "gine") {
        cfg.layers.push_back(LayerKind::kGine);
      } else if (item == "gatedgcn") {
        cfg.layers.push_back(LayerKind::kGatedGcn);
      } else {
        fail(Errc::kConfigError, "layers: unknown layer '" + std::string(item) + "'");
      }
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  } else if (key == "width") {
    cfg.width = parse_number<std::size_t>(key, value);
  } else if (key == "residual") {
    cfg.residual = parse_bool(key, value);
  } else if (key == "output") {
    cfg.output = std::string(value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else {
    fail(Errc::kConfigError, "unknown key '" + std::string(key) + "'");
  }
}

RunConfig parse_run_config(std::string_view text) {
  RunConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(Errc::kConfigError, "line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_config_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      fail(Errc::kConfigError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

DenseMatrix run_layers(const RunConfig& cfg, const Graph& g) {
  if (cfg.width == 0) fail(Errc::kConfigError, "width must be >= 1");
  const bool full = cfg.connection == Connection::kFullyConnected;
  if (full && cfg.width < 2) fail(Errc::kConfigError, "full connection needs width >= 2");
  const PEOutput pe = compute_pe(g, cfg.pe);
  const DenseMatrix x0 =
      g.node_features() ? hconcat(*g.node_features(), pe.node_pe) : pe.node_pe;

  std::mt19937_64 gen(cfg.seed);
  const DenseMatrix x = multiply(x0, random_matrix(x0.cols(), cfg.width, gen));
  const DenseMatrix raw = arc_inputs(g, pe);
  // The rewiring appends the indicator column.
  const std::size_t edge_width = full ? cfg.width - 1 : cfg.width;
  const DenseMatrix e = multiply(raw, random_matrix(raw.cols(), edge_width, gen));

  std::vector<LayerSpec> specs;
  for (LayerKind kind : cfg.layers) {
    switch (kind) {
      case LayerKind::kGrit:
        specs.emplace_back(random_grit_params(cfg.width, cfg.width, gen));
        break;
      case LayerKind::kGine:
        specs.emplace_back(random_gine_params(cfg.width, gen));
        break;
      case LayerKind::kGatedGcn:
        specs.emplace_back(random_gatedgcn_params(cfg.width, gen));
        break;
    }
  }
  return stack_layers(g.without_features(), x, e, specs, cfg.connection,
                      StackOptions{cfg.residual});
}

}  // namespace graphpe
