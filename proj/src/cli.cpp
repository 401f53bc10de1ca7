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

#include "graphpe/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <vector>

#ifdef GRAPHPE_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "graphpe/error.hpp"
#include "graphpe/generators.hpp"
#include "graphpe/io.hpp"
#include "graphpe/lab.hpp"
#include "graphpe/layers.hpp"
#include "graphpe/pe.hpp"
#include "graphpe/profiler.hpp"
#include "graphpe/run_config.hpp"
#include "graphpe/wl.hpp"

namespace graphpe {
namespace {

namespace fs = std::filesystem;

struct InputFlags {
  std::string path;
  std::optional<std::size_t> num_nodes;
  bool directed = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input", path, "Graph file (.json = graph_json, else edge list)")
        ->required();
    cmd->add_option("--num-nodes", num_nodes, "Node count for edge lists");
    cmd->add_flag("--directed", directed, "Read edge lists as directed");
  }

  Graph load() const {
    return parse_graph(GraphFile{detect_format(path), path},
                       ParseOptions{num_nodes, directed});
  }
};

struct PEFlags {
  std::string kind = "rwse";
  PEConfig cfg = RunConfig::default_pe_config(PEKind::kRWSE);

  void add_to(CLI::App* cmd, bool kind_required) {
    std::vector<std::string> names;
    for (PEKind k : kAllPEKinds) names.emplace_back(pe_kind_name(k));
    auto* opt = cmd->add_option("--kind", kind, "PE kind")->check(CLI::IsMember(names));
    if (kind_required) opt->required();
    cmd->add_option("--k", cfg.k, "Eigenpairs or walk steps")->capture_default_str();
    cmd->add_option("--beta", cfg.beta, "GCKN diffusion time")->capture_default_str();
    cmd->add_option("--alpha", cfg.alpha, "PPR teleport probability")
        ->capture_default_str();
    cmd->add_option("--dh", cfg.hidden_dim, "WLPE width")->capture_default_str();
    cmd->add_option("--wl-iters", cfg.wl_iters, "WLPE rounds")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Sign-flip seed, 0 = canonical")
        ->capture_default_str();
  }

  PEConfig config_for(std::string_view name) const {
    const auto parsed = parse_pe_kind(name);
    if (!parsed) fail(Errc::kConfigError, "unknown PE kind '" + std::string(name) + "'");
    PEConfig out = cfg;
    out.kind = *parsed;
    return out;
  }
};

std::vector<fs::path> graph_files(const std::string& dir) {
  if (!fs::is_directory(dir)) fail(Errc::kIoError, dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".edges" || ext == ".txt" || ext == ".json") files.push_back(entry.path());
  }
  std::ranges::sort(files);
  return files;
}

std::vector<std::string_view> split_list(std::string_view list) {
  std::vector<std::string_view> items;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    if (comma != 0) items.push_back(list.substr(0, comma));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return items;
}

DenseMatrix random_uniform_rows(std::size_t rows, std::size_t cols,
                                std::mt19937_64& gen) {
  return random_matrix(rows, cols, gen, -1.0, 1.0);
}

// Sparse over K_n with arc features vs dense over the same pair tensor.
double equivalence_gap(std::size_t n, std::mt19937_64& gen) {
  constexpr std::size_t kNodeDim = 4;
  constexpr std::size_t kEdgeDim = 3;
  const Graph g = complete_graph(n);
  const DenseMatrix x = random_uniform_rows(n, kNodeDim, gen);
  const DenseMatrix e = random_uniform_rows(g.num_arcs(), kEdgeDim, gen);
  const GritLayerParams p = random_grit_params(kNodeDim, kEdgeDim, gen);
  PairTensor pairs(n, kEdgeDim);
  for (std::size_t a = 0; a < g.num_arcs(); ++a) {
    const auto row = e.row(a);
    std::ranges::copy(row, pairs.at(g.arc_source(a), g.arc_target(a)).begin());
  }
  const SparseGritResult sparse = sparse_grit_forward(g, x, e, p);
  const DenseGritResult dense = dense_grit_forward(g, x, pairs, p);
  double gap = max_abs_diff(sparse.nodes, dense.nodes);
  for (std::size_t a = 0; a < g.num_arcs(); ++a) {
    const auto want = dense.pairs.at(g.arc_source(a), g.arc_target(a));
    for (std::size_t c = 0; c < kEdgeDim; ++c) {
      gap = std::max(gap, std::abs(sparse.edges(a, c) - want[c]));
    }
  }
  return gap;
}

std::string file_stem_id(const fs::path& p) { return p.stem().string(); }

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positional encodings, WL refinement and graph transformer layers",
               "graphpe"};
  app.require_subcommand(1);

  // pe
  auto* pe = app.add_subcommand("pe", "Positional encodings");
  pe->require_subcommand(1);
  auto* pe_compute = pe->add_subcommand("compute", "Compute one PE for a graph");
  InputFlags compute_in;
  PEFlags compute_pe_flags;
  std::string compute_out;
  compute_in.add_to(pe_compute);
  compute_pe_flags.add_to(pe_compute, true);
  pe_compute->add_option("--out", compute_out, "Output CSV")->required();

  auto* pe_profile = pe->add_subcommand("profile", "Time and memory of PE kinds");
  std::string profile_dataset, profile_kinds, profile_out;
  std::size_t profile_reps = 3, profile_jobs = 1;
  PEFlags profile_pe_flags;
  pe_profile->add_option("--dataset", profile_dataset, "Directory of graph files")
      ->required();
  pe_profile->add_option("--kinds", profile_kinds, "Comma-separated PE kinds")
      ->required();
  pe_profile->add_option("--reps", profile_reps, "Repetitions")->capture_default_str();
  pe_profile->add_option("--jobs", profile_jobs, "Worker threads")->capture_default_str();
  pe_profile->add_option("--out", profile_out, "Output CSV")->required();
  profile_pe_flags.add_to(pe_profile, false);

  // wl
  auto* wl = app.add_subcommand("wl", "Weisfeiler-Lehman refinement");
  wl->require_subcommand(1);
  auto* wl_refine_cmd = wl->add_subcommand("refine", "Refine and print node colors");
  InputFlags wl_in;
  std::string wl_labels;
  std::size_t wl_rounds = 0;
  bool wl_in_neighbors = false;
  wl_in.add_to(wl_refine_cmd);
  wl_refine_cmd->add_option("--edge-labels", wl_labels, "File of 'u v label' lines");
  wl_refine_cmd->add_option("--max-rounds", wl_rounds, "Round limit, 0 = node count")
      ->capture_default_str();
  wl_refine_cmd->add_flag("--in-neighbors", wl_in_neighbors,
                          "Directed graphs: also use in-neighbors");

  // layers
  auto* layers = app.add_subcommand("layers", "Layer stacks");
  layers->require_subcommand(1);
  auto* layers_run = layers->add_subcommand("run", "Run a configured stack");
  std::string layers_config;
  std::vector<std::string> layers_sets;
  std::optional<std::string> layers_input, layers_output;
  std::optional<std::uint64_t> layers_seed;
  layers_run->add_option("--config", layers_config, "key = value file")->required();
  layers_run->add_option("--set", layers_sets, "Override, key=value");
  layers_run->add_option("--input", layers_input, "Override the input graph");
  layers_run->add_option("--output", layers_output, "Override the output path");
  layers_run->add_option("--seed", layers_seed, "Override the parameter seed");

  // lab
  auto* lab = app.add_subcommand("lab", "Expressiveness trials");
  lab->require_subcommand(1);
  struct LabFlags {
    std::string graphs, out;
    std::size_t seeds = 3, layers = 2;
    std::optional<double> tol;
  };
  LabFlags lab_flags;
  auto add_lab = [&](const char* name, const char* help) {
    auto* cmd = lab->add_subcommand(name, help);
    cmd->add_option("--graphs", lab_flags.graphs, "Directory of graph files")->required();
    cmd->add_option("--seeds", lab_flags.seeds, "Parameter seeds")->capture_default_str();
    cmd->add_option("--tol", lab_flags.tol, "Distance tolerance");
    cmd->add_option("--layers", lab_flags.layers, "Stacked layers")
        ->capture_default_str();
    cmd->add_option("--out", lab_flags.out, "Output JSONL")->required();
    return cmd;
  };
  auto* lab_upper = add_lab("upper-bound", "WL-merged pairs stay merged");
  auto* lab_attain = add_lab("attain", "Constructed layers separate what WL separates");

  // grit
  auto* grit = app.add_subcommand("grit", "GRIT layer checks");
  grit->require_subcommand(1);
  auto* grit_eq = grit->add_subcommand("check-equivalence",
                                       "Sparse on complete graphs vs dense attention");
  std::size_t eq_nodes = 6, eq_trials = 50;
  std::uint64_t eq_seed = 1;
  grit_eq->add_option("--nodes", eq_nodes, "Nodes")->capture_default_str();
  grit_eq->add_option("--trials", eq_trials, "Trials")->capture_default_str();
  grit_eq->add_option("--seed", eq_seed, "Seed")->capture_default_str();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Synthetic graphs");
  gen_cmd->require_subcommand(1);
  auto* gen_er = gen_cmd->add_subcommand("er", "Erdos-Renyi edge lists");
  std::size_t er_nodes = 64, er_count = 100;
  double er_p = 0.3;
  std::uint64_t er_seed = 1;
  std::string er_out;
  gen_er->add_option("--nodes", er_nodes, "Nodes per graph")->capture_default_str();
  gen_er->add_option("--p", er_p, "Edge probability")->capture_default_str();
  gen_er->add_option("--count", er_count, "Graphs")->capture_default_str();
  gen_er->add_option("--seed", er_seed, "Seed")->capture_default_str();
  gen_er->add_option("--out", er_out, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (pe_compute->parsed()) {
      const Graph g = compute_in.load();
      const PEConfig cfg = compute_pe_flags.config_for(compute_pe_flags.kind);
      write_pe_output(compute_pe(g, cfg), compute_out);
    } else if (pe_profile->parsed()) {
      std::vector<Graph> dataset;
      for (const fs::path& f : graph_files(profile_dataset)) {
        dataset.push_back(parse_graph(GraphFile{detect_format(f), f}));
      }
      const std::string id = fs::path(profile_dataset).filename().empty()
                                 ? fs::path(profile_dataset).parent_path().filename().string()
                                 : fs::path(profile_dataset).filename().string();
      std::vector<ProfileRecord> records;
      for (std::string_view name : split_list(profile_kinds)) {
        records.push_back(profile_pe(dataset, profile_pe_flags.config_for(name),
                                     profile_reps, ProfileOptions{id, profile_jobs}));
        if (records.back().failures > 0) {
          err << name << ": " << records.back().failures << " graphs failed\n";
        }
      }
      write_text_file(profile_out, emit_profile_table(records));
    } else if (wl_refine_cmd->parsed()) {
      const Graph g = wl_in.load();
      std::optional<std::vector<std::int64_t>> labels;
      if (!wl_labels.empty()) labels = parse_edge_labels(g, read_text_file(wl_labels));
      const std::size_t rounds = wl_rounds ? wl_rounds : std::max<std::size_t>(g.num_nodes(), 1);
      std::optional<std::span<const std::int64_t>> label_span;
      if (labels) label_span = std::span<const std::int64_t>(*labels);
      const WLColoring c =
          wl_refine(g, std::nullopt, label_span, rounds, WLOptions{wl_in_neighbors});
      std::string csv = "node,color\n";
      for (std::size_t v = 0; v < c.colors.size(); ++v) {
        csv += std::to_string(v) + "," + std::to_string(c.colors[v]) + "\n";
      }
      out << csv;
      err << "rounds=" << c.rounds << " colors=" << c.num_colors()
          << " stable=" << (c.stable ? 1 : 0) << "\n";
    } else if (layers_run->parsed()) {
      RunConfig cfg = parse_run_config(read_text_file(layers_config));
      for (const std::string& kv : layers_sets) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
          err << "--set expects key=value, got '" << kv << "'\n";
          return kExitUsage;
        }
        apply_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (layers_input) cfg.inputs = {*layers_input};
      if (layers_output) cfg.output = *layers_output;
      if (layers_seed) cfg.seed = *layers_seed;
      if (cfg.inputs.size() != 1) fail(Errc::kConfigError, "layers run needs exactly one input");
      if (cfg.output.empty()) fail(Errc::kConfigError, "layers run needs an output path");
      const fs::path in = cfg.inputs.front();
      const Graph g = parse_graph(GraphFile{detect_format(in), in});
      write_text_file(cfg.output, format_node_csv(run_layers(cfg, g)));
    } else if (lab_upper->parsed() || lab_attain->parsed()) {
      const bool upper = lab_upper->parsed();
      const double tol = lab_flags.tol.value_or(upper ? kMergedTolerance : kSeparatedTolerance);
      std::string lines;
      std::size_t graphs = 0, violations = 0, pairs = 0;
      for (const fs::path& f : graph_files(lab_flags.graphs)) {
        const Graph g = parse_graph(GraphFile{detect_format(f), f});
        TrialOptions opts;
        opts.graph_id = file_stem_id(f);
        const TrialReport r = upper ? run_upper_bound_trial(g, lab_flags.layers,
                                                            lab_flags.seeds, tol, opts)
                                    : run_attainment_trial(g, tol, opts);
        lines += trial_report_json(r) + "\n";
        ++graphs;
        pairs += r.node_pairs_tested;
        violations += upper ? r.wl_merged_gt_separated
                            : r.wl_separated_gt_merged_after_tuning;
      }
      write_text_file(lab_flags.out, lines);
      out << graphs << " graphs, " << pairs << " pairs, " << violations
          << (upper ? " violations" : " failures") << "\n";
    } else if (grit_eq->parsed()) {
      if (eq_nodes < 2) fail(Errc::kConfigError, "--nodes must be >= 2");
      std::mt19937_64 gen(eq_seed);
      constexpr double kTol = 1e-10;
      std::size_t within = 0;
      for (std::size_t t = 0; t < eq_trials; ++t) {
        if (equivalence_gap(eq_nodes, gen) <= kTol) ++within;
      }
      out << within << "/" << eq_trials << " within 1e-10\n";
      if (within != eq_trials) return kExitDomainError;
    } else if (gen_er->parsed()) {
      fs::create_directories(er_out);
      std::mt19937_64 gen(er_seed);
      for (std::size_t i = 0; i < er_count; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "g%04zu.edges", i);
        write_graph(erdos_renyi(er_nodes, er_p, gen),
                    GraphFile{GraphFormat::kEdgeList, fs::path(er_out) / name});
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace graphpe
