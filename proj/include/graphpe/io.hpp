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

#ifndef GRAPHPE_IO_HPP_
#define GRAPHPE_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphpe/graph.hpp"
#include "graphpe/lab.hpp"
#include "graphpe/matrix.hpp"
#include "graphpe/pe.hpp"

namespace graphpe {

enum class GraphFormat { kEdgeList, kGraphJson };

struct GraphFile {
  GraphFormat format = GraphFormat::kEdgeList;
  std::filesystem::path path;
};

// `.json` means graph_json, anything else an edge list.
GraphFormat detect_format(const std::filesystem::path& path);

struct ParseOptions {
  // Edge lists only: node count override, and directedness.
  std::optional<std::size_t> num_nodes;
  bool directed = false;
};

// Edge list: one `u v` pair per line, `#` starts a comment. The comments
// `# num_nodes: N` and `# directed: 1` are honored when no override is set.
// graph_json: {num_nodes, directed, edges, node_features?, edge_features?}.
// Throws ParseError, kIndexOutOfRange, kDuplicateEdge, kSelfLoop, kIoError.
Graph parse_graph(const GraphFile& file, const ParseOptions& options = {});
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});
Graph parse_graph_json(std::string_view text);

// Serializations read back by the parsers above. Edge lists carry no
// features; kIoError if the graph has any.
std::string format_edge_list(const Graph& g);
std::string format_graph_json(const Graph& g);
void write_graph(const Graph& g, const GraphFile& file);

// `u v label` lines mapped to arc ids of `g`; undirected graphs label both
// arcs. Unlisted arcs get label 0. Throws ParseError, kEdgeSetMismatch.
std::vector<std::int64_t> parse_edge_labels(const Graph& g, std::string_view text);

// %.17g, with negative zero printed as 0.
std::string format_double(double x);

// `node,f0,...` for node_pe and `<path>.pairs.csv` (`src,dst,f0,...`) when a
// pair tensor is present. SignNet outputs split into `path` (plus half) and
// `<path>.minus.csv`. Throws kIoError.
void write_pe_output(const PEOutput& out, const std::filesystem::path& path);
std::string format_node_csv(const DenseMatrix& rows);
std::string format_pair_csv(const PairTensor& pairs);

std::string trial_report_json(const TrialReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace graphpe

#endif  // GRAPHPE_IO_HPP_
