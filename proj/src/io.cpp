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

#include "graphpe/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphpe/error.hpp"

namespace graphpe {
namespace {

using Json = nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// Position of the first `"key"` in the document, or its start.
[[noreturn]] void json_fail(std::string_view text, std::string_view key,
                            const std::string& message) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const std::size_t pos = key.empty() ? std::string_view::npos : text.find(quoted);
  const std::size_t offset = pos == std::string_view::npos ? 0 : pos;
  throw ParseError(message, line_of(text, offset), offset);
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), base + start});
  }
  return tokens;
}

template <typename Int>
Int parse_int(const Token& tok, std::size_t line) {
  Int value{};
  const char* end = tok.text.data() + tok.text.size();
  const auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer, got '" + std::string(tok.text) + "'", line,
                     tok.offset);
  }
  return value;
}

// Calls fn(line_number, line_offset, content) for every line with the
// comment removed and the line ending stripped. Comments go to on_comment.
template <typename LineFn, typename CommentFn>
void for_each_line(std::string_view text, LineFn&& fn, CommentFn&& on_comment) {
  std::size_t pos = 0;
  std::size_t line = 1;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view content = text.substr(pos, end - pos);
    if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
    const std::size_t hash = content.find('#');
    if (hash != std::string_view::npos) {
      on_comment(content.substr(hash + 1));
      content = content.substr(0, hash);
    }
    fn(line, pos, content);
    if (end == text.size()) break;
    pos = end + 1;
    ++line;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

GraphFormat detect_format(const std::filesystem::path& path) {
  return path.extension() == ".json" ? GraphFormat::kGraphJson : GraphFormat::kEdgeList;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(Errc::kIoError, "cannot read " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::kIoError, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) fail(Errc::kIoError, "cannot write " + path.string());
}

Graph parse_graph(const GraphFile& file, const ParseOptions& options) {
  const std::string text = read_text_file(file.path);
  return file.format == GraphFormat::kGraphJson ? parse_graph_json(text)
                                                : parse_edge_list(text, options);
}

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::vector<NodePair> edges;
  std::optional<std::size_t> declared_nodes;
  bool declared_directed = false;
  std::size_t max_index = 0;
  for_each_line(
      text,
      [&](std::size_t line, std::size_t offset, std::string_view content) {
        const std::vector<Token> tokens = split_tokens(content, offset);
        if (tokens.empty()) return;
        if (tokens.size() != 2) {
          throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) +
                               " fields",
                           line, tokens.front().offset);
        }
        const auto u = parse_int<std::size_t>(tokens[0], line);
        const auto v = parse_int<std::size_t>(tokens[1], line);
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u, v);
      },
      [&](std::string_view comment) {
        comment = trim(comment);
        auto value_of = [&](std::string_view key) -> std::optional<std::string_view> {
          if (!comment.starts_with(key)) return std::nullopt;
          return trim(comment.substr(key.size()));
        };
        if (auto v = value_of("num_nodes:")) {
          std::size_t n = 0;
          const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), n);
          if (ec == std::errc() && ptr == v->data() + v->size()) declared_nodes = n;
        } else if (auto d = value_of("directed:")) {
          declared_directed = *d == "1" || *d == "true";
        }
      });

  std::size_t n = 0;
  if (options.num_nodes) {
    n = *options.num_nodes;
  } else if (declared_nodes) {
    n = *declared_nodes;
  } else if (!edges.empty()) {
    n = max_index + 1;
  } else {
    throw ParseError("no edges and no node count; cannot derive nodes", 0,
                     text.size());
  }
  const bool directed = options.directed || declared_directed;
  return Graph::build(edges, n, directed);
}

Graph parse_graph_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of(text, offset),
                     offset);
  }
  if (!doc.is_object()) json_fail(text, "", "graph_json must be an object");
  if (!doc.contains("num_nodes") || !doc["num_nodes"].is_number_unsigned()) {
    json_fail(text, "num_nodes", "num_nodes must be a non-negative integer");
  }
  const auto n = doc["num_nodes"].get<std::size_t>();
  bool directed = false;
  if (doc.contains("directed")) {
    if (!doc["directed"].is_boolean()) json_fail(text, "directed", "directed must be a boolean");
    directed = doc["directed"].get<bool>();
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    json_fail(text, "edges", "edges must be an array");
  }
  std::vector<NodePair> edges;
  for (const Json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      json_fail(text, "edges", "each edge must be [u, v] with non-negative integers");
    }
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }

  auto read_rows = [&](const char* key, std::size_t expected) {
    const Json& rows = doc[key];
    if (!rows.is_array()) json_fail(text, key, std::string(key) + " must be an array");
    if (rows.size() != expected) {
      json_fail(text, key, std::string(key) + " has " + std::to_string(rows.size()) +
                               " rows, expected " + std::to_string(expected));
    }
    std::size_t width = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array()) json_fail(text, key, std::string(key) + " rows must be arrays");
      if (r == 0) width = rows[r].size();
      if (rows[r].size() != width) {
        json_fail(text, key, std::string(key) + " rows have unequal widths");
      }
    }
    DenseMatrix m(expected, width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < width; ++c) {
        if (!rows[r][c].is_number()) json_fail(text, key, std::string(key) + " must be numeric");
        m(r, c) = rows[r][c].get<double>();
      }
    }
    return m;
  };

  Graph g = doc.contains("edge_features")
                ? Graph::build(edges, n, directed, read_rows("edge_features", edges.size()))
                : Graph::build(edges, n, directed);
  if (doc.contains("node_features")) {
    g = g.with_node_features(read_rows("node_features", n));
  }
  return g;
}

std::string format_edge_list(const Graph& g) {
  if (g.node_features() || g.edge_features()) {
    fail(Errc::kIoError, "edge lists cannot carry features; use graph_json");
  }
  std::string out = "# num_nodes: " + std::to_string(g.num_nodes()) + "\n";
  if (g.directed()) out += "# directed: 1\n";
  for (const auto& [u, v] : g.edge_pairs()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::string format_graph_json(const Graph& g) {
  Json doc;
  doc["num_nodes"] = g.num_nodes();
  doc["directed"] = g.directed();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edge_pairs()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  auto rows_json = [](const DenseMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
  };
  if (g.node_features()) doc["node_features"] = rows_json(*g.node_features());
  if (const auto ef = g.edge_pair_features()) doc["edge_features"] = rows_json(*ef);
  return doc.dump() + "\n";
}

void write_graph(const Graph& g, const GraphFile& file) {
  write_text_file(file.path, file.format == GraphFormat::kGraphJson
                                 ? format_graph_json(g)
                                 : format_edge_list(g));
}

std::vector<std::int64_t> parse_edge_labels(const Graph& g, std::string_view text) {
  std::vector<std::int64_t> labels(g.num_arcs(), 0);
  for_each_line(
      text,
      [&](std::size_t line, std::size_t offset, std::string_view content) {
        const std::vector<Token> tokens = split_tokens(content, offset);
        if (tokens.empty()) return;
        if (tokens.size() != 3) {
          throw ParseError("expected 'u v label'", line, tokens.front().offset);
        }
        const auto u = parse_int<std::size_t>(tokens[0], line);
        const auto v = parse_int<std::size_t>(tokens[1], line);
        const auto label = parse_int<std::int64_t>(tokens[2], line);
        const auto arc = u < g.num_nodes() && v < g.num_nodes() ? g.find_arc(u, v)
                                                                 : std::nullopt;
        if (!arc) {
          fail(Errc::kEdgeSetMismatch, "label for missing edge " + std::to_string(u) +
                                           " " + std::to_string(v) + " on line " +
                                           std::to_string(line));
        }
        labels[*arc] = label;
        if (!g.directed()) labels[*g.find_arc(v, u)] = label;
      },
      [](std::string_view) {});
  return labels;
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_node_csv(const DenseMatrix& rows) {
  std::string out = "node";
  for (std::size_t c = 0; c < rows.cols(); ++c) out += ",f" + std::to_string(c);
  out += "\n";
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    out += std::to_string(r);
    for (std::size_t c = 0; c < rows.cols(); ++c) out += "," + format_double(rows(r, c));
    out += "\n";
  }
  return out;
}

std::string format_pair_csv(const PairTensor& pairs) {
  std::string out = "src,dst";
  for (std::size_t c = 0; c < pairs.dim(); ++c) out += ",f" + std::to_string(c);
  out += "\n";
  for (std::size_t i = 0; i < pairs.num_nodes(); ++i) {
    for (std::size_t j = 0; j < pairs.num_nodes(); ++j) {
      out += std::to_string(i) + "," + std::to_string(j);
      for (double x : pairs.at(i, j)) out += "," + format_double(x);
      out += "\n";
    }
  }
  return out;
}

void write_pe_output(const PEOutput& out, const std::filesystem::path& path) {
  if (out.config.kind == PEKind::kSignNet) {
    const std::size_t half = out.node_pe.cols() / 2;
    DenseMatrix plus(out.node_pe.rows(), half), minus(out.node_pe.rows(), half);
    for (std::size_t r = 0; r < out.node_pe.rows(); ++r) {
      for (std::size_t c = 0; c < half; ++c) {
        plus(r, c) = out.node_pe(r, c);
        minus(r, c) = out.node_pe(r, half + c);
      }
    }
    write_text_file(path, format_node_csv(plus));
    write_text_file(path.string() + ".minus.csv", format_node_csv(minus));
    return;
  }
  write_text_file(path, format_node_csv(out.node_pe));
  if (out.pair_pe) write_text_file(path.string() + ".pairs.csv", format_pair_csv(*out.pair_pe));
}

std::string trial_report_json(const TrialReport& report) {
  Json doc;
  doc["graph_id"] = report.graph_id;
  doc["node_pairs_tested"] = report.node_pairs_tested;
  doc["wl_merged_gt_separated"] = report.wl_merged_gt_separated;
  doc["wl_separated_gt_merged_after_tuning"] = report.wl_separated_gt_merged_after_tuning;
  doc["tolerance"] = report.tolerance;
  doc["seeds"] = report.seeds;
  doc["layers"] = report.layers;
  doc["regime"] = report.regime;
  return doc.dump();
}

}  // namespace graphpe
