// Copyright 2026 The Spectravert Authors
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

#include "spectravert/graphs.h"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace spectravert {

Edge make_edge(std::size_t i, std::size_t j) {
  if (i == j) throw InvalidArgument("loop edge");
  return i < j ? Edge{i, j} : Edge{j, i};
}

Graph::Graph(Labels vertices, EdgeSet edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& [i, j] : edges_) {
    if (i >= j) throw InvalidArgument("edge endpoints must be distinct and ordered");
    if (j >= vertices_.size()) throw InvalidArgument("edge endpoint out of range");
  }
}

Graph Graph::empty(std::size_t n) { return Graph(Labels::range(n), {}); }

Graph Graph::complete(std::size_t n) { return Graph(Labels::range(n), all_pairs(n)); }

Graph Graph::path(std::size_t n) {
  EdgeSet e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.insert({i, i + 1});
  return Graph(Labels::range(n), std::move(e));
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  return edges_.count(make_edge(i, j)) > 0;
}

std::string Graph::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < order(); ++i) out << (i ? "," : "") << vertices_[i];
  out << "|";
  bool first = true;
  for (const auto& [i, j] : edges_) {
    out << (first ? "" : ",") << vertices_[i] << "-" << vertices_[j];
    first = false;
  }
  return out.str();
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::string location(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

Graph parse_edgelist(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<std::string> names;
  auto index = [&names](const std::string& label) {
    auto it = std::find(names.begin(), names.end(), label);
    if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
    names.push_back(label);
    return names.size() - 1;
  };
  EdgeSet edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      index(tokens[0]);
      continue;
    }
    if (tokens.size() != 2) {
      throw InvalidArgument(location(line_no) + "expected two labels per edge");
    }
    if (tokens[0] == tokens[1]) throw InvalidArgument(location(line_no) + "loop at " + tokens[0]);
    const std::size_t i = index(tokens[0]);
    const std::size_t j = index(tokens[1]);
    if (!edges.insert(make_edge(i, j)).second && warnings) {
      warnings->push_back(location(line_no) + "duplicate edge " + tokens[0] + " " + tokens[1]);
    }
  }
  return Graph(Labels(std::move(names)), std::move(edges));
}

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidArgument(location(line_no) + "expected a nonnegative integer, got '" + tok + "'");
  }
  return std::stoul(tok);
}

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<std::size_t> n;
  EdgeSet edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n) throw InvalidArgument(location(line_no) + "second problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw InvalidArgument(location(line_no) + "expected 'p edge n m'");
      }
      n = parse_count(tokens[2], line_no);
      parse_count(tokens[3], line_no);
      continue;
    }
    if (tokens[0] == "e") {
      if (!n) throw InvalidArgument(location(line_no) + "edge before problem line");
      if (tokens.size() != 3) throw InvalidArgument(location(line_no) + "expected 'e u v'");
      const std::size_t u = parse_count(tokens[1], line_no);
      const std::size_t v = parse_count(tokens[2], line_no);
      if (u == 0 || v == 0 || u > *n || v > *n) {
        throw InvalidArgument(location(line_no) + "endpoint out of range");
      }
      if (u == v) throw InvalidArgument(location(line_no) + "loop at " + tokens[1]);
      if (!edges.insert(make_edge(u - 1, v - 1)).second && warnings) {
        warnings->push_back(location(line_no) + "duplicate edge " + tokens[1] + " " + tokens[2]);
      }
      continue;
    }
    throw InvalidArgument(location(line_no) + "unrecognized line '" + line + "'");
  }
  if (!n) throw InvalidArgument("missing 'p edge n m' line");
  return Graph(Labels::range(*n), std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings) {
  return format == GraphFormat::kDimacs ? parse_dimacs(text, warnings)
                                        : parse_edgelist(text, warnings);
}

GraphFormat format_for_path(std::string_view path) {
  auto ends_with = [path](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  return ends_with(".col") || ends_with(".dimacs") ? GraphFormat::kDimacs : GraphFormat::kEdgeList;
}

EdgeSet all_pairs(std::size_t n) {
  EdgeSet e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.insert({i, j});
  }
  return e;
}

EdgeSet complement_edges(const EdgeSet& edges, std::size_t n) {
  EdgeSet e;
  for (const auto& pair : all_pairs(n)) {
    if (!edges.count(pair)) e.insert(pair);
  }
  return e;
}

Graph complement(const Graph& g) {
  return Graph(g.vertices(), complement_edges(g.edges(), g.order()));
}

std::vector<std::size_t> degree_profile(const Graph& g) {
  std::vector<std::size_t> deg(g.order(), 0);
  for (const auto& [i, j] : g.edges()) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

std::map<std::string, std::size_t> degree_map(const Graph& g) {
  std::map<std::string, std::size_t> out;
  const auto deg = degree_profile(g);
  for (std::size_t i = 0; i < g.order(); ++i) out[g.vertices()[i]] = deg[i];
  return out;
}

bool is_stable(const Graph& g, const VertexSubset& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (g.has_edge(s[a], s[b])) return false;
    }
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSubset& s) {
  for (const auto& [i, j] : g.edges()) {
    const bool hit = std::binary_search(s.begin(), s.end(), i) ||
                     std::binary_search(s.begin(), s.end(), j);
    if (!hit) return false;
  }
  return true;
}

std::vector<VertexSubset> enumerate_subsets(std::size_t n) {
  if (n >= 63) throw InvalidArgument("too many vertices to enumerate subsets");
  std::vector<VertexSubset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSubset s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSubset& a, const VertexSubset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<VertexSubset> enumerate_stable_sets(const Graph& g) {
  check_gate(g);
  std::vector<VertexSubset> out;
  for (auto& s : enumerate_subsets(g.order())) {
    if (is_stable(g, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<VertexSubset> enumerate_vertex_covers(const Graph& g) {
  check_gate(g);
  std::vector<VertexSubset> out;
  for (auto& s : enumerate_subsets(g.order())) {
    if (is_vertex_cover(g, s)) out.push_back(std::move(s));
  }
  return out;
}

VertexSubset subset_complement(const VertexSubset& s, std::size_t n) {
  VertexSubset out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

std::string subset_to_string(const Graph& g, const VertexSubset& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += g.vertices()[s[k]];
  }
  return out + "}";
}

std::size_t enumeration_gate() {
  if (const char* env = std::getenv("SPECTRAVERT_GATE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 20;
}

void check_gate(const Graph& g) {
  const std::size_t gate = enumeration_gate();
  if (g.order() > gate) {
    throw InvalidArgument("graph has " + std::to_string(g.order()) +
                          " vertices, above the enumeration gate of " + std::to_string(gate));
  }
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  EdgeSet e;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) e.insert({i, j});
    }
  }
  return Graph(Labels::range(n), std::move(e));
}

std::vector<Graph> all_labeled_graphs(std::size_t n) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (pairs >= 63) throw InvalidArgument("too many labeled graphs to enumerate");
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    out.push_back(graph_from_mask(n, mask));
  }
  return out;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeSet e;
  for (const auto& pair : all_pairs(n)) {
    if (coin(rng)) e.insert(pair);
  }
  return Graph(Labels::range(n), std::move(e));
}

}  // namespace spectravert
