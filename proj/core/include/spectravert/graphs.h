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

// Finite simple graphs, the two text formats we read, and the exhaustive
// enumerators (stable sets, vertex covers) that back the vertex predictions.

#ifndef SPECTRAVERT_GRAPHS_H_
#define SPECTRAVERT_GRAPHS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectravert/exactla.h"

namespace spectravert {

// Unordered pair of vertex indices, stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;
using EdgeSet = std::set<Edge>;
// Sorted vertex indices.
using VertexSubset = std::vector<std::size_t>;

Edge make_edge(std::size_t i, std::size_t j);

class Graph {
 public:
  Graph() = default;
  Graph(Labels vertices, EdgeSet edges);

  static Graph empty(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);

  const Labels& vertices() const { return vertices_; }
  const EdgeSet& edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }
  bool has_edge(std::size_t i, std::size_t j) const;

  // Compact text form, e.g. "V=1,2,3 E=12,23" style: "1,2,3|1-2,2-3".
  std::string to_string() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  Labels vertices_;
  EdgeSet edges_;
};

// The E+/E- pair of a generalized theta body. The two sets may overlap.
struct EdgeSplit {
  EdgeSet eplus;
  EdgeSet eminus;
};

enum class GraphFormat { kEdgeList, kDimacs };

// edgelist: one edge per line as two whitespace-separated labels, '#'
// starts a comment, a line with a single label declares an isolated vertex.
// dimacs: "p edge n m" then "e u v" lines with 1-based endpoints; "c" lines
// are comments. Loops and malformed lines throw InvalidArgument; duplicate
// edges are dropped and reported through `warnings`.
Graph parse_graph(std::string_view text, GraphFormat format,
                  std::vector<std::string>* warnings = nullptr);
// Picks the format from the extension: .col/.dimacs are DIMACS, anything
// else is an edge list.
GraphFormat format_for_path(std::string_view path);

Graph complement(const Graph& g);
EdgeSet all_pairs(std::size_t n);
EdgeSet complement_edges(const EdgeSet& edges, std::size_t n);

// Degree of each vertex, in vertex order.
std::vector<std::size_t> degree_profile(const Graph& g);
std::map<std::string, std::size_t> degree_map(const Graph& g);

// Subsets of the vertex set are enumerated in shortlex order (by size,
// then lexicographically by sorted index list).
bool is_stable(const Graph& g, const VertexSubset& s);
bool is_vertex_cover(const Graph& g, const VertexSubset& s);
std::vector<VertexSubset> enumerate_subsets(std::size_t n);
std::vector<VertexSubset> enumerate_stable_sets(const Graph& g);
std::vector<VertexSubset> enumerate_vertex_covers(const Graph& g);
VertexSubset subset_complement(const VertexSubset& s, std::size_t n);
std::string subset_to_string(const Graph& g, const VertexSubset& s);

// Default 20; SPECTRAVERT_GATE overrides it when set to a positive integer.
std::size_t enumeration_gate();
// Throws InvalidArgument when the graph is above the enumeration gate.
void check_gate(const Graph& g);

// All 2^binom(n,2) labeled graphs on vertices 1..n, ordered by edge mask.
std::vector<Graph> all_labeled_graphs(std::size_t n);
// Edge mask -> graph on 1..n, pairs ordered (1,2),(1,3),...,(n-1,n).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
// Erdos-Renyi G(n, p) with a fixed seed.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace spectravert

#endif  // SPECTRAVERT_GRAPHS_H_
