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

// Vertex catalogs of the graph families and the exhaustive suite that
// compares them with the combinatorial predictions.

#ifndef SPECTRAVERT_VERTICES_H_
#define SPECTRAVERT_VERTICES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spectravert/normalcone.h"
#include "spectravert/spectra.h"

namespace spectravert {

struct CatalogEntry {
  CombinatorialObject object;
  SymMat matrix;
  NormalConeReport report;
};

struct VertexCatalog {
  FamilySpec family;
  std::vector<CatalogEntry> vertices;
  std::vector<CombinatorialObject> theorem_prediction;
  bool match = false;
};

// Candidate objects of a family, in enumeration order: all subsets for the
// lifted families, sign vectors with the first coordinate fixed to + for
// the elliptope, all sign vectors for its lifted variants, basis vectors
// for theta3.
std::vector<CombinatorialObject> candidate_objects(const FamilySpec& spec);

// The combinatorial vertex characterization of the family.
bool predicted_vertex(const FamilySpec& spec, const CombinatorialObject& obj);

// Runs the rank-one test and the full report on every feasible candidate;
// throws std::logic_error if they disagree. Throws InvalidArgument above
// the enumeration gate.
VertexCatalog enumerate_vertices(const FamilySpec& spec);

struct NegativeWitness {
  std::string description;  // "midpoint {1},{2}" or "slater"
  SymMat matrix;
  NormalConeReport report;
  bool rejected = false;  // feasible, rank >= 2 and not a vertex
};

// Midpoints of all pairs of catalogued vertices, then the Slater witness.
std::vector<NegativeWitness> negative_witnesses(const FamilySpec& spec);
std::vector<NegativeWitness> negative_witnesses(const VertexCatalog& catalog);

struct SuiteOptions {
  std::size_t n_max = 5;
  std::vector<FamilyKind> families;  // empty means all
  std::size_t threads = 1;
  // Graphs per order above 4 (all labeled graphs are used up to 4).
  std::size_t sample = 50;
  std::uint64_t seed = 1;
};

struct SuiteCell {
  std::string graph;
  std::string family;
  std::size_t predicted = 0;
  std::size_t found = 0;
  bool match = false;
  bool negatives_rejected = false;
  std::string error;  // set when the cell threw
};

struct SuiteReport {
  std::vector<SuiteCell> cells;
  std::size_t failures = 0;
};

// Graphs for one order: every labeled graph for n <= 4, otherwise `sample`
// seeded draws of an edge mask.
std::vector<Graph> suite_graphs(std::size_t n, std::size_t sample, std::uint64_t seed);

SuiteReport verify_suite(const SuiteOptions& options);

}  // namespace spectravert

#endif  // SPECTRAVERT_VERTICES_H_
