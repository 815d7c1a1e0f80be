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

#include "spectravert/vertices.h"

#include <atomic>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace spectravert {

namespace {

using Kind = CombinatorialObject::Kind;

bool is_signed_family(FamilyKind k) {
  return k == FamilyKind::kElliptope || k == FamilyKind::kElliptopePrime ||
         k == FamilyKind::kElliptopeDoublePrime;
}

bool graph_free(FamilyKind k) {
  return is_signed_family(k) || k == FamilyKind::kBq || k == FamilyKind::kBqPrime ||
         k == FamilyKind::kBqDoublePrime;
}

bool has_split(FamilyKind k) { return k == FamilyKind::kLiftedThGeneral || k == FamilyKind::kTheta3; }

SymMat midpoint(const SymMat& a, const SymMat& b) { return Rat(1, 2) * (a + b); }

struct SplitChoice {
  std::string tag;
  EdgeSplit split;
};

std::vector<SplitChoice> suite_splits(const Graph& g) {
  const EdgeSet& e = g.edges();
  return {{"empty,E", {{}, e}}, {"E,empty", {e, {}}}, {"comp,E", {complement_edges(e, g.order()), e}}};
}

SuiteCell run_cell(const FamilySpec& spec, const std::string& family_tag) {
  SuiteCell cell;
  cell.graph = spec.graph.to_string();
  cell.family = family_tag;
  try {
    const VertexCatalog catalog = enumerate_vertices(spec);
    cell.predicted = catalog.theorem_prediction.size();
    cell.found = catalog.vertices.size();
    cell.match = catalog.match;
    bool rejected = true;
    for (const auto& w : negative_witnesses(catalog)) rejected = rejected && w.rejected;
    cell.negatives_rejected = rejected;
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  return cell;
}

}  // namespace

std::vector<CombinatorialObject> candidate_objects(const FamilySpec& spec) {
  const std::size_t n = spec.graph.order();
  std::vector<CombinatorialObject> out;
  if (spec.kind == FamilyKind::kTheta3) {
    for (std::size_t k = 0; k < n; ++k) out.push_back(CombinatorialObject::of_basis(k));
    return out;
  }
  for (auto& s : enumerate_subsets(n)) {
    if (!is_signed_family(spec.kind)) {
      out.push_back(CombinatorialObject::of_subset(std::move(s)));
    } else if (spec.kind != FamilyKind::kElliptope || (!s.empty() && s.front() == 0)) {
      out.push_back(CombinatorialObject::of_signs(std::move(s)));
    }
  }
  return out;
}

bool predicted_vertex(const FamilySpec& spec, const CombinatorialObject& obj) {
  if (spec.kind != FamilyKind::kTheta3) return predicted_feasible(spec, obj);
  EdgeSet h = spec.split.eplus;
  h.insert(spec.split.eminus.begin(), spec.split.eminus.end());
  const auto degrees = degree_profile(Graph(spec.graph.vertices(), std::move(h)));
  return degrees.at(obj.basis) + 1 == spec.graph.order();
}

VertexCatalog enumerate_vertices(const FamilySpec& spec) {
  check_gate(spec.graph);
  const Spectrahedron c = build(spec);
  VertexCatalog catalog;
  catalog.family = spec;
  std::set<CombinatorialObject> found;
  for (const auto& obj : candidate_objects(spec)) {
    if (predicted_vertex(spec, obj)) catalog.theorem_prediction.push_back(obj);
    const Vec v = rank_one_vector(spec, obj);
    SymMat x = dyad(v, c.labels);
    if (!is_feasible(c, x)) continue;
    const bool rank_one = rank_one_vertex_test(c, v);
    NormalConeReport report = is_vertex(c, x);
    if (rank_one != report.is_vertex) {
      throw std::logic_error("rank-one vertex test and normal-cone report disagree at " +
                             obj.to_string(spec.graph));
    }
    if (report.is_vertex) {
      found.insert(obj);
      catalog.vertices.push_back({obj, std::move(x), std::move(report)});
    }
  }
  const std::set<CombinatorialObject> predicted(catalog.theorem_prediction.begin(),
                                                catalog.theorem_prediction.end());
  catalog.match = found == predicted;
  return catalog;
}

std::vector<NegativeWitness> negative_witnesses(const FamilySpec& spec) {
  return negative_witnesses(enumerate_vertices(spec));
}

std::vector<NegativeWitness> negative_witnesses(const VertexCatalog& catalog) {
  const FamilySpec& spec = catalog.family;
  const Spectrahedron c = build(spec);
  std::vector<NegativeWitness> out;
  auto judge = [&c, &out](std::string description, SymMat x) {
    NegativeWitness w{std::move(description), std::move(x), {}, false};
    if (is_feasible(c, w.matrix)) {
      w.report = is_vertex(c, w.matrix);
      w.rejected = !w.report.is_vertex && w.report.nullity + 2 <= c.order();
    }
    out.push_back(std::move(w));
  };
  const auto& v = catalog.vertices;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      judge("midpoint " + v[a].object.to_string(spec.graph) + " " + v[b].object.to_string(spec.graph),
            midpoint(v[a].matrix, v[b].matrix));
    }
  }
  // A body of order one is a single point, which is its own vertex.
  if (c.slater && c.order() > 1) judge("slater", *c.slater);
  return out;
}

std::vector<Graph> suite_graphs(std::size_t n, std::size_t sample, std::uint64_t seed) {
  if (n <= 4) return all_labeled_graphs(n);
  const std::size_t pairs = n * (n - 1) / 2;
  if (pairs >= 63) throw InvalidArgument("order too large for edge-mask sampling");
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * n));
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  while (out.size() < sample && seen.size() < total) {
    const std::uint64_t mask = rng() & (total - 1);
    if (seen.insert(mask).second) out.push_back(graph_from_mask(n, mask));
  }
  return out;
}

SuiteReport verify_suite(const SuiteOptions& options) {
  const std::vector<FamilyKind>& kinds = options.families.empty() ? all_families() : options.families;
  std::vector<std::pair<FamilySpec, std::string>> jobs;
  for (std::size_t n = 1; n <= options.n_max; ++n) {
    const std::vector<Graph> graphs = suite_graphs(n, options.sample, options.seed);
    for (FamilyKind kind : kinds) {
      const std::string name(family_name(kind));
      if (graph_free(kind)) {
        jobs.emplace_back(make_family(kind, Graph::empty(n)), name);
        continue;
      }
      for (const Graph& g : graphs) {
        if (!has_split(kind)) {
          jobs.emplace_back(make_family(kind, g), name);
          continue;
        }
        for (auto& [tag, split] : suite_splits(g)) {
          jobs.emplace_back(make_family(kind, g, split), name + "(" + tag + ")");
        }
      }
    }
  }
  SuiteReport report;
  report.cells.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      report.cells[i] = run_cell(jobs[i].first, jobs[i].second);
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& cell : report.cells) {
    if (!cell.error.empty() || !cell.match || !cell.negatives_rejected) ++report.failures;
  }
  return report;
}

}  // namespace spectravert
