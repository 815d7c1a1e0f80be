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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "spectravert/json_io.h"
#include "spectravert/normalcone.h"
#include "spectravert/spectra.h"
#include "spectravert/strictcompl.h"
#include "spectravert/vertices.h"

namespace spectravert::cli {

namespace {

// Exit-code carrying failure: the JSON verdict was printed, but it is a
// negative one.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceOptions {
  std::string family;
  std::string graph_file;
  std::size_t n = 0;
  std::string split = "eq";
  std::ostream* warnings = nullptr;
};

struct Options {
  InstanceOptions instance;
  std::string set;
  std::string signs;
  std::string basis;
  bool negatives = false;
  std::string spec_file;
  std::string point_file;
  std::string objective = "maxcut";
  std::size_t nmax = 5;
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  std::size_t sample = 50;
  std::uint64_t seed = 1;
  std::vector<std::string> families;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

FamilyKind family_of(const std::string& name) {
  if (name.empty()) throw InvalidArgument("--family is required");
  const auto kind = parse_family(name);
  if (!kind) throw InvalidArgument("unknown family '" + name + "'");
  return *kind;
}

FamilySpec instance_of(const InstanceOptions& o) {
  const FamilyKind kind = family_of(o.family);
  if (o.graph_file.empty() == (o.n == 0)) throw InvalidArgument("give exactly one of --graph and --n");
  std::vector<std::string> warnings;
  const Graph g = o.graph_file.empty()
                      ? Graph::empty(o.n)
                      : parse_graph(read_file(o.graph_file), format_for_path(o.graph_file), &warnings);
  if (o.warnings) {
    for (const auto& w : warnings) *o.warnings << Json{{"warning", w}}.dump() << '\n';
  }
  if (kind != FamilyKind::kTheta3 && kind != FamilyKind::kLiftedThGeneral) {
    if (o.split != "eq") throw InvalidArgument("--split applies to theta3 and lifted-th-general only");
    return make_family(kind, g);
  }
  const EdgeSet& e = g.edges();
  EdgeSplit split;
  if (o.split == "eq") {
    split = {e, e};
  } else if (o.split == "minus") {
    split = {{}, e};
  } else if (o.split == "plus") {
    split = {e, {}};
  } else if (o.split == "comp") {
    split = {complement_edges(e, g.order()), e};
  } else {
    throw InvalidArgument("--split must be one of eq, minus, plus, comp");
  }
  return make_family(kind, g, std::move(split));
}

std::size_t vertex_index(const Graph& g, const std::string& label) {
  const auto i = g.vertices().index_of(label);
  if (!i) throw InvalidArgument("unknown vertex '" + label + "'");
  return *i;
}

CombinatorialObject object_of(const FamilySpec& spec, const Options& o) {
  const int given = !o.set.empty() + !o.signs.empty() + !o.basis.empty();
  if (given > 1) throw InvalidArgument("give only one of --set, --signs and --basis");
  const Graph& g = spec.graph;
  if (!o.signs.empty()) {
    if (o.signs.size() != g.order()) throw InvalidArgument("--signs needs one sign per vertex");
    return CombinatorialObject::parse_signs(o.signs);
  }
  if (!o.basis.empty()) return CombinatorialObject::of_basis(vertex_index(g, o.basis));
  VertexSubset s;
  std::stringstream in(o.set);
  for (std::string label; std::getline(in, label, ',');) {
    label.erase(0, label.find_first_not_of(" \t"));
    label.erase(label.find_last_not_of(" \t") + 1);
    if (!label.empty()) s.push_back(vertex_index(g, label));
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidArgument("--set repeats a vertex");
  return CombinatorialObject::of_subset(std::move(s));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_families(std::ostream& out) {
  Json list = Json::array();
  for (FamilyKind kind : all_families()) {
    const FamilySpec spec = make_family(kind, Graph::empty(1));
    const char* object = kind == FamilyKind::kTheta3 ? "basis"
                         : kind == FamilyKind::kElliptope || kind == FamilyKind::kElliptopePrime ||
                                 kind == FamilyKind::kElliptopeDoublePrime
                             ? "signs"
                             : "set";
    list.push_back({{"name", family_name(kind)}, {"lifted", spec.lifted()}, {"object", object}});
  }
  emit(out, list);
  return kExitOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  emit(out, to_json(build(instance_of(o.instance))));
  return kExitOk;
}

int cmd_vertices(const Options& o, std::ostream& out) {
  const VertexCatalog catalog = enumerate_vertices(instance_of(o.instance));
  Json j = to_json(catalog);
  bool ok = catalog.match;
  if (o.negatives) {
    Json list = Json::array();
    for (const auto& w : negative_witnesses(catalog)) {
      ok = ok && w.rejected;
      list.push_back(to_json(w));
    }
    j["negative_witnesses"] = std::move(list);
  }
  emit(out, j);
  if (!ok) throw VerificationFailure("vertex catalog does not match the prediction");
  return kExitOk;
}

int cmd_check_vertex(const Options& o, std::ostream& out) {
  const FamilySpec spec = instance_of(o.instance);
  const CombinatorialObject obj = object_of(spec, o);
  const Spectrahedron c = build(spec);
  const Vec v = rank_one_vector(spec, obj);
  const SymMat x = dyad(v, c.labels);
  if (!is_feasible(c, x)) throw InvalidArgument(obj.to_string(spec.graph) + " gives an infeasible point");
  Json j;
  j["object"] = obj.to_string(spec.graph);
  const Json report = to_json(is_vertex(c, x));
  for (const auto& [key, value] : report.items()) j[key] = value;
  j["rank_one_vertex_test"] = rank_one_vertex_test(c, v);
  emit(out, j);
  return kExitOk;
}

int cmd_ncone_dim(const Options& o, std::ostream& out) {
  if (o.spec_file.empty() || o.point_file.empty()) throw InvalidArgument("--spec and --point are required");
  const Spectrahedron c = spectrahedron_from_json(read_json(o.spec_file));
  const SymMat x = point_from_json(read_json(o.point_file), c.labels);
  emit(out, to_json(is_vertex(c, x)));
  return kExitOk;
}

// Objective L_G/4 on V, padded with a zero root row for lifted families.
SymMat objective_of(const FamilySpec& spec, const Spectrahedron& c, const std::string& name) {
  if (name != "maxcut") throw InvalidArgument("--objective supports only 'maxcut'");
  const SymMat l = maxcut_objective(spec.graph);
  if (!spec.lifted()) return SymMat::from_mat(l.to_mat(), c.labels);
  SymMat padded(c.labels);
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i; j < l.size(); ++j) padded.set(i + 1, j + 1, l(i, j));
  }
  return padded;
}

int cmd_strict_compl(const Options& o, std::ostream& out) {
  const FamilySpec spec = instance_of(o.instance);
  const Spectrahedron c = build(spec);
  if (!c.equality_only()) throw InvalidArgument("strict-compl needs an equality-constrained family");
  const SymMat objective = objective_of(spec, c, o.objective);
  SymMat x;
  if (!o.point_file.empty()) {
    x = point_from_json(read_json(o.point_file), c.labels);
  } else {
    // The catalogued vertex with the largest objective value, first wins.
    const VertexCatalog catalog = enumerate_vertices(spec);
    if (catalog.vertices.empty()) throw InvalidArgument("family has no vertex to use; pass --point");
    std::optional<Rat> best;
    for (const auto& v : catalog.vertices) {
      const Rat value = frobenius(objective, v.matrix);
      if (!best || value > *best) {
        best = value;
        x = v.matrix;
      }
    }
  }
  const RelintVerdict verdict = relint_membership(c, x, objective);
  Json j = to_json(verdict);
  j["objective"] = to_json(objective);
  if (!verdict.certificate) j["X"] = to_json(x);
  emit(out, j);
  return kExitOk;
}

int cmd_verify_suite(const Options& o, std::ostream& out) {
  SuiteOptions s;
  s.n_max = o.nmax;
  s.threads = o.threads;
  s.sample = o.sample;
  s.seed = o.seed;
  for (const auto& name : o.families) s.families.push_back(family_of(name));
  const SuiteReport report = verify_suite(s);
  emit(out, to_json(report));
  if (report.failures > 0) throw VerificationFailure(std::to_string(report.failures) + " suite cells failed");
  return kExitOk;
}

void error_json(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

void add_instance_options(CLI::App* cmd, InstanceOptions& o) {
  cmd->add_option("--family", o.family, "Family name (see 'families')")->required();
  cmd->add_option("--graph", o.graph_file, "Graph file: .col/.dimacs for DIMACS, otherwise an edge list");
  cmd->add_option("--n", o.n, "Use the edgeless graph on vertices 1..N");
  cmd->add_option("--split", o.split, "theta3 / lifted-th-general edge split: eq, minus, plus, comp");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact normal cones and vertices of spectrahedra", "spectravert"};
  app.require_subcommand(1);
  Options o;
  o.instance.warnings = &err;

  app.add_subcommand("families", "List the family names");
  auto* build_cmd = app.add_subcommand("build", "Print a family instance as JSON");
  add_instance_options(build_cmd, o.instance);
  auto* vertices_cmd = app.add_subcommand("vertices", "Enumerate vertices and compare with the prediction");
  add_instance_options(vertices_cmd, o.instance);
  vertices_cmd->add_flag("--negatives", o.negatives, "Also report midpoint and Slater witnesses");
  auto* check_cmd = app.add_subcommand("check-vertex", "Normal-cone report at one rank-one candidate");
  add_instance_options(check_cmd, o.instance);
  check_cmd->add_option("--set", o.set, "Comma-separated vertex labels");
  check_cmd->add_option("--signs", o.signs, "Sign string such as +-+");
  check_cmd->add_option("--basis", o.basis, "Vertex label k of e_k (theta3)");
  auto* ncone_cmd = app.add_subcommand("ncone-dim", "Both normal-cone dimension routes at a point");
  ncone_cmd->add_option("--spec", o.spec_file, "Spectrahedron JSON")->required();
  ncone_cmd->add_option("--point", o.point_file, "Point JSON")->required();
  auto* sc_cmd = app.add_subcommand("strict-compl", "Certify strict complementarity for an objective");
  add_instance_options(sc_cmd, o.instance);
  sc_cmd->add_option("--objective", o.objective, "Objective: maxcut");
  sc_cmd->add_option("--point", o.point_file, "Primal point JSON (default: best catalogued vertex)");
  auto* suite_cmd = app.add_subcommand("verify-suite", "Check vertex predictions on all small graphs");
  suite_cmd->add_option("--nmax", o.nmax, "Largest graph order")->check(CLI::Range(1, 8));
  suite_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--sample", o.sample, "Sampled graphs per order above 4");
  suite_cmd->add_option("--seed", o.seed, "Sampling seed");
  suite_cmd->add_option("--family", o.families, "Restrict to these families");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error_json(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    const CLI::App* cmd = app.get_subcommands().front();
    const std::string verb = cmd->get_name();
    if (verb == "families") return cmd_families(out);
    if (verb == "build") return cmd_build(o, out);
    if (verb == "vertices") return cmd_vertices(o, out);
    if (verb == "check-vertex") return cmd_check_vertex(o, out);
    if (verb == "ncone-dim") return cmd_ncone_dim(o, out);
    if (verb == "strict-compl") return cmd_strict_compl(o, out);
    return cmd_verify_suite(o, out);
  } catch (const VerificationFailure& e) {
    error_json(err, "verification", e.what());
    return kExitVerificationFailure;
  } catch (const InvalidArgument& e) {
    error_json(err, "usage", e.what());
    return kExitUsage;
  } catch (const std::logic_error& e) {
    error_json(err, "internal", e.what());
    return kExitVerificationFailure;
  }
}

}  // namespace spectravert::cli
