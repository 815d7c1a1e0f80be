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

#include "spectravert/json_io.h"

#include <string>

namespace spectravert {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

Json constraints_to_json(const std::vector<LinearConstraint>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back({{"A", to_json(row.matrix)}, {"rhs", to_json(row.rhs)}});
  return out;
}

std::vector<LinearConstraint> constraints_from_json(const Json& j, const Labels& labels) {
  if (!j.is_array()) throw InvalidArgument("constraint list must be an array");
  std::vector<LinearConstraint> out;
  for (const auto& row : j) out.push_back({sym_from_json(field(row, "A"), labels), rat_from_json(field(row, "rhs"))});
  return out;
}

Json indices(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i);
  return out;
}

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const SymMat& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Spectrahedron& c) {
  Json out;
  out["labels"] = c.labels.names();
  out["eq"] = constraints_to_json(c.eq);
  out["ineq"] = constraints_to_json(c.ineq);
  out["slater"] = c.slater ? to_json(*c.slater) : Json(nullptr);
  out["family"] = c.family;
  return out;
}

Json to_json(const NormalConeReport& r) {
  return {{"ambient_dim", r.ambient_dim}, {"active", indices(r.active)}, {"nullity", r.nullity},
          {"dim_direct", r.dim_direct},   {"dim_formula", r.dim_formula}, {"is_vertex", r.is_vertex}};
}

Json to_json(const StrictComplCertificate& cert) {
  return {{"X", to_json(cert.x)},   {"S", to_json(cert.s)},   {"y", to_json(cert.y)},
          {"rank_X", cert.rank_x}, {"rank_S", cert.rank_s}, {"verified", cert.verified}};
}

Json to_json(const SearchTrace& trace) {
  Json out;
  out["iterations"] = trace.iterations;
  out["min_eig_lower_bound"] = trace.min_eig_lower_bound ? to_json(*trace.min_eig_lower_bound) : Json(nullptr);
  out["approximate"] = {{"min_eig", trace.approx_min_eig}};
  return out;
}

Json to_json(const RelintVerdict& verdict) {
  Json out;
  out["status"] = verdict.certified() ? "CertifiedYes" : "NoCertificateFound";
  if (verdict.certificate) out["certificate"] = to_json(*verdict.certificate);
  out["search_trace"] = to_json(verdict.trace);
  return out;
}

Json to_json(const PolarVerdict& verdict) {
  Json out;
  out["status"] = verdict.certified() ? "CertifiedMember" : "NoCertificateFound";
  if (verdict.y) out["y"] = to_json(*verdict.y);
  if (verdict.slack) out["slack"] = to_json(*verdict.slack);
  out["search_trace"] = to_json(verdict.trace);
  return out;
}

Json to_json(const VertexCatalog& catalog) {
  const Graph& g = catalog.family.graph;
  Json out;
  out["family"] = family_name(catalog.family.kind);
  out["instance"] = catalog.family.describe();
  Json vertices = Json::array();
  for (const auto& v : catalog.vertices) {
    vertices.push_back({{"object", v.object.to_string(g)}, {"X", to_json(v.matrix)}, {"report", to_json(v.report)}});
  }
  out["vertices"] = std::move(vertices);
  Json predicted = Json::array();
  for (const auto& obj : catalog.theorem_prediction) predicted.push_back(obj.to_string(g));
  out["theorem_prediction"] = std::move(predicted);
  out["match"] = catalog.match;
  return out;
}

Json to_json(const NegativeWitness& witness) {
  return {{"description", witness.description},
          {"X", to_json(witness.matrix)},
          {"report", to_json(witness.report)},
          {"rejected", witness.rejected}};
}

Json to_json(const SuiteReport& report) {
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    Json cell = {{"graph", c.graph},         {"family", c.family}, {"predicted", c.predicted},
                 {"found", c.found},         {"match", c.match},   {"negatives_rejected", c.negatives_rejected}};
    if (!c.error.empty()) cell["error"] = c.error;
    cells.push_back(std::move(cell));
  }
  Json out;
  out["cells"] = std::move(cells);
  out["summary"] = {{"cells", report.cells.size()}, {"failures", report.failures}};
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InvalidArgument("rational must be a string or an integer");
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("vector must be an array");
  Vec out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

SymMat sym_from_json(const Json& j, const Labels& labels) {
  const std::size_t n = labels.size();
  if (!j.is_array() || j.size() != n) throw InvalidArgument("matrix must have one row per label");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw InvalidArgument("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  if (!(m == m.transpose())) throw InvalidArgument("matrix is not symmetric");
  return SymMat::from_mat(m, labels);
}

Spectrahedron spectrahedron_from_json(const Json& j) {
  Spectrahedron c;
  const Json& names = field(j, "labels");
  if (!names.is_array()) throw InvalidArgument("labels must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& name : names) {
    if (!name.is_string()) throw InvalidArgument("labels must be an array of strings");
    labels.push_back(name.get<std::string>());
  }
  c.labels = Labels(std::move(labels));
  c.eq = constraints_from_json(field(j, "eq"), c.labels);
  if (j.contains("ineq")) c.ineq = constraints_from_json(j.at("ineq"), c.labels);
  if (j.contains("slater") && !j.at("slater").is_null()) c.slater = sym_from_json(j.at("slater"), c.labels);
  if (j.contains("family") && j.at("family").is_string()) c.family = j.at("family").get<std::string>();
  validate(c);
  return c;
}

SymMat point_from_json(const Json& j, const Labels& labels) {
  return sym_from_json(j.is_object() ? field(j, "X") : j, labels);
}

StrictComplCertificate certificate_from_json(const Json& j, const Labels& labels) {
  StrictComplCertificate cert;
  cert.x = sym_from_json(field(j, "X"), labels);
  cert.s = sym_from_json(field(j, "S"), labels);
  cert.y = vec_from_json(field(j, "y"));
  cert.rank_x = field(j, "rank_X").get<std::size_t>();
  cert.rank_s = field(j, "rank_S").get<std::size_t>();
  cert.verified = field(j, "verified").get<bool>();
  return cert;
}

}  // namespace spectravert
