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

#include "spectravert/spectra.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace spectravert {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 13> kFamilyNames = {{
    {FamilyKind::kElliptope, "elliptope"},
    {FamilyKind::kElliptopePrime, "elliptope-p"},
    {FamilyKind::kElliptopeDoublePrime, "elliptope-pp"},
    {FamilyKind::kBq, "bq"},
    {FamilyKind::kBqPrime, "bq-p"},
    {FamilyKind::kBqDoublePrime, "bq-pp"},
    {FamilyKind::kLiftedTh, "lifted-th"},
    {FamilyKind::kLiftedThPrime, "lifted-th-p"},
    {FamilyKind::kLiftedThPlus, "lifted-th-plus"},
    {FamilyKind::kLiftedThGeneral, "lifted-th-general"},
    {FamilyKind::kKgVc, "kg-vc"},
    {FamilyKind::kKgVcPrime, "kg-vc-p"},
    {FamilyKind::kTheta3, "theta3"},
}};

bool is_elliptope(FamilyKind k) {
  return k == FamilyKind::kElliptope || k == FamilyKind::kElliptopePrime ||
         k == FamilyKind::kElliptopeDoublePrime;
}

bool is_bq(FamilyKind k) {
  return k == FamilyKind::kBq || k == FamilyKind::kBqPrime || k == FamilyKind::kBqDoublePrime;
}

bool is_kg(FamilyKind k) { return k == FamilyKind::kKgVc || k == FamilyKind::kKgVcPrime; }

Labels lifted_labels(const Labels& v) {
  if (v.index_of(kRootLabel)) {
    throw InvalidArgument("vertex label '0' is reserved for the lifted root");
  }
  return v.prepend(std::string(kRootLabel));
}

Labels family_labels(const FamilySpec& spec) {
  if (spec.graph.order() == 0) throw InvalidArgument("family needs a nonempty vertex set");
  return spec.lifted() ? lifted_labels(spec.graph.vertices()) : spec.graph.vertices();
}

// Sym(u v^T) on labels, with u, v given as sparse index/coefficient lists.
SymMat sym_outer_sparse(const Labels& labels, std::initializer_list<std::pair<std::size_t, int>> u,
                        std::initializer_list<std::pair<std::size_t, int>> v) {
  Vec uu(labels.size()), vv(labels.size());
  for (const auto& [i, c] : u) uu[i] += c;
  for (const auto& [i, c] : v) vv[i] += c;
  return sym_outer(uu, vv, labels);
}

SymMat entry(const Labels& labels, std::size_t i, std::size_t j) {
  return sym_outer_sparse(labels, {{i, 1}}, {{j, 1}});
}

// Adds the rows for A_{E+}(X[V]) >= 0 and A_{E-}(X[V]) <= 0; vertex i of
// the graph sits at matrix index i + offset.
void add_edge_rows(Spectrahedron& c, const EdgeSplit& split, std::size_t n, std::size_t offset) {
  for (const auto& pair : all_pairs(n)) {
    const bool plus = split.eplus.count(pair) > 0;
    const bool minus = split.eminus.count(pair) > 0;
    if (!plus && !minus) continue;
    SymMat m = entry(c.labels, pair.first + offset, pair.second + offset);
    if (plus && minus) {
      c.eq.push_back({std::move(m), 0});
    } else if (plus) {
      c.ineq.push_back({Rat(-1) * m, 0});
    } else {
      c.ineq.push_back({std::move(m), 0});
    }
  }
}

Spectrahedron elliptope_body(const Labels& labels) {
  Spectrahedron c;
  c.labels = labels;
  for (std::size_t i = 0; i < labels.size(); ++i) c.eq.push_back({entry(labels, i, i), 1});
  c.slater = SymMat::identity(labels);
  return c;
}

// 1 on the root, alpha on the root row and the V diagonal, zero elsewhere;
// positive definite by the Schur complement alpha (1 - alpha |V|) > 0.
SymMat lifted_witness(const Labels& labels) {
  const std::size_t nv = labels.size() - 1;
  const Rat alpha(1, 2 * nv);
  SymMat w(labels);
  w.set(0, 0, 1);
  for (std::size_t i = 1; i <= nv; ++i) {
    w.set(0, i, alpha);
    w.set(i, i, alpha);
  }
  return w;
}

// The lifted body with N^(X) = 1 (+) 0 and the E+/E- rows.
Spectrahedron lifted_general(const Labels& v, const EdgeSplit& split) {
  Spectrahedron c;
  c.labels = lifted_labels(v);
  const std::size_t nv = v.size();
  c.eq.push_back({entry(c.labels, 0, 0), 1});
  for (std::size_t i = 1; i <= nv; ++i) {
    c.eq.push_back({sym_outer_sparse(c.labels, {{i, 1}}, {{i, 1}, {0, -1}}), 0});
  }
  add_edge_rows(c, split, nv, 1);
  c.slater = lifted_witness(c.labels);
  return c;
}

// Rows <Sym((e0 + sign e_i)(e0 + sign e_j)^T), X> >= 0 over all pairs of V.
void add_pair_rows(Spectrahedron& c, int sign) {
  const std::size_t nv = c.labels.size() - 1;
  for (const auto& [i, j] : all_pairs(nv)) {
    SymMat m = sym_outer_sparse(c.labels, {{0, 1}, {i + 1, sign}}, {{0, 1}, {j + 1, sign}});
    c.ineq.push_back({Rat(-1) * m, 0});
  }
}

Mat vertex_cover_transform(const Labels& v) {
  const auto flip = transform_matrix(TransformName::kFlip, v);
  const auto sigma = transform_matrix(TransformName::kSignToIncid, v);
  auto sigma_inv = inverse(sigma.l);
  if (!sigma_inv) throw std::logic_error("sign-to-incidence transform is singular");
  return *sigma_inv * flip.l;
}

std::string transform_tag(TransformName name) {
  switch (name) {
    case TransformName::kFlip:
      return "flip";
    case TransformName::kSignToIncid:
      return "sign-to-incid";
    case TransformName::kCustom:
      break;
  }
  return "custom";
}

void check_subset(const VertexSubset& s, std::size_t n) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] >= n) throw InvalidArgument("vertex index out of range");
    if (k > 0 && s[k] <= s[k - 1]) throw InvalidArgument("vertex subset must be sorted and distinct");
  }
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& [k, name] : kFamilyNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  std::string kebab(name);
  std::replace(kebab.begin(), kebab.end(), '_', '-');
  if (kebab == "elliptope-prime") kebab = "elliptope-p";
  if (kebab == "elliptope-dprime") kebab = "elliptope-pp";
  if (kebab == "bq-prime") kebab = "bq-p";
  if (kebab == "bq-dprime") kebab = "bq-pp";
  if (kebab == "lifted-th-prime") kebab = "lifted-th-p";
  if (kebab == "kg-vc-prime") kebab = "kg-vc-p";
  for (const auto& [k, n] : kFamilyNames) {
    if (n == kebab) return k;
  }
  return std::nullopt;
}

const std::vector<FamilyKind>& all_families() {
  static const std::vector<FamilyKind> kAll = [] {
    std::vector<FamilyKind> out;
    for (const auto& [k, n] : kFamilyNames) out.push_back(k);
    return out;
  }();
  return kAll;
}

bool FamilySpec::lifted() const { return kind != FamilyKind::kElliptope && kind != FamilyKind::kTheta3; }

std::string FamilySpec::describe() const {
  std::string out(family_name(kind));
  out += "[" + graph.to_string() + "]";
  if (kind == FamilyKind::kLiftedThGeneral || kind == FamilyKind::kTheta3) {
    auto edges = [this](const EdgeSet& e) {
      std::string s;
      for (const auto& [i, j] : e) {
        s += (s.empty() ? "" : ",") + graph.vertices()[i] + "-" + graph.vertices()[j];
      }
      return s;
    };
    out += "{+:" + edges(split.eplus) + ";-:" + edges(split.eminus) + "}";
  }
  return out;
}

FamilySpec make_family(FamilyKind kind, Graph graph) {
  FamilySpec spec{kind, std::move(graph), {}};
  // Without an explicit split the generalized families read the graph as
  // E+ = E- = E.
  if (kind == FamilyKind::kLiftedThGeneral || kind == FamilyKind::kTheta3) {
    spec.split = {spec.graph.edges(), spec.graph.edges()};
  }
  return spec;
}

FamilySpec make_family(FamilyKind kind, Graph graph, EdgeSplit split) {
  const std::size_t n = graph.order();
  for (const EdgeSet* e : {&split.eplus, &split.eminus}) {
    for (const auto& [i, j] : *e) {
      if (i >= j || j >= n) throw InvalidArgument("edge split outside binom(V, 2)");
    }
  }
  return FamilySpec{kind, std::move(graph), std::move(split)};
}

void validate(const Spectrahedron& c) {
  auto check = [&c](const std::vector<LinearConstraint>& rows, const char* what) {
    for (const auto& row : rows) {
      if (!(row.matrix.labels() == c.labels)) {
        throw InvalidArgument(std::string(what) + " constraint matrix has a different label set");
      }
    }
  };
  check(c.eq, "equality");
  check(c.ineq, "inequality");
  if (c.slater) {
    if (!(c.slater->labels() == c.labels)) throw InvalidArgument("Slater witness label mismatch");
    if (!is_pd(*c.slater)) throw InvalidArgument("Slater witness is not positive definite");
    if (!is_feasible(c, *c.slater)) throw InvalidArgument("Slater witness is infeasible");
  }
}

Spectrahedron build(const FamilySpec& spec) {
  const Labels labels = family_labels(spec);
  const Labels& v = spec.graph.vertices();
  const std::size_t nv = v.size();
  const EdgeSet& e = spec.graph.edges();
  Spectrahedron c;
  switch (spec.kind) {
    case FamilyKind::kElliptope:
      c = elliptope_body(labels);
      break;
    case FamilyKind::kElliptopePrime:
      c = elliptope_body(labels);
      add_pair_rows(c, +1);
      break;
    case FamilyKind::kElliptopeDoublePrime:
      c = elliptope_body(labels);
      add_pair_rows(c, -1);
      break;
    case FamilyKind::kBq:
      c = lifted_general(v, {});
      break;
    case FamilyKind::kBqPrime:
      c = lifted_general(v, {all_pairs(nv), {}});
      break;
    case FamilyKind::kBqDoublePrime:
      c = lifted_general(v, {});
      add_pair_rows(c, -1);
      break;
    case FamilyKind::kLiftedTh:
      c = lifted_general(v, {e, e});
      break;
    case FamilyKind::kLiftedThPrime:
      c = lifted_general(v, {all_pairs(nv), e});
      break;
    case FamilyKind::kLiftedThPlus:
      c = lifted_general(v, {{}, e});
      break;
    case FamilyKind::kLiftedThGeneral:
      c = lifted_general(v, spec.split);
      break;
    case FamilyKind::kKgVc:
    case FamilyKind::kKgVcPrime: {
      const FamilyKind base =
          spec.kind == FamilyKind::kKgVc ? FamilyKind::kLiftedTh : FamilyKind::kLiftedThPrime;
      c = pushforward(build(make_family(base, spec.graph)),
                      custom_transform(vertex_cover_transform(v), labels));
      break;
    }
    case FamilyKind::kTheta3: {
      c.labels = labels;
      c.eq.push_back({SymMat::identity(labels), 1});
      add_edge_rows(c, spec.split, nv, 0);
      c.slater = Rat(1, nv) * SymMat::identity(labels);
      break;
    }
  }
  c.family = std::string(family_name(spec.kind));
  return c;
}

bool is_feasible(const Spectrahedron& c, const SymMat& x) {
  if (!(x.labels() == c.labels)) throw InvalidArgument("point and spectrahedron label sets differ");
  for (const auto& row : c.eq) {
    if (frobenius(row.matrix, x) != row.rhs) return false;
  }
  for (const auto& row : c.ineq) {
    if (frobenius(row.matrix, x) > row.rhs) return false;
  }
  return is_psd(x);
}

CombinatorialObject CombinatorialObject::parse_signs(std::string_view signs) {
  VertexSubset plus;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == '+') {
      plus.push_back(i);
    } else if (signs[i] != '-') {
      throw InvalidArgument("sign vector may only contain '+' and '-'");
    }
  }
  return of_signs(std::move(plus));
}

std::string CombinatorialObject::to_string(const Graph& g) const {
  switch (kind) {
    case Kind::kSubset:
      return subset_to_string(g, subset);
    case Kind::kSigns: {
      std::string s(g.order(), '-');
      for (std::size_t i : subset) s.at(i) = '+';
      return s;
    }
    case Kind::kBasis:
      return "e" + g.vertices()[basis];
  }
  return {};
}

Vec rank_one_vector(const FamilySpec& spec, const CombinatorialObject& obj) {
  const std::size_t nv = spec.graph.order();
  if (nv == 0) throw InvalidArgument("family needs a nonempty vertex set");
  using Kind = CombinatorialObject::Kind;
  const FamilyKind k = spec.kind;
  const Kind want = is_elliptope(k) ? Kind::kSigns : k == FamilyKind::kTheta3 ? Kind::kBasis : Kind::kSubset;
  if (obj.kind != want) throw InvalidArgument("wrong kind of combinatorial object for this family");
  if (want == Kind::kBasis) {
    if (obj.basis >= nv) throw InvalidArgument("basis index out of range");
    return unit_vector(nv, obj.basis);
  }
  check_subset(obj.subset, nv);
  const std::size_t off = spec.lifted() ? 1 : 0;
  Vec x(nv + off);
  if (off) x[0] = 1;
  const bool signs = want == Kind::kSigns || is_kg(k);
  if (signs) {
    for (std::size_t i = 0; i < nv; ++i) x[i + off] = -1;
  }
  for (std::size_t i : obj.subset) x[i + off] = 1;
  return x;
}

bool predicted_feasible(const FamilySpec& spec, const CombinatorialObject& obj) {
  const FamilyKind k = spec.kind;
  if (is_elliptope(k) || is_bq(k) || k == FamilyKind::kTheta3) return true;
  if (is_kg(k)) return is_vertex_cover(spec.graph, obj.subset);
  if (k == FamilyKind::kLiftedThGeneral) {
    return is_stable(Graph(spec.graph.vertices(), spec.split.eminus), obj.subset);
  }
  return is_stable(spec.graph, obj.subset);
}

SymMat rank_one_point(const FamilySpec& spec, const CombinatorialObject& obj) {
  SymMat x = dyad(rank_one_vector(spec, obj), family_labels(spec));
  if (predicted_feasible(spec, obj) && !is_feasible(build(spec), x)) {
    throw std::logic_error("predicted-feasible rank-one point " + obj.to_string(spec.graph) +
                           " is infeasible for " + spec.describe());
  }
  return x;
}

CongruenceTransform transform_matrix(TransformName name, const Labels& v) {
  const Labels labels = lifted_labels(v);
  const std::size_t n = labels.size();
  Mat l(n, n);
  switch (name) {
    case TransformName::kFlip:
      l(0, 0) = 1;
      for (std::size_t i = 1; i < n; ++i) {
        l(i, 0) = 1;
        l(i, i) = -1;
      }
      break;
    case TransformName::kSignToIncid:
      l(0, 0) = 1;
      for (std::size_t i = 1; i < n; ++i) {
        l(i, 0) = Rat(1, 2);
        l(i, i) = Rat(1, 2);
      }
      break;
    case TransformName::kCustom:
      throw InvalidArgument("custom transforms are built with custom_transform()");
  }
  return {std::move(l), name, labels};
}

CongruenceTransform custom_transform(Mat l, Labels labels) {
  if (!l.is_square() || l.rows() != labels.size()) {
    throw InvalidArgument("transform is not conformal with its labels");
  }
  if (rank(l) != l.rows()) throw InvalidArgument("transform is singular");
  return {std::move(l), TransformName::kCustom, std::move(labels)};
}

Spectrahedron pushforward(const Spectrahedron& c, const CongruenceTransform& t) {
  if (t.l.rows() != c.order() || !t.l.is_square()) {
    throw InvalidArgument("transform is not conformal with the spectrahedron");
  }
  const auto inv = inverse(t.l);
  if (!inv) throw InvalidArgument("transform is singular");
  const Mat inv_t = inv->transpose();
  auto map_row = [&](const LinearConstraint& row) {
    return LinearConstraint{SymMat::from_mat(inv_t * row.matrix.to_mat() * *inv, c.labels), row.rhs};
  };
  Spectrahedron out;
  out.labels = c.labels;
  for (const auto& row : c.eq) out.eq.push_back(map_row(row));
  for (const auto& row : c.ineq) out.ineq.push_back(map_row(row));
  if (c.slater) out.slater = congruence(t.l, *c.slater);
  out.family = c.family.empty() ? "" : c.family + "@" + transform_tag(t.name);
  return out;
}

SymMat laplacian(const Graph& g, const std::map<Edge, Rat>& weights) {
  for (const auto& [edge, w] : weights) {
    if (!g.edges().count(edge)) throw InvalidArgument("weight given for a non-edge");
    if (sgn(w) < 0) throw InvalidArgument("negative edge weight");
  }
  SymMat l(g.vertices());
  for (const auto& edge : g.edges()) {
    const auto it = weights.find(edge);
    const Rat w = it == weights.end() ? Rat(1) : it->second;
    l.add(edge.first, edge.first, w);
    l.add(edge.second, edge.second, w);
    l.add(edge.first, edge.second, -w);
  }
  if (!is_psd(l)) throw std::logic_error("Laplacian failed the PSD check");
  return l;
}

Spectrahedron lift_with_free_root(const Spectrahedron& c) {
  Spectrahedron out;
  out.labels = lifted_labels(c.labels);
  auto pad = [&out](const SymMat& m) {
    SymMat p(out.labels);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i; j < m.size(); ++j) p.set(i + 1, j + 1, m(i, j));
    }
    return p;
  };
  for (const auto& row : c.eq) out.eq.push_back({pad(row.matrix), row.rhs});
  for (const auto& row : c.ineq) out.ineq.push_back({pad(row.matrix), row.rhs});
  if (c.slater) {
    SymMat w = pad(*c.slater);
    w.set(0, 0, 1);
    out.slater = std::move(w);
  }
  out.family = c.family.empty() ? "lifted" : c.family + "+root";
  return out;
}

SymMat adjoint_eq(const Spectrahedron& c, const Vec& y) {
  if (y.size() != c.eq.size()) throw InvalidArgument("multiplier length mismatch");
  SymMat s(c.labels);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) != 0) s = s + y[i] * c.eq[i].matrix;
  }
  return s;
}

}  // namespace spectravert
