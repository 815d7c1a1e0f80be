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

// Spectrahedra in affine-slice form
//
//   C = { X in S_+^n : <A_i, X> = a_i,  <B_j, X> <= b_j },
//
// together with a stored strictly positive definite feasible point (the
// restricted Slater witness the normal-cone formulas need), constructors
// for the graph-indexed families, and the congruence transforms that relate
// them.

#ifndef SPECTRAVERT_SPECTRA_H_
#define SPECTRAVERT_SPECTRA_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectravert/exactla.h"
#include "spectravert/graphs.h"

namespace spectravert {

// The distinguished root label adjoined by the lifted families.
inline constexpr std::string_view kRootLabel = "0";

struct LinearConstraint {
  SymMat matrix;
  Rat rhs;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct Spectrahedron {
  Labels labels;
  std::vector<LinearConstraint> eq;
  std::vector<LinearConstraint> ineq;  // all of sense <=
  std::optional<SymMat> slater;
  std::string family;

  std::size_t order() const { return labels.size(); }
  bool equality_only() const { return ineq.empty(); }

  friend bool operator==(const Spectrahedron&, const Spectrahedron&) = default;
};

// Throws InvalidArgument unless every constraint matrix lives on `labels`
// and the Slater witness, when present, is positive definite and feasible.
void validate(const Spectrahedron& c);

enum class FamilyKind {
  kElliptope,
  kElliptopePrime,
  kElliptopeDoublePrime,
  kBq,
  kBqPrime,
  kBqDoublePrime,
  kLiftedTh,
  kLiftedThPrime,
  kLiftedThPlus,
  kLiftedThGeneral,
  kKgVc,
  kKgVcPrime,
  kTheta3,
};

// Kebab-case CLI name ("lifted-th-p", ...).
std::string_view family_name(FamilyKind kind);
// Accepts the kebab-case names and their snake_case spellings.
std::optional<FamilyKind> parse_family(std::string_view name);
const std::vector<FamilyKind>& all_families();

struct FamilySpec {
  FamilyKind kind = FamilyKind::kElliptope;
  // The graph for graph families; only the vertex set matters for the
  // elliptope and boolean quadric families.
  Graph graph;
  // Used by kLiftedThGeneral and kTheta3 only.
  EdgeSplit split;

  // Families whose matrices are indexed by {0} u V.
  bool lifted() const;
  std::string describe() const;
};

FamilySpec make_family(FamilyKind kind, Graph graph);
FamilySpec make_family(FamilyKind kind, Graph graph, EdgeSplit split);

// Spectrahedron exactly as the family's defining display, with >= rows
// stored negated. Throws InvalidArgument on an empty vertex set or a vertex
// named "0" in a lifted family.
Spectrahedron build(const FamilySpec& spec);

// Exact membership test. Throws on label mismatch.
bool is_feasible(const Spectrahedron& c, const SymMat& x);

// Combinatorial objects indexing the rank-one candidates of a family.
struct CombinatorialObject {
  enum class Kind { kSubset, kSigns, kBasis };

  Kind kind = Kind::kSubset;
  // kSubset: the vertex set. kSigns: the vertices carrying sign +1.
  VertexSubset subset;
  // kBasis: vertex index k of e_k.
  std::size_t basis = 0;

  static CombinatorialObject of_subset(VertexSubset s) { return {Kind::kSubset, std::move(s), 0}; }
  static CombinatorialObject of_signs(VertexSubset plus) { return {Kind::kSigns, std::move(plus), 0}; }
  static CombinatorialObject of_basis(std::size_t k) { return {Kind::kBasis, {}, k}; }
  // Parses "+-+" into a sign object over n vertices.
  static CombinatorialObject parse_signs(std::string_view signs);

  // "{1,3}", "+-+", or "e2".
  std::string to_string(const Graph& g) const;

  friend bool operator==(const CombinatorialObject&, const CombinatorialObject&) = default;
  friend auto operator<=>(const CombinatorialObject&, const CombinatorialObject&) = default;
};

// The vector v whose dyad v v^T is the family's candidate point for `obj`:
// x for elliptopes, 1 (+) x for the lifted elliptopes, 1 (+) chi_S for the
// boolean quadric and theta bodies, 1 (+) (chi_S - chi_{V\S}) for the
// vertex cover bodies, e_k for theta3.
Vec rank_one_vector(const FamilySpec& spec, const CombinatorialObject& obj);
// v v^T. When the combinatorics predicts feasibility (any sign vector, any
// subset for BQ, a stable set, a vertex cover, any basis vector) the
// result is additionally checked to be feasible.
SymMat rank_one_point(const FamilySpec& spec, const CombinatorialObject& obj);
// Whether the family's combinatorics predicts the candidate to be feasible.
bool predicted_feasible(const FamilySpec& spec, const CombinatorialObject& obj);

enum class TransformName { kFlip, kSignToIncid, kCustom };

struct CongruenceTransform {
  Mat l;
  TransformName name = TransformName::kCustom;
  Labels labels;
};

// Flip: e0 e0^T + sum_i e_i (e0 - e_i)^T, its own inverse, maps 1 (+) chi_S
// to 1 (+) chi_{V\S}. Sign-to-incidence: (1/2) sum_{i in 0uV} e_i (e0 + e_i)^T,
// maps 1 (+) (chi_S - chi_{V\S}) to 1 (+) chi_S. Both are indexed by
// {0} u V. Throws if V contains "0".
CongruenceTransform transform_matrix(TransformName name, const Labels& v);
// Wraps an arbitrary nonsingular matrix on `labels`.
CongruenceTransform custom_transform(Mat l, Labels labels);

// Image of C under X -> L X L^T: constraint matrices map to
// L^{-T} A L^{-1}, right-hand sides are unchanged, the Slater witness maps
// forward. Throws on a singular or non-conformal transform.
Spectrahedron pushforward(const Spectrahedron& c, const CongruenceTransform& t);

// Weighted Laplacian sum_{ij in E} w_ij (e_i - e_j)(e_i - e_j)^T. Missing
// weights default to 1; negative weights and weights on non-edges throw.
SymMat laplacian(const Graph& g, const std::map<Edge, Rat>& weights = {});

// { X^ in S_+^{0 u V} : X^[V] in C } with Slater witness 1 (+) slater(C).
Spectrahedron lift_with_free_root(const Spectrahedron& c);

// The adjoint image sum_i y_i A_i of the equality map.
SymMat adjoint_eq(const Spectrahedron& c, const Vec& y);

}  // namespace spectravert

#endif  // SPECTRAVERT_SPECTRA_H_
