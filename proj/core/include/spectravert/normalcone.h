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

// Normal cones of spectrahedra at feasible points, computed two ways: as
// the span of an explicit generating set, and as the complement of the
// intersection of three subspaces. Both routes are exact.

#ifndef SPECTRAVERT_NORMALCONE_H_
#define SPECTRAVERT_NORMALCONE_H_

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spectravert/exactla.h"
#include "spectravert/spectra.h"

namespace spectravert {

// The face of S_+^n conjugate to the minimal face containing X, i.e. the
// PSD matrices orthogonal to X, described through a basis of Null(X).
struct ConjugateFace {
  SymMat point;
  SubspaceBasis nullbasis;
  // Sym(b_i b_j^T) over i <= j.
  std::vector<SymMat> span_basis;
  std::size_t dim = 0;
};

// Throws InvalidArgument if X is not PSD.
ConjugateFace conjugate_face(const SymMat& x);

// S PSD, XS = 0 and rank(S) = nullity(X).
bool in_relint_conjugate_face(const SymMat& x, const SymMat& s);

struct NormalConeReport {
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> active;
  std::size_t nullity = 0;
  std::size_t dim_direct = 0;
  std::size_t dim_formula = 0;
  bool is_vertex = false;
  friend bool operator==(const NormalConeReport&, const NormalConeReport&) = default;
};

// Indices i with <B_i, X> = b_i.
std::vector<std::size_t> active_inequalities(const Spectrahedron& c, const SymMat& x);

// The normal-cone functions below throw InvalidArgument when X is
// infeasible or C carries no Slater witness.
std::size_t normal_cone_dim_direct(const Spectrahedron& c, const SymMat& x);
std::size_t normal_cone_dim_formula(const Spectrahedron& c, const SymMat& x);

// Both routes; throws std::logic_error if they disagree.
NormalConeReport is_vertex(const Spectrahedron& c, const SymMat& x);

// Vertex test at x x^T: {A_i x} u {B_i x : i active} spans R^n. Throws
// InvalidArgument for x = 0 or an infeasible dyad.
bool rank_one_vertex_test(const Spectrahedron& c, const Vec& x);

struct HypothesisFailure {
  enum class Kind { kHasInequalities, kZeroRhs, kRankNotAdditive };
  Kind kind;
  std::string detail;
};

// dim Im(A*) + binom(nullity(X) + 1, 2), or the hypothesis that fails.
using ModularRankResult = std::variant<std::size_t, HypothesisFailure>;
ModularRankResult modular_rank_dim(const Spectrahedron& c, const SymMat& x);

// Checks that h[0..k] are linearly independent, 1 <= k <= n-1, and
// h_i^T A_j h_0 = 0 for all j and i >= 1; returns n - k. Each supplied
// vertex must have rank <= n - k, otherwise std::logic_error. Invalid
// certificates throw InvalidArgument naming the failed condition.
std::size_t verify_rank_bound_certificate(const Spectrahedron& c, std::span<const Vec> h,
                                          std::span<const SymMat> vertices = {});

}  // namespace spectravert

#endif  // SPECTRAVERT_NORMALCONE_H_
