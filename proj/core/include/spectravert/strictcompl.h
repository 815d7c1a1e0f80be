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

// Strict complementarity: pair checks, relative-interior membership in a
// normal cone, membership in the polar of the feasible region, and the
// exposed faces of that polar. Searches are semi-decisions: a positive
// answer always carries an exactly verified certificate, a negative one
// claims nothing.

#ifndef SPECTRAVERT_STRICTCOMPL_H_
#define SPECTRAVERT_STRICTCOMPL_H_

#include <cstddef>
#include <map>
#include <optional>

#include "spectravert/exactla.h"
#include "spectravert/graphs.h"
#include "spectravert/spectra.h"

namespace spectravert {

struct StrictComplCertificate {
  SymMat x;
  SymMat s;
  Vec y;
  std::size_t rank_x = 0;
  std::size_t rank_s = 0;
  bool verified = false;
};

// S PSD, XS = 0 and rank(S) = nullity(X). Throws InvalidArgument when C has
// inequalities or X is infeasible.
bool check_pair(const Spectrahedron& c, const SymMat& x, const SymMat& s);

// Re-checks a certificate from scratch, including S = A*(y) - objective
// when an objective is given.
bool verify_certificate(const Spectrahedron& c, const StrictComplCertificate& cert,
                        const std::optional<SymMat>& objective = std::nullopt);

struct SearchTrace {
  std::size_t iterations = 0;
  // Floating estimate of the smallest eigenvalue of the searched blocks.
  double approx_min_eig = 0;
  // Exactly certified lower bound on the same quantity.
  std::optional<Rat> min_eig_lower_bound;
};

struct RelintVerdict {
  enum class Status { kCertifiedYes, kNoCertificateFound };
  Status status = Status::kNoCertificateFound;
  std::optional<StrictComplCertificate> certificate;
  SearchTrace trace;
  bool certified() const { return status == Status::kCertifiedYes; }
};

// Looks for y with S = A*(y) - c, S R = 0 on a range basis R of X and
// N^T S N positive definite on a null basis N of X. Throws InvalidArgument
// for inequality-constrained C, a missing Slater witness or infeasible X.
RelintVerdict relint_membership(const Spectrahedron& c, const SymMat& x, const SymMat& objective);

struct PolarVerdict {
  enum class Status { kCertifiedMember, kNoCertificateFound };
  Status status = Status::kNoCertificateFound;
  std::optional<Vec> y;
  std::optional<SymMat> slack;  // A*(y) - c
  SearchTrace trace;
  bool certified() const { return status == Status::kCertifiedMember; }
};

// Looks for y with A*(y) - c PSD and <x0, A*(y)> = a^T y <= 1. Requires an
// equality-only C with a Slater witness and A(x0) = a.
PolarVerdict polar_membership(const Spectrahedron& c, const SymMat& objective, const SymMat& x0);

// y = A*(u) + B_act*(z) - s with z >= 0, s PSD and s X = 0.
struct NormalConeDecomposition {
  Vec u;
  Vec z;  // indexed like active_inequalities(c, x)
  SymMat s;
};

std::optional<NormalConeDecomposition> normal_cone_decomposition(const Spectrahedron& c,
                                                                 const SymMat& x, const SymMat& y);

// <y, X> = 1 and y has a verified normal-cone decomposition at X.
bool polar_face_contains(const Spectrahedron& c, const SymMat& x, const SymMat& y);

// L_G(w) / 4.
SymMat maxcut_objective(const Graph& g, const std::map<Edge, Rat>& weights = {});

}  // namespace spectravert

#endif  // SPECTRAVERT_STRICTCOMPL_H_
