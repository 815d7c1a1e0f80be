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

// Search for a rational point in an affine slice on which a list of affine
// symmetric blocks are positive (semi)definite. The floating phase only
// proposes candidates; every answer is verified exactly.

#ifndef SPECTRAVERT_LMI_SEARCH_H_
#define SPECTRAVERT_LMI_SEARCH_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "spectravert/exactla.h"

namespace spectravert::detail {

// constant + sum_k w_k coeffs[k].
struct AffineBlock {
  SymMat constant;
  std::vector<SymMat> coeffs;
  bool strict = true;  // positive definite rather than semidefinite
};

struct LmiProblem {
  std::size_t unknowns = 0;
  Mat eq;  // eq w = rhs, possibly with zero rows
  Vec rhs;
  std::vector<AffineBlock> blocks;
  // Tried exactly before any floating search.
  std::vector<Vec> exact_candidates;
};

struct LmiTrace {
  std::size_t iterations = 0;
  double approx_min_eig = 0;
  // Certified: every block at the reported point is >= this bound.
  std::optional<Rat> lower_bound;
};

struct LmiResult {
  std::optional<Vec> solution;
  LmiTrace trace;
};

inline constexpr std::size_t kMaxIterations = 500;

LmiResult solve_lmi(const LmiProblem& problem);

// Continued-fraction convergent of x within eps.
Rat rationalize(double x, const Rat& eps);

// A rational t with x - t I PSD, exactly verified.
Rat min_eig_lower_bound(const SymMat& x);

}  // namespace spectravert::detail

#endif  // SPECTRAVERT_LMI_SEARCH_H_
