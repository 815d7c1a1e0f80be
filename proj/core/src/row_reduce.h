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

// Row reduction kernels shared by the exact linear algebra routines.

#ifndef SPECTRAVERT_ROW_REDUCE_H_
#define SPECTRAVERT_ROW_REDUCE_H_

#include <cstddef>
#include <vector>

#include "spectravert/exactla.h"

namespace spectravert::detail {

// Brings `rows` to reduced row echelon form in place and drops zero rows.
// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols);

// Rank by forward elimination only; `rows` is clobbered.
std::size_t echelon_rank(std::vector<Vec>& rows, std::size_t cols);

// Right nullspace basis read off a reduced row echelon form.
SubspaceBasis nullspace_from_rref(const std::vector<Vec>& rref_rows,
                                  const std::vector<std::size_t>& pivots, std::size_t cols);

}  // namespace spectravert::detail

#endif  // SPECTRAVERT_ROW_REDUCE_H_
