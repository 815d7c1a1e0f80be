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

#include "row_reduce.h"

#include <utility>

namespace spectravert::detail {

namespace {

// target -= factor * source, touching only the nonzero tail of source.
void axpy_neg(Vec& target, const Rat& factor, const Vec& source, std::size_t from) {
  Rat tmp;
  for (std::size_t j = from; j < source.size(); ++j) {
    if (sgn(source[j]) == 0) continue;
    mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), source[j].get_mpq_t());
    mpq_sub(target[j].get_mpq_t(), target[j].get_mpq_t(), tmp.get_mpq_t());
  }
}

}  // namespace

std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && sgn(rows[r][c]) == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    Vec& piv = rows[rank];
    if (piv[c] != 1) {
      const Rat inv = 1 / piv[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(piv[j]) != 0) piv[j] *= inv;
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][c]) == 0) continue;
      const Rat f = rows[i][c];
      axpy_neg(rows[i], f, piv, c);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::size_t echelon_rank(std::vector<Vec>& rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && sgn(rows[r][c]) == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    const Vec& piv = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rat f = rows[i][c] / piv[c];
      axpy_neg(rows[i], f, piv, c);
    }
    ++rank;
  }
  return rank;
}

SubspaceBasis nullspace_from_rref(const std::vector<Vec>& rref_rows,
                                  const std::vector<std::size_t>& pivots, std::size_t cols) {
  SubspaceBasis basis;
  basis.ambient = cols;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (sgn(rref_rows[r][f]) != 0) v[pivots[r]] = -rref_rows[r][f];
    }
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

}  // namespace spectravert::detail
