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

#include "spectravert/normalcone.h"

#include <stdexcept>

namespace spectravert {

namespace {

void require_feasible_with_slater(const Spectrahedron& c, const SymMat& x) {
  if (!c.slater) {
    throw InvalidArgument("spectrahedron has no Slater witness; the normal-cone formulas need one");
  }
  if (!is_feasible(c, x)) throw InvalidArgument("point is not feasible");
}

std::size_t binom2(std::size_t k) { return k * (k + 1) / 2; }

std::size_t direct_dim(const Spectrahedron& c, const std::vector<std::size_t>& active,
                       const ConjugateFace& face) {
  std::vector<SymMat> gens;
  gens.reserve(c.eq.size() + active.size() + face.span_basis.size());
  for (const auto& row : c.eq) gens.push_back(row.matrix);
  for (std::size_t i : active) gens.push_back(c.ineq[i].matrix);
  gens.insert(gens.end(), face.span_basis.begin(), face.span_basis.end());
  if (gens.empty()) return 0;
  return span_dim(gens);
}

std::size_t formula_dim(const Spectrahedron& c, const std::vector<std::size_t>& active,
                        const SymMat& x) {
  const std::size_t n = c.order();
  const std::size_t ambient = sym_dim(n);
  // Null(A) n Null(P o B) in Frobenius coordinates.
  std::vector<Vec> rows;
  for (const auto& row : c.eq) rows.push_back(row.matrix.functional());
  for (std::size_t i : active) rows.push_back(c.ineq[i].matrix.functional());
  SubspaceBasis kernel;
  if (rows.empty()) {
    kernel.ambient = ambient;
    for (std::size_t k = 0; k < ambient; ++k) kernel.vectors.push_back(unit_vector(ambient, k));
  } else {
    kernel = rank_nullspace(Mat::from_rows(rows, ambient)).nullspace;
  }
  // linspan{Sym(X u v^T)} from the canonical u = e_i, v = e_j.
  const Mat xm = x.to_mat();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec xi = xm.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      gens.push_back(sym_outer(xi, unit_vector(n, j), c.labels).coords());
    }
  }
  const SubspaceBasis range = span_basis(gens, ambient);
  if (kernel.dim() == 0 || range.dim() == 0) return ambient;
  const SubspaceBasis both[] = {kernel, range};
  return ambient - subspace_intersection(both).dim();
}

}  // namespace

ConjugateFace conjugate_face(const SymMat& x) {
  if (!is_psd(x)) throw InvalidArgument("conjugate face needs a PSD point");
  ConjugateFace face;
  face.point = x;
  face.nullbasis = rank_nullspace(x.to_mat()).nullspace;
  const auto& b = face.nullbasis.vectors;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) {
      face.span_basis.push_back(sym_outer(b[i], b[j], x.labels()));
    }
  }
  face.dim = binom2(b.size());
  const std::size_t spanned = face.span_basis.empty() ? 0 : span_dim(face.span_basis);
  if (spanned != face.dim) throw std::logic_error("conjugate face dimension check failed");
  return face;
}

bool in_relint_conjugate_face(const SymMat& x, const SymMat& s) {
  if (!(x.labels() == s.labels())) throw InvalidArgument("label sets differ");
  const LdltResult f = ldlt(s);
  if (!f.psd) return false;
  if (!product(x, s).is_zero()) return false;
  return f.positive_pivots == x.size() - rank(x);
}

std::vector<std::size_t> active_inequalities(const Spectrahedron& c, const SymMat& x) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < c.ineq.size(); ++i) {
    if (frobenius(c.ineq[i].matrix, x) == c.ineq[i].rhs) active.push_back(i);
  }
  return active;
}

std::size_t normal_cone_dim_direct(const Spectrahedron& c, const SymMat& x) {
  require_feasible_with_slater(c, x);
  return direct_dim(c, active_inequalities(c, x), conjugate_face(x));
}

std::size_t normal_cone_dim_formula(const Spectrahedron& c, const SymMat& x) {
  require_feasible_with_slater(c, x);
  return formula_dim(c, active_inequalities(c, x), x);
}

NormalConeReport is_vertex(const Spectrahedron& c, const SymMat& x) {
  require_feasible_with_slater(c, x);
  NormalConeReport r;
  r.ambient_dim = sym_dim(c.order());
  r.active = active_inequalities(c, x);
  const ConjugateFace face = conjugate_face(x);
  r.nullity = face.nullbasis.dim();
  r.dim_direct = direct_dim(c, r.active, face);
  r.dim_formula = formula_dim(c, r.active, x);
  if (r.dim_direct != r.dim_formula) {
    throw std::logic_error("normal-cone routes disagree: direct " + std::to_string(r.dim_direct) +
                           ", formula " + std::to_string(r.dim_formula));
  }
  r.is_vertex = r.dim_direct == r.ambient_dim;
  return r;
}

bool rank_one_vertex_test(const Spectrahedron& c, const Vec& x) {
  if (x.size() != c.order()) throw InvalidArgument("vector length does not match the spectrahedron");
  bool nonzero = false;
  for (const auto& v : x) nonzero = nonzero || sgn(v) != 0;
  if (!nonzero) throw InvalidArgument("rank-one vertex test needs a nonzero vector");
  const SymMat point = dyad(x, c.labels);
  require_feasible_with_slater(c, point);
  std::vector<Vec> images;
  for (const auto& row : c.eq) images.push_back(row.matrix.apply(x));
  for (std::size_t i : active_inequalities(c, point)) images.push_back(c.ineq[i].matrix.apply(x));
  return span_dim(images, c.order()) == c.order();
}

ModularRankResult modular_rank_dim(const Spectrahedron& c, const SymMat& x) {
  require_feasible_with_slater(c, x);
  using Kind = HypothesisFailure::Kind;
  if (!c.equality_only()) {
    return HypothesisFailure{Kind::kHasInequalities, "the body has inequality constraints"};
  }
  for (std::size_t i = 0; i < c.eq.size(); ++i) {
    if (sgn(c.eq[i].rhs) == 0) {
      return HypothesisFailure{Kind::kZeroRhs,
                               "equality " + std::to_string(i) + " has a zero right-hand side"};
    }
  }
  SymMat sum(c.labels);
  std::size_t rank_sum = 0;
  std::vector<SymMat> gens;
  for (const auto& row : c.eq) {
    sum = sum + row.matrix;
    rank_sum += rank(row.matrix);
    gens.push_back(row.matrix);
  }
  const std::size_t rank_total = rank(sum);
  if (rank_total != rank_sum) {
    return HypothesisFailure{Kind::kRankNotAdditive,
                             "rank of the sum is " + std::to_string(rank_total) +
                                 " but the ranks add up to " + std::to_string(rank_sum)};
  }
  const std::size_t image = gens.empty() ? 0 : span_dim(gens);
  return image + binom2(c.order() - rank(x));
}

std::size_t verify_rank_bound_certificate(const Spectrahedron& c, std::span<const Vec> h,
                                          std::span<const SymMat> vertices) {
  if (!c.slater) throw InvalidArgument("spectrahedron has no Slater witness");
  if (!c.equality_only()) throw InvalidArgument("rank-bound certificates need an equality-only body");
  const std::size_t n = c.order();
  if (h.size() < 2 || h.size() > n) throw InvalidArgument("certificate needs 1 <= k <= n-1");
  for (const auto& v : h) {
    if (v.size() != n) throw InvalidArgument("certificate vector has the wrong length");
  }
  if (span_dim(h, n) != h.size()) throw InvalidArgument("certificate vectors are linearly dependent");
  for (std::size_t i = 1; i < h.size(); ++i) {
    const SymMat m = sym_outer(h[0], h[i], c.labels);
    for (std::size_t j = 0; j < c.eq.size(); ++j) {
      if (sgn(frobenius(c.eq[j].matrix, m)) != 0) {
        throw InvalidArgument("Sym(h0 h" + std::to_string(i) + "^T) is not in the null space of equality " +
                              std::to_string(j));
      }
    }
  }
  const std::size_t bound = n - (h.size() - 1);
  for (const auto& v : vertices) {
    if (rank(v) > bound) throw std::logic_error("a supplied vertex exceeds the certified rank bound");
  }
  return bound;
}

}  // namespace spectravert
