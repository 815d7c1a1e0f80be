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

#include "spectravert/strictcompl.h"

#include <stdexcept>

#include "lmi_search.h"
#include "spectravert/normalcone.h"

namespace spectravert {

namespace {

using detail::AffineBlock;
using detail::LmiProblem;
using detail::LmiResult;

void require_equality_only(const Spectrahedron& c) {
  if (!c.equality_only()) {
    throw InvalidArgument("this operation is only defined for equality-constrained spectrahedra");
  }
}

void require_slater(const Spectrahedron& c) {
  if (!c.slater) throw InvalidArgument("spectrahedron has no Slater witness");
}

void require_feasible(const Spectrahedron& c, const SymMat& x) {
  if (!is_feasible(c, x)) throw InvalidArgument("point is not feasible");
}

void require_labels(const Spectrahedron& c, const SymMat& m, const char* what) {
  if (!(m.labels() == c.labels)) throw InvalidArgument(std::string(what) + " has a different label set");
}

// Column-basis matrix of span(vectors) in R^n.
Mat basis_matrix(const std::vector<Vec>& vectors, std::size_t n) { return Mat::from_cols(vectors, n); }

SymMat compress(const Mat& n, const SymMat& m) {
  return SymMat::from_mat(n.transpose() * m.to_mat() * n, Labels::range(n.cols()));
}

// Rows of (base + sum_k w_k gens[k]) r = 0 over every column r of `range`.
void add_range_equalities(LmiProblem& p, const SymMat& base, const std::vector<SymMat>& gens,
                          const std::vector<Vec>& range) {
  std::vector<Vec> rows;
  Vec rhs;
  const std::size_t n = base.size();
  for (const auto& r : range) {
    const Vec b = base.apply(r);
    std::vector<Vec> images;
    for (const auto& g : gens) images.push_back(g.apply(r));
    for (std::size_t a = 0; a < n; ++a) {
      Vec row(gens.size());
      for (std::size_t k = 0; k < gens.size(); ++k) row[k] = images[k][a];
      rows.push_back(std::move(row));
      rhs.push_back(-b[a]);
    }
  }
  p.eq = rows.empty() ? Mat(0, gens.size()) : Mat::from_rows(rows, gens.size());
  p.rhs = std::move(rhs);
}

// Solution of sum_k w_k gens[k] = target, if any.
std::optional<Vec> solve_in_span(const std::vector<SymMat>& gens, const SymMat& target) {
  if (gens.empty()) return target.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  std::vector<Vec> cols;
  for (const auto& g : gens) cols.push_back(g.coords());
  const Vec t = target.coords();
  return solve(Mat::from_cols(cols, t.size()), t);
}

SearchTrace to_trace(const detail::LmiTrace& t) {
  return {t.iterations, t.approx_min_eig, t.lower_bound};
}

std::vector<SymMat> equality_matrices(const Spectrahedron& c) {
  std::vector<SymMat> out;
  for (const auto& row : c.eq) out.push_back(row.matrix);
  return out;
}

SymMat combine(const std::vector<SymMat>& gens, const Vec& w, const SymMat& base) {
  SymMat out = base;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (sgn(w[k]) != 0) out = out + w[k] * gens[k];
  }
  return out;
}

}  // namespace

bool check_pair(const Spectrahedron& c, const SymMat& x, const SymMat& s) {
  require_equality_only(c);
  require_labels(c, s, "slack");
  require_feasible(c, x);
  const bool ok = in_relint_conjugate_face(x, s);
  if (ok && !product(s, x).is_zero()) throw std::logic_error("XS = 0 but SX != 0");
  return ok;
}

bool verify_certificate(const Spectrahedron& c, const StrictComplCertificate& cert,
                        const std::optional<SymMat>& objective) {
  if (!(cert.x.labels() == c.labels) || !(cert.s.labels() == c.labels)) return false;
  if (!is_feasible(c, cert.x) || !is_psd(cert.s)) return false;
  if (!product(cert.x, cert.s).is_zero()) return false;
  if (rank(cert.x) != cert.rank_x || rank(cert.s) != cert.rank_s) return false;
  if (cert.rank_x + cert.rank_s != c.order()) return false;
  if (objective) {
    if (cert.y.size() != c.eq.size()) return false;
    if (!(adjoint_eq(c, cert.y) - *objective == cert.s)) return false;
  }
  return true;
}

RelintVerdict relint_membership(const Spectrahedron& c, const SymMat& x, const SymMat& objective) {
  require_equality_only(c);
  require_slater(c);
  require_labels(c, objective, "objective");
  require_feasible(c, x);
  const std::size_t n = c.order();
  const std::vector<SymMat> gens = equality_matrices(c);
  const SymMat base = Rat(-1) * objective;
  const Mat xm = x.to_mat();
  std::vector<Vec> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(xm.col(j));
  const SubspaceBasis range = span_basis(columns, n);
  const SubspaceBasis null = rank_nullspace(xm).nullspace;

  LmiProblem p;
  p.unknowns = gens.size();
  add_range_equalities(p, base, gens, range.vectors);
  if (null.dim() > 0) {
    const Mat nm = basis_matrix(null.vectors, n);
    AffineBlock block{compress(nm, base), {}, true};
    for (const auto& g : gens) block.coeffs.push_back(compress(nm, g));
    p.blocks.push_back(std::move(block));
  }
  p.exact_candidates.push_back(Vec(gens.size()));

  const LmiResult found = detail::solve_lmi(p);
  RelintVerdict verdict;
  verdict.trace = to_trace(found.trace);
  if (!found.solution) return verdict;
  StrictComplCertificate cert;
  cert.x = x;
  cert.y = *found.solution;
  cert.s = combine(gens, cert.y, base);
  cert.rank_x = rank(x);
  cert.rank_s = rank(cert.s);
  cert.verified = verify_certificate(c, cert, objective) && check_pair(c, x, cert.s);
  if (!cert.verified) throw std::logic_error("search returned a certificate that fails verification");
  verdict.status = RelintVerdict::Status::kCertifiedYes;
  verdict.certificate = std::move(cert);
  return verdict;
}

PolarVerdict polar_membership(const Spectrahedron& c, const SymMat& objective, const SymMat& x0) {
  require_equality_only(c);
  require_slater(c);
  require_labels(c, objective, "objective");
  require_labels(c, x0, "reference point");
  Vec a;
  for (const auto& row : c.eq) {
    if (frobenius(row.matrix, x0) != row.rhs) throw InvalidArgument("reference point violates A(x0) = a");
    a.push_back(row.rhs);
  }
  const std::vector<SymMat> gens = equality_matrices(c);
  const SymMat base = Rat(-1) * objective;
  LmiProblem p;
  p.unknowns = gens.size();
  p.eq = Mat(0, gens.size());
  p.blocks.push_back({base, gens, false});
  const Labels one = Labels::range(1);
  AffineBlock budget{SymMat::identity(one), {}, false};
  for (const Rat& ak : a) budget.coeffs.push_back(Rat(-ak) * SymMat::identity(one));
  p.blocks.push_back(std::move(budget));
  p.exact_candidates.push_back(Vec(gens.size()));
  if (auto y = solve_in_span(gens, objective)) p.exact_candidates.push_back(*y);

  const LmiResult found = detail::solve_lmi(p);
  PolarVerdict verdict;
  verdict.trace = to_trace(found.trace);
  if (!found.solution) return verdict;
  const SymMat slack = combine(gens, *found.solution, base);
  if (!is_psd(slack) || dot(a, *found.solution) > 1) {
    throw std::logic_error("polar certificate fails verification");
  }
  verdict.status = PolarVerdict::Status::kCertifiedMember;
  verdict.y = *found.solution;
  verdict.slack = slack;
  return verdict;
}

std::optional<NormalConeDecomposition> normal_cone_decomposition(const Spectrahedron& c,
                                                                 const SymMat& x, const SymMat& y) {
  require_slater(c);
  require_labels(c, y, "normal vector");
  require_feasible(c, x);
  const std::size_t n = c.order();
  const std::vector<std::size_t> active = active_inequalities(c, x);
  std::vector<SymMat> gens = equality_matrices(c);
  const std::size_t m = gens.size();
  for (std::size_t i : active) gens.push_back(c.ineq[i].matrix);
  const SymMat base = Rat(-1) * y;
  const Mat xm = x.to_mat();
  std::vector<Vec> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(xm.col(j));
  const SubspaceBasis range = span_basis(columns, n);
  const SubspaceBasis null = rank_nullspace(xm).nullspace;

  LmiProblem p;
  p.unknowns = gens.size();
  add_range_equalities(p, base, gens, range.vectors);
  if (null.dim() > 0) {
    const Mat nm = basis_matrix(null.vectors, n);
    AffineBlock block{compress(nm, base), {}, false};
    for (const auto& g : gens) block.coeffs.push_back(compress(nm, g));
    p.blocks.push_back(std::move(block));
  }
  const Labels one = Labels::range(1);
  for (std::size_t l = 0; l < active.size(); ++l) {
    AffineBlock sign{SymMat(one), std::vector<SymMat>(gens.size(), SymMat(one)), false};
    sign.coeffs[m + l] = SymMat::identity(one);
    p.blocks.push_back(std::move(sign));
  }
  p.exact_candidates.push_back(Vec(gens.size()));
  if (auto w = solve_in_span(gens, y)) p.exact_candidates.push_back(*w);

  const LmiResult found = detail::solve_lmi(p);
  if (!found.solution) return std::nullopt;
  const Vec& w = *found.solution;
  NormalConeDecomposition d;
  d.u.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m));
  d.z.assign(w.begin() + static_cast<std::ptrdiff_t>(m), w.end());
  d.s = combine(gens, w, base);
  bool ok = is_psd(d.s) && product(x, d.s).is_zero();
  for (const Rat& zl : d.z) ok = ok && sgn(zl) >= 0;
  if (!ok) throw std::logic_error("normal-cone decomposition fails verification");
  return d;
}

bool polar_face_contains(const Spectrahedron& c, const SymMat& x, const SymMat& y) {
  require_labels(c, y, "normal vector");
  require_feasible(c, x);
  if (frobenius(y, x) != 1) return false;
  return normal_cone_decomposition(c, x, y).has_value();
}

SymMat maxcut_objective(const Graph& g, const std::map<Edge, Rat>& weights) {
  SymMat out = Rat(1, 4) * laplacian(g, weights);
  if (!is_psd(out)) throw std::logic_error("max-cut objective is not PSD");
  return out;
}

}  // namespace spectravert
