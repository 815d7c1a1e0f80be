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

#include "lmi_search.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace spectravert::detail {

namespace {

constexpr std::uint64_t kSeed = 0x5eed5eedULL;
constexpr std::size_t kRestarts = 3;
constexpr int kLadder[] = {20, 40, 60};

Eigen::MatrixXd to_eigen(const SymMat& m) {
  const std::size_t n = m.size();
  Eigen::MatrixXd out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, j).get_d();
  }
  return out;
}

Rat pow2_inverse(int bits) {
  mpz_class den(1);
  den <<= bits;
  return Rat(mpz_class(1), den);
}

SymMat eval_block(const AffineBlock& b, const Vec& w) {
  SymMat out = b.constant;
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
    if (sgn(w[k]) != 0) out = out + w[k] * b.coeffs[k];
  }
  return out;
}

bool verify(const LmiProblem& p, const Vec& w) {
  if (w.size() != p.unknowns) return false;
  if (p.eq.rows() > 0 && !(p.eq * w == p.rhs)) return false;
  for (const auto& b : p.blocks) {
    const SymMat m = eval_block(b, w);
    if (b.strict ? !is_pd(m) : !is_psd(m)) return false;
  }
  return true;
}

struct ReducedBlock {
  Eigen::MatrixXd constant;
  std::vector<Eigen::MatrixXd> dirs;
};

// Softmin of all block eigenvalues and its gradient in t.
struct Evaluation {
  double softmin = 0;
  double minimum = 0;
  Eigen::VectorXd grad;
};

class Objective {
 public:
  Objective(std::vector<ReducedBlock> blocks, std::size_t dim) : blocks_(std::move(blocks)), dim_(dim) {}

  Evaluation operator()(const Eigen::VectorXd& t, double beta) const {
    struct Eig {
      double value;
      std::size_t block;
      Eigen::VectorXd vec;
    };
    std::vector<Eig> eigs;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      Eigen::MatrixXd m = blocks_[b].constant;
      for (std::size_t j = 0; j < dim_; ++j) m += t(j) * blocks_[b].dirs[j];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        eigs.push_back({solver.eigenvalues()(i), b, solver.eigenvectors().col(i)});
      }
    }
    Evaluation e;
    e.grad = Eigen::VectorXd::Zero(dim_);
    if (eigs.empty()) return e;
    e.minimum = std::numeric_limits<double>::infinity();
    for (const auto& g : eigs) e.minimum = std::min(e.minimum, g.value);
    double z = 0;
    for (const auto& g : eigs) z += std::exp(-beta * (g.value - e.minimum));
    e.softmin = e.minimum - std::log(z) / beta;
    for (const auto& g : eigs) {
      const double weight = std::exp(-beta * (g.value - e.minimum)) / z;
      if (weight < 1e-300) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        e.grad(j) += weight * g.vec.dot(blocks_[g.block].dirs[j] * g.vec);
      }
    }
    return e;
  }

 private:
  std::vector<ReducedBlock> blocks_;
  std::size_t dim_;
};

}  // namespace

Rat rationalize(double x, const Rat& eps) {
  if (!std::isfinite(x)) throw InvalidArgument("cannot rationalize a non-finite value");
  const Rat target(x);
  Rat rest = target;
  mpz_class h_prev(1), h(0), k_prev(0), k(1);
  // Convergents h/k of the exact binary value of x.
  for (int guard = 0; guard < 200; ++guard) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class h_next = a * h_prev + h;
    const mpz_class k_next = a * k_prev + k;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    const Rat approx(h_prev, k_prev);
    if (abs(Rat(target - approx)) <= eps) return Rat(approx);
    rest -= a;
    if (sgn(rest) == 0) return Rat(approx);
    rest = 1 / rest;
  }
  return target;
}

Rat min_eig_lower_bound(const SymMat& x) {
  const std::size_t n = x.size();
  if (n == 0) return Rat(0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(x), Eigen::EigenvaluesOnly);
  const double lambda = solver.eigenvalues()(0);
  const SymMat id = SymMat::identity(x.labels());
  if (std::isfinite(lambda)) {
    // Short rationals first, so exact eigenvalues come back exactly.
    for (int bits = 4; bits <= 32; bits += 4) {
      const Rat tau = rationalize(lambda, pow2_inverse(bits));
      if (is_psd(x - tau * id)) return tau;
    }
  }
  double delta = 1e-9 * (1 + std::abs(lambda));
  for (int attempt = 0; attempt < 12 && std::isfinite(lambda); ++attempt, delta *= 10) {
    const Rat tau = rationalize(lambda - delta, pow2_inverse(40));
    if (is_psd(x - tau * id)) return tau;
  }
  // Gershgorin discs always give a valid bound.
  Rat best;
  for (std::size_t i = 0; i < n; ++i) {
    Rat radius = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) radius += abs(x(i, j));
    }
    const Rat disc = x(i, i) - radius;
    if (i == 0 || disc < best) best = disc;
  }
  return best;
}

LmiResult solve_lmi(const LmiProblem& p) {
  LmiResult result;
  const std::size_t m = p.unknowns;

  for (const auto& w : p.exact_candidates) {
    if (verify(p, w)) {
      result.solution = w;
      break;
    }
  }

  // w = w0 + Z t parametrizes the equality constraints.
  Vec w0(m);
  std::vector<Vec> z;
  if (p.eq.rows() == 0) {
    for (std::size_t k = 0; k < m; ++k) z.push_back(unit_vector(m, k));
  } else if (auto sol = solve(p.eq, p.rhs)) {
    w0 = *sol;
    z = rank_nullspace(p.eq).nullspace.vectors;
  } else {
    return result;
  }
  const std::size_t dim = z.size();
  auto lift = [&](const std::vector<Rat>& t) {
    Vec w = w0;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(t[j]) == 0) continue;
      for (std::size_t k = 0; k < m; ++k) w[k] += t[j] * z[j][k];
    }
    return w;
  };
  if (!result.solution && verify(p, w0)) result.solution = w0;

  std::vector<ReducedBlock> reduced;
  for (const auto& b : p.blocks) {
    ReducedBlock r{to_eigen(eval_block(b, w0)), {}};
    for (std::size_t j = 0; j < dim; ++j) {
      SymMat d(b.constant.labels());
      for (std::size_t k = 0; k < m; ++k) {
        if (sgn(z[j][k]) != 0 && k < b.coeffs.size()) d = d + z[j][k] * b.coeffs[k];
      }
      r.dirs.push_back(to_eigen(d));
    }
    reduced.push_back(std::move(r));
  }
  const Objective objective(std::move(reduced), dim);

  auto try_rationalize = [&](const Eigen::VectorXd& t) -> std::optional<Vec> {
    for (int bits : kLadder) {
      std::vector<Rat> tr(dim);
      for (std::size_t j = 0; j < dim; ++j) tr[j] = rationalize(t(j), pow2_inverse(bits));
      Vec w = lift(tr);
      if (verify(p, w)) return w;
    }
    return std::nullopt;
  };

  Eigen::VectorXd best_t = Eigen::VectorXd::Zero(dim);
  double best_min = -std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t start = 0; start < kRestarts && !result.solution && dim > 0; ++start) {
    Eigen::VectorXd t = Eigen::VectorXd::Zero(dim);
    if (start > 0) {
      for (std::size_t j = 0; j < dim; ++j) t(j) = normal(rng);
    }
    Evaluation e0 = objective(t, 1.0);
    double scale = std::abs(e0.minimum);
    const double beta = 30.0 / (1e-6 + scale);
    Evaluation e = objective(t, beta);
    double step = 1.0 + t.norm();
    while (result.trace.iterations < kMaxIterations) {
      ++result.trace.iterations;
      if (e.minimum > best_min) {
        best_min = e.minimum;
        best_t = t;
      }
      if (e.minimum > 0) {
        if (auto w = try_rationalize(t)) {
          result.solution = std::move(w);
          break;
        }
      }
      const double gnorm = e.grad.norm();
      if (!(gnorm > 1e-14)) break;
      const Eigen::VectorXd dir = e.grad / gnorm;
      bool moved = false;
      while (step > 1e-14) {
        Eigen::VectorXd trial = t + step * dir;
        Evaluation et = objective(trial, beta);
        if (et.softmin > e.softmin) {
          t = std::move(trial);
          e = std::move(et);
          step *= 2;
          moved = true;
          break;
        }
        step /= 2;
      }
      if (!moved) break;
    }
  }

  // Trace at the answer, or at the best floating point found.
  std::optional<Vec> at = result.solution;
  if (!at && dim > 0 && std::isfinite(best_min)) {
    std::vector<Rat> tr(dim);
    for (std::size_t j = 0; j < dim; ++j) tr[j] = rationalize(best_t(j), pow2_inverse(60));
    at = lift(tr);
  }
  if (!at) at = w0;
  double approx = std::numeric_limits<double>::infinity();
  for (const auto& b : p.blocks) {
    const SymMat mb = eval_block(b, *at);
    const Rat bound = min_eig_lower_bound(mb);
    if (!result.trace.lower_bound || bound < *result.trace.lower_bound) result.trace.lower_bound = bound;
    if (mb.size() > 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(mb), Eigen::EigenvaluesOnly);
      approx = std::min(approx, solver.eigenvalues()(0));
    }
  }
  result.trace.approx_min_eig = std::isfinite(approx) ? approx : 0.0;
  return result;
}

}  // namespace spectravert::detail
