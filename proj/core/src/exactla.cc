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

#include "spectravert/exactla.h"

#include <algorithm>
#include <charconv>
#include <unordered_set>
#include <utility>

#include "row_reduce.h"

namespace spectravert {

std::string to_string(const Rat& r) { return r.get_str(10); }

Rat parse_rat(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- Labels

Labels::Labels() : names_(std::make_shared<const std::vector<std::string>>()) {}

Labels::Labels(std::vector<std::string> names) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw InvalidArgument("duplicate label '" + name + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Labels Labels::range(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return Labels(std::move(names));
}

std::optional<std::size_t> Labels::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

Labels Labels::prepend(const std::string& name) const {
  std::vector<std::string> names;
  names.reserve(size() + 1);
  names.push_back(name);
  names.insert(names.end(), names_->begin(), names_->end());
  return Labels(std::move(names));
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

Mat Mat::from_cols(std::span<const Vec> cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vec operator*(const Mat& a, const Vec& x) {
  if (a.cols_ != x.size()) throw InvalidArgument("matrix-vector shape mismatch");
  Vec y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0) y[i] += a(i, k) * x[k];
    }
  }
  return y;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("shape mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("shape mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Mat operator*(const Rat& s, const Mat& a) {
  Mat c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

// ---------------------------------------------------------------- SymMat

SymMat::SymMat(Labels labels)
    : labels_(std::move(labels)), n_(labels_.size()), upper_(sym_dim(n_)) {}

SymMat SymMat::identity(Labels labels) {
  SymMat s(std::move(labels));
  for (std::size_t i = 0; i < s.n_; ++i) s.set(i, i, 1);
  return s;
}

SymMat SymMat::from_mat(const Mat& m, Labels labels) {
  if (!m.is_square()) throw InvalidArgument("symmetric matrix must be square");
  if (labels.size() != m.rows()) throw InvalidArgument("label count does not match matrix order");
  SymMat s(std::move(labels));
  for (std::size_t i = 0; i < s.n_; ++i) {
    for (std::size_t j = i; j < s.n_; ++j) {
      if (m(i, j) != m(j, i)) throw InvalidArgument("matrix is not symmetric");
      s.upper_[s.index(i, j)] = m(i, j);
    }
  }
  return s;
}

SymMat SymMat::from_coords(std::span<const Rat> coords, Labels labels) {
  SymMat s(std::move(labels));
  if (coords.size() != s.upper_.size()) throw InvalidArgument("coordinate length mismatch");
  std::copy(coords.begin(), coords.end(), s.upper_.begin());
  return s;
}

void SymMat::set(std::size_t i, std::size_t j, Rat v) {
  if (i > j) std::swap(i, j);
  upper_[index(i, j)] = std::move(v);
}

void SymMat::add(std::size_t i, std::size_t j, const Rat& v) {
  if (i > j) std::swap(i, j);
  upper_[index(i, j)] += v;
}

Mat SymMat::to_mat() const {
  Mat m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

Vec SymMat::coords() const { return upper_; }

Vec SymMat::functional() const {
  Vec f = upper_;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) f[index(i, j)] *= 2;
  }
  return f;
}

Vec SymMat::apply(const Vec& x) const {
  if (x.size() != n_) throw InvalidArgument("vector length mismatch");
  Vec y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const Rat& a = (*this)(i, j);
      if (sgn(a) != 0 && sgn(x[j]) != 0) y[i] += a * x[j];
    }
  }
  return y;
}

Rat SymMat::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool SymMat::is_zero() const {
  return std::all_of(upper_.begin(), upper_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

SymMat operator+(const SymMat& a, const SymMat& b) {
  if (!(a.labels_ == b.labels_)) throw InvalidArgument("label mismatch in sum");
  SymMat c = a;
  for (std::size_t i = 0; i < c.upper_.size(); ++i) c.upper_[i] += b.upper_[i];
  return c;
}

SymMat operator-(const SymMat& a, const SymMat& b) {
  if (!(a.labels_ == b.labels_)) throw InvalidArgument("label mismatch in difference");
  SymMat c = a;
  for (std::size_t i = 0; i < c.upper_.size(); ++i) c.upper_[i] -= b.upper_[i];
  return c;
}

SymMat operator*(const Rat& s, const SymMat& a) {
  SymMat c = a;
  for (auto& x : c.upper_) x *= s;
  return c;
}

bool operator==(const SymMat& a, const SymMat& b) {
  return a.labels_ == b.labels_ && a.upper_ == b.upper_;
}

// ---------------------------------------------------------------- free ops

SymMat symmetrize(const Mat& m, Labels labels) {
  if (!m.is_square()) throw InvalidArgument("symmetrize requires a square matrix");
  if (labels.size() != m.rows()) throw InvalidArgument("label count does not match matrix order");
  SymMat s(std::move(labels));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.rows(); ++j) s.set(i, j, (m(i, j) + m(j, i)) / 2);
  }
  return s;
}

SymMat symmetrize(const Mat& m) { return symmetrize(m, Labels::range(m.rows())); }

Rat frobenius(const SymMat& a, const SymMat& b) {
  if (!(a.labels() == b.labels())) throw InvalidArgument("label mismatch in inner product");
  Rat s = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a(i, i)) != 0 && sgn(b(i, i)) != 0) s += a(i, i) * b(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(a(i, j)) != 0 && sgn(b(i, j)) != 0) s += 2 * a(i, j) * b(i, j);
    }
  }
  return s;
}

SymMat sym_outer(const Vec& u, const Vec& v, Labels labels) {
  const std::size_t n = labels.size();
  if (u.size() != n || v.size() != n) throw InvalidArgument("vector length mismatch");
  SymMat s(std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rat x = u[i] * v[j] + u[j] * v[i];
      if (sgn(x) != 0) s.set(i, j, x / 2);
    }
  }
  return s;
}

SymMat dyad(const Vec& x, Labels labels) { return sym_outer(x, x, std::move(labels)); }

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec e(n);
  e.at(i) = 1;
  return e;
}

Mat product(const SymMat& a, const SymMat& b) {
  if (!(a.labels() == b.labels())) throw InvalidArgument("label mismatch in product");
  return a.to_mat() * b.to_mat();
}

SymMat product_sym(const SymMat& a, const SymMat& b) {
  return SymMat::from_mat(product(a, b), a.labels());
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidArgument("dot product length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RankNullspace rank_nullspace(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const auto pivots = detail::rref(rows, m.cols());
  RankNullspace out;
  out.rank = pivots.size();
  out.nullspace = detail::nullspace_from_rref(rows, pivots, m.cols());
  return out;
}

std::size_t rank(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return detail::echelon_rank(rows, m.cols());
}

std::size_t rank(const SymMat& m) { return rank(m.to_mat()); }

SubspaceBasis span_basis(std::span<const Vec> vectors, std::size_t ambient) {
  std::vector<Vec> rows(vectors.begin(), vectors.end());
  for (const auto& v : rows) {
    if (v.size() != ambient) throw InvalidArgument("mixed ambient dimensions in span");
  }
  detail::rref(rows, ambient);
  return SubspaceBasis{ambient, std::move(rows)};
}

std::size_t span_dim(std::span<const Vec> vectors, std::size_t ambient) {
  std::vector<Vec> rows(vectors.begin(), vectors.end());
  for (const auto& v : rows) {
    if (v.size() != ambient) throw InvalidArgument("mixed ambient dimensions in span");
  }
  return detail::echelon_rank(rows, ambient);
}

std::size_t span_dim(std::span<const SymMat> matrices) {
  if (matrices.empty()) return 0;
  std::vector<Vec> rows;
  rows.reserve(matrices.size());
  for (const auto& m : matrices) {
    if (!(m.labels() == matrices.front().labels())) {
      throw InvalidArgument("mixed label sets in span");
    }
    rows.push_back(m.coords());
  }
  return detail::echelon_rank(rows, sym_dim(matrices.front().size()));
}

SubspaceBasis subspace_intersection(std::span<const SubspaceBasis> bases) {
  if (bases.empty()) throw InvalidArgument("intersection of an empty family");
  SubspaceBasis acc = bases.front();
  for (std::size_t k = 1; k < bases.size(); ++k) {
    const SubspaceBasis& other = bases[k];
    if (other.ambient != acc.ambient) throw InvalidArgument("ambient mismatch in intersection");
    if (acc.vectors.empty()) break;
    if (other.vectors.empty()) {
      acc.vectors.clear();
      break;
    }
    // Solve [B1 | -B2] (alpha, beta) = 0; the intersection is {B1 alpha}.
    const std::size_t d1 = acc.dim();
    const std::size_t d2 = other.dim();
    std::vector<Vec> rows(acc.ambient, Vec(d1 + d2));
    for (std::size_t c = 0; c < d1; ++c) {
      for (std::size_t r = 0; r < acc.ambient; ++r) rows[r][c] = acc.vectors[c][r];
    }
    for (std::size_t c = 0; c < d2; ++c) {
      for (std::size_t r = 0; r < acc.ambient; ++r) rows[r][d1 + c] = -other.vectors[c][r];
    }
    const auto pivots = detail::rref(rows, d1 + d2);
    const SubspaceBasis null = detail::nullspace_from_rref(rows, pivots, d1 + d2);
    std::vector<Vec> out;
    out.reserve(null.dim());
    for (const auto& coeffs : null.vectors) {
      Vec v(acc.ambient);
      for (std::size_t c = 0; c < d1; ++c) {
        if (sgn(coeffs[c]) == 0) continue;
        for (std::size_t r = 0; r < acc.ambient; ++r) {
          if (sgn(acc.vectors[c][r]) != 0) v[r] += coeffs[c] * acc.vectors[c][r];
        }
      }
      out.push_back(std::move(v));
    }
    acc.vectors = std::move(out);
  }
  return acc;
}

LdltResult ldlt(const SymMat& x) {
  const std::size_t n = x.size();
  Mat w = x.to_mat();
  std::vector<bool> done(n, false);
  LdltResult out;
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const int s = sgn(w(i, i));
      if (s < 0) return out;
      if (s > 0 && !pivot) pivot = i;
    }
    if (!pivot) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[i] && !done[j] && sgn(w(i, j)) != 0) return out;
        }
      }
      out.psd = true;
      return out;
    }
    const std::size_t p = *pivot;
    done[p] = true;
    ++out.positive_pivots;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(w(i, p)) == 0) continue;
      const Rat f = w(i, p) / w(p, p);
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j] && sgn(w(p, j)) != 0) w(i, j) -= f * w(p, j);
      }
    }
  }
  out.psd = true;
  return out;
}

bool is_psd(const SymMat& x) { return ldlt(x).psd; }

bool is_pd(const SymMat& x) {
  const LdltResult r = ldlt(x);
  return r.psd && r.positive_pivots == x.size();
}

SymMat congruence(const Mat& l, const SymMat& x) {
  if (!l.is_square() || l.rows() != x.size()) {
    throw InvalidArgument("congruence transform is not conformal");
  }
  if (rank(l) != l.rows()) throw InvalidArgument("congruence transform is singular");
  return SymMat::from_mat(l * x.to_mat() * l.transpose(), x.labels());
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<Vec> rows(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n + i] = 1;
  }
  const auto pivots = detail::rref(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
  }
  return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length mismatch");
  const std::size_t n = a.cols();
  std::vector<Vec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec row = a.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  const auto pivots = detail::rref(rows, n + 1);
  Vec x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    x[pivots[r]] = rows[r][n];
  }
  return x;
}

}  // namespace spectravert
