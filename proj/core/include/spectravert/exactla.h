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

// Exact rational dense linear algebra. Every rank, span dimension and PSD
// decision in the library goes through this header; nothing here uses
// floating point.

#ifndef SPECTRAVERT_EXACTLA_H_
#define SPECTRAVERT_EXACTLA_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spectravert {

// Arbitrary precision rational, always kept in canonical form.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

// Thrown when an operation is called outside its contract (shape mismatch,
// label mismatch, singular transform, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);
// Accepts "p", "-p", "p/q". Throws InvalidArgument on malformed input or a
// zero denominator.
Rat parse_rat(std::string_view text);

// Ordered list of distinct string labels with cheap copies.
class Labels {
 public:
  Labels();
  explicit Labels(std::vector<std::string> names);

  // "1", "2", ..., "n".
  static Labels range(std::size_t n);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // A new label list with `name` in front. Throws if `name` is present.
  Labels prepend(const std::string& name) const;

  friend bool operator==(const Labels& a, const Labels& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  // Matrix whose rows are the given vectors (all of length `cols`).
  static Mat from_rows(std::span<const Vec> rows, std::size_t cols);
  // Matrix whose columns are the given vectors (all of length `rows`).
  static Mat from_cols(std::span<const Vec> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& x);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Exactly symmetric matrix indexed by a label set; upper triangle storage.
class SymMat {
 public:
  SymMat() = default;
  // Zero matrix on `labels`.
  explicit SymMat(Labels labels);

  static SymMat identity(Labels labels);
  // Throws InvalidArgument unless `m` is square, exactly symmetric and
  // conformal with `labels`.
  static SymMat from_mat(const Mat& m, Labels labels);
  static SymMat from_mat(const Mat& m) { return from_mat(m, Labels::range(m.rows())); }
  // Inverse of coords().
  static SymMat from_coords(std::span<const Rat> coords, Labels labels);

  std::size_t size() const { return n_; }
  const Labels& labels() const { return labels_; }

  const Rat& operator()(std::size_t i, std::size_t j) const {
    return i <= j ? upper_[index(i, j)] : upper_[index(j, i)];
  }
  void set(std::size_t i, std::size_t j, Rat v);
  void add(std::size_t i, std::size_t j, const Rat& v);

  Mat to_mat() const;
  // Entries of the upper triangle in row-major order; an isomorphism
  // Sym^n -> Q^{n(n+1)/2} used for every span computation.
  Vec coords() const;
  // Coordinates of the functional X -> <this, X> in the coords() basis:
  // diagonal weight 1, off-diagonal weight 2.
  Vec functional() const;
  Vec apply(const Vec& x) const;
  Rat trace() const;
  bool is_zero() const;

  friend SymMat operator+(const SymMat& a, const SymMat& b);
  friend SymMat operator-(const SymMat& a, const SymMat& b);
  friend SymMat operator*(const Rat& s, const SymMat& a);
  friend bool operator==(const SymMat& a, const SymMat& b);

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    return i * n_ - i * (i + 1) / 2 + j;
  }

  Labels labels_;
  std::size_t n_ = 0;
  std::vector<Rat> upper_;
};

inline std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }

// Linearly independent vectors in Q^ambient.
struct SubspaceBasis {
  std::size_t ambient = 0;
  std::vector<Vec> vectors;

  std::size_t dim() const { return vectors.size(); }
};

struct RankNullspace {
  std::size_t rank = 0;
  SubspaceBasis nullspace;
};

// (M + M^T) / 2.
SymMat symmetrize(const Mat& m, Labels labels);
SymMat symmetrize(const Mat& m);
// Trace(A^T B). Throws on label mismatch.
Rat frobenius(const SymMat& a, const SymMat& b);
// Symmetrization of the outer product u v^T.
SymMat sym_outer(const Vec& u, const Vec& v, Labels labels);
// x x^T.
SymMat dyad(const Vec& x, Labels labels);
Vec unit_vector(std::size_t n, std::size_t i);
SymMat product_sym(const SymMat& a, const SymMat& b);  // requires ab symmetric
Mat product(const SymMat& a, const SymMat& b);

// Exact rank and right nullspace.
RankNullspace rank_nullspace(const Mat& m);
std::size_t rank(const Mat& m);
std::size_t rank(const SymMat& m);

// Basis of the column span of the given vectors.
SubspaceBasis span_basis(std::span<const Vec> vectors, std::size_t ambient);
std::size_t span_dim(std::span<const Vec> vectors, std::size_t ambient);
// Dimension of a span of symmetric matrices. Throws on label mismatch.
std::size_t span_dim(std::span<const SymMat> matrices);

// Throws on ambient mismatch or an empty list.
SubspaceBasis subspace_intersection(std::span<const SubspaceBasis> bases);

// Symmetric-pivoted LDL^T. Pivots on the first strictly positive remaining
// diagonal entry in label order; a negative remaining diagonal entry proves
// indefiniteness; when no positive diagonal remains, the matrix is PSD iff
// the remaining block is zero.
struct LdltResult {
  bool psd = false;
  std::size_t positive_pivots = 0;  // equals rank when psd
};
LdltResult ldlt(const SymMat& x);
bool is_psd(const SymMat& x);
bool is_pd(const SymMat& x);

// L X L^T. Throws when L is singular or not conformal.
SymMat congruence(const Mat& l, const SymMat& x);

std::optional<Mat> inverse(const Mat& m);
// Some solution of A x = b (free variables set to zero), if consistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

Rat dot(const Vec& a, const Vec& b);

}  // namespace spectravert

#endif  // SPECTRAVERT_EXACTLA_H_
