// Copyright 2026 The diophex Authors
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

#ifndef DIOPHEX_LINALG_HPP_
#define DIOPHEX_LINALG_HPP_

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "diophex/rational.hpp"

namespace diophex {

using QVector = std::vector<Rational>;

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  const std::vector<Rational>& entries() const { return a_; }

  QVector row(std::size_t i) const;
  QVector col(std::size_t j) const;
  QMatrix transpose() const;
  bool is_zero() const;

  QMatrix operator*(const QMatrix& b) const;
  QVector operator*(const QVector& v) const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  // In-place reduced row echelon form. Returns pivot columns. Zero rows are
  // kept at the bottom.
  std::vector<std::size_t> rref_in_place();

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

std::size_t rank(const QMatrix& m);

// Subspace of Q^n stored as the reduced row echelon form of a basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  // Span of the rows of m.
  static Subspace span(const QMatrix& m);
  static Subspace span(const std::vector<QVector>& vs, std::size_t ambient);
  static Subspace full(std::size_t n);
  // Span of the standard basis vectors e_i, i in idx (0-based).
  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& idx);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& w) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Incrementally grows a span, keeping the rows reduced.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient) : n_(ambient) {}
  // Returns true if v was independent of what was already there.
  bool add(QVector v);
  std::size_t dim() const { return rows_.size(); }
  bool full() const { return rows_.size() == n_; }
  Subspace subspace() const;

 private:
  std::size_t n_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> piv_;
};

Subspace kernel(const QMatrix& m);
Subspace intersect(const Subspace& w1, const Subspace& w2);
Subspace sum(const Subspace& w1, const Subspace& w2);
// m applied to every vector of w (m has w.ambient_dim() columns).
Subspace image(const QMatrix& m, const Subspace& w);
// w intersected with ker m.
Subspace kernel_within(const QMatrix& m, const Subspace& w);
// dim(w ∩ f) for each member f of an increasing flag ending at the ambient.
std::vector<std::size_t> flag_dims(const Subspace& w,
                                   const std::vector<Subspace>& flag);

// Positions p (0-based) where dim(w ∩ span(e_0..e_p)) jumps. Equivalently
// the trailing pivots of an echelon form reduced from the right.
std::vector<std::size_t> trailing_pivots(const Subspace& w);

}  // namespace diophex

#endif  // DIOPHEX_LINALG_HPP_
