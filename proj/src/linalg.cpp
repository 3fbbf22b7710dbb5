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

#include "diophex/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "diophex/errors.hpp"

namespace diophex {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("shape", "ragged matrix");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("shape", "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

QVector QMatrix::col(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

QMatrix QMatrix::operator*(const QMatrix& b) const {
  if (cols_ != b.rows_) throw ValidationError("shape", "matrix product");
  QMatrix c(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Rational& x = (*this)(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(l, j).is_zero()) c(i, j) += x * b(l, j);
    }
  return c;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw ValidationError("shape", "matrix-vector");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero())
        out[i] += (*this)(i, j) * v[j];
  return out;
}

std::vector<std::size_t> QMatrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(p, j), (*this)(r, j));
    const Rational inv = Rational(1) / (*this)(r, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      const Rational f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const QMatrix& m) {
  QMatrix t = m;
  return t.rref_in_place().size();
}

Subspace Subspace::span(const QMatrix& m) {
  QMatrix t = m;
  Subspace s;
  s.ambient_ = m.cols();
  s.pivots_ = t.rref_in_place();
  s.basis_ = QMatrix(s.pivots_.size(), m.cols());
  for (std::size_t i = 0; i < s.pivots_.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = t(i, j);
  return s;
}

Subspace Subspace::span(const std::vector<QVector>& vs, std::size_t ambient) {
  return span(QMatrix::from_rows(vs, ambient));
}

Subspace Subspace::full(std::size_t n) { return span(QMatrix::identity(n)); }

Subspace Subspace::coordinate(std::size_t n,
                              const std::vector<std::size_t>& idx) {
  QMatrix m(idx.size(), n);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= n) throw ValidationError("shape", "coordinate index");
    m(i, idx[i]) = 1;
  }
  return span(m);
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw ValidationError("shape", "ambient mismatch");
  QVector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(i, j).is_zero()) r[j] -= f * basis_(i, j);
  }
  return std::all_of(r.begin(), r.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& w) const {
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!contains(w.basis().row(i))) return false;
  return true;
}

bool SpanBuilder::add(QVector v) {
  if (v.size() != n_) throw ValidationError("shape", "span: vector length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[piv_[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
  }
  std::size_t p = 0;
  while (p < n_ && v[p].is_zero()) ++p;
  if (p == n_) return false;
  const Rational inv = Rational(1) / v[p];
  for (std::size_t j = p; j < n_; ++j) v[j] *= inv;
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = p; j < n_; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  piv_.push_back(p);
  return true;
}

Subspace SpanBuilder::subspace() const {
  return Subspace::span(rows_, n_);
}

Subspace kernel(const QMatrix& m) {
  QMatrix t = m;
  const auto piv = t.rref_in_place();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<QVector> vs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t(r, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, m.cols());
}

namespace {

void check_same(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw ValidationError("shape", "ambient-dimension mismatch");
}

}  // namespace

Subspace intersect(const Subspace& w1, const Subspace& w2) {
  check_same(w1, w2);
  const std::size_t n = w1.ambient_dim();
  if (w1.dim() == 0 || w2.dim() == 0) return Subspace(n);
  // Solve a.B1 = b.B2 for (a, b); common vectors are a.B1.
  const std::size_t r1 = w1.dim(), r2 = w2.dim();
  QMatrix m(n, r1 + r2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r1; ++i) m(j, i) = w1.basis()(i, j);
    for (std::size_t i = 0; i < r2; ++i) m(j, r1 + i) = -w2.basis()(i, j);
  }
  const Subspace k = kernel(m);
  std::vector<QVector> vs;
  for (std::size_t t = 0; t < k.dim(); ++t) {
    QVector v(n);
    for (std::size_t i = 0; i < r1; ++i) {
      const Rational& c = k.basis()(t, i);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += c * w1.basis()(i, j);
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, n);
}

Subspace sum(const Subspace& w1, const Subspace& w2) {
  check_same(w1, w2);
  const std::size_t n = w1.ambient_dim();
  QMatrix m(w1.dim() + w2.dim(), n);
  for (std::size_t i = 0; i < w1.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = w1.basis()(i, j);
  for (std::size_t i = 0; i < w2.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(w1.dim() + i, j) = w2.basis()(i, j);
  return Subspace::span(m);
}

Subspace image(const QMatrix& m, const Subspace& w) {
  if (m.cols() != w.ambient_dim())
    throw ValidationError("shape", "image: column count");
  return Subspace::span(w.basis() * m.transpose());
}

Subspace kernel_within(const QMatrix& m, const Subspace& w) {
  if (m.cols() != w.ambient_dim())
    throw ValidationError("shape", "kernel_within: column count");
  if (w.dim() == 0) return w;
  const Subspace c = kernel(m * w.basis().transpose());
  return Subspace::span(c.basis() * w.basis());
}

std::vector<std::size_t> flag_dims(const Subspace& w,
                                   const std::vector<Subspace>& flag) {
  for (std::size_t i = 0; i < flag.size(); ++i) {
    check_same(w, flag[i]);
    if (i > 0 && !flag[i].contains(flag[i - 1]))
      throw ValidationError("flag", "flag not nested");
  }
  if (!flag.empty() && flag.back().dim() != w.ambient_dim())
    throw ValidationError("flag", "flag does not end at the ambient space");
  std::vector<std::size_t> out;
  out.reserve(flag.size());
  for (const auto& f : flag) out.push_back(intersect(w, f).dim());
  return out;
}

std::vector<std::size_t> trailing_pivots(const Subspace& w) {
  const std::size_t n = w.ambient_dim();
  QMatrix rev(w.dim(), n);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) rev(i, n - 1 - j) = w.basis()(i, j);
  auto piv = rev.rref_in_place();
  std::vector<std::size_t> out;
  for (auto p : piv) out.push_back(n - 1 - p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace diophex
