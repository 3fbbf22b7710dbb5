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

#ifndef DIOPHEX_FREELIE_HPP_
#define DIOPHEX_FREELIE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "diophex/lie_algebra.hpp"

namespace diophex {

// Letters are 1..k.
using Word = std::vector<int>;

bool is_lyndon(const Word& w);
std::uint64_t witt_dim(std::uint64_t k, std::uint64_t i);

// Lyndon basis of the free s-step nilpotent Lie algebra on k generators.
// Ordered by degree, then lexicographically. Immutable apart from an
// internal bracket cache.
class FreeLieBasis {
 public:
  static std::shared_ptr<const FreeLieBasis> make(int k, int s);

  int k() const { return k_; }
  int s() const { return s_; }
  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  int degree(std::size_t i) const { return static_cast<int>(words_[i].size()); }
  // Index range [begin, end) of the degree-d slice.
  std::size_t degree_begin(int d) const { return offsets_[d - 1]; }
  std::size_t degree_end(int d) const { return offsets_[d]; }
  std::optional<std::size_t> index(const Word& w) const;
  // Standard factorization (left, right). Letters have none.
  std::size_t left(std::size_t i) const { return left_[i]; }
  std::size_t right(std::size_t i) const { return right_[i]; }
  std::string bracketing(std::size_t i) const;

  // Normal form of [P_i, P_j], truncated above degree s.
  SparseVec bracket_basis(std::size_t i, std::size_t j) const;

 private:
  FreeLieBasis(int k, int s);
  const SparseVec& bracket_locked(std::size_t i, std::size_t j) const;

  int k_, s_;
  std::vector<Word> words_;
  std::vector<std::size_t> offsets_;
  std::map<Word, std::size_t> index_;
  std::vector<std::size_t> left_, right_;
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<std::uint64_t, SparseVec> cache_;
};

using BasisPtr = std::shared_ptr<const FreeLieBasis>;

// Element of F_{k,s} in the Lyndon basis.
class LieElement {
 public:
  explicit LieElement(BasisPtr basis) : basis_(std::move(basis)) {}
  static LieElement generator(BasisPtr basis, int letter);
  // P_w for a Lyndon word w of length <= s.
  static LieElement basis_element(BasisPtr basis, const Word& w);

  const BasisPtr& basis() const { return basis_; }
  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(std::size_t i) const;
  void add_term(std::size_t i, const Rational& c);
  // Homogeneous component of degree d.
  LieElement component(int d) const;

  LieElement operator-() const;
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  void check(const LieElement& o) const;
  BasisPtr basis_;
  std::map<std::size_t, Rational> terms_;
};

LieElement bracket(const LieElement& a, const LieElement& b);

// r(X_1, ..., X_k) computed through the structure constants of g.
QVector evaluate(const LieElement& elem, const LieAlgebra& g,
                 const std::vector<QVector>& tuple);
// Values of every basis element at the tuple; column i of the evaluation
// matrix.
std::vector<QVector> evaluate_basis(const FreeLieBasis& basis,
                                    const LieAlgebra& g,
                                    const std::vector<QVector>& tuple);

// log(exp x exp y) via the Dynkin series, exact up to the step of g (<= 6).
QVector bch_product(const QVector& x, const QVector& y, const LieAlgebra& g);

}  // namespace diophex

#endif  // DIOPHEX_FREELIE_HPP_
