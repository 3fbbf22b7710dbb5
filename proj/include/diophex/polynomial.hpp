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

#ifndef DIOPHEX_POLYNOMIAL_HPP_
#define DIOPHEX_POLYNOMIAL_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "diophex/linalg.hpp"

namespace diophex {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed number of parameters.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t n_params) : n_(n_params) {}
  static Polynomial constant(std::size_t n_params, const Rational& c);
  static Polynomial variable(std::size_t n_params, std::size_t i);

  std::size_t n_params() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  void add_term(const Exponents& e, const Rational& c);

  Rational evaluate(const QVector& x) const;
  double evaluate(const std::vector<double>& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_ = 0;
  std::map<Exponents, Rational> terms_;
};

// Polynomial map from parameters to dim_e x dim_v matrices.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(std::size_t n_params, std::size_t dim_v, std::size_t dim_e);

  std::size_t n_params() const { return n_; }
  std::size_t dim_v() const { return v_; }
  std::size_t dim_e() const { return e_; }
  Polynomial& entry(std::size_t row, std::size_t col) { return a_[row * v_ + col]; }
  const Polynomial& entry(std::size_t row, std::size_t col) const {
    return a_[row * v_ + col];
  }

  QMatrix evaluate(const QVector& x) const;
  // Row-major doubles.
  std::vector<double> evaluate(const std::vector<double>& x) const;
  // Throws unless every entry lives in n_params parameters.
  void validate() const;

 private:
  std::size_t n_ = 0, v_ = 0, e_ = 0;
  std::vector<Polynomial> a_;
};

}  // namespace diophex

#endif  // DIOPHEX_POLYNOMIAL_HPP_
