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

#include "diophex/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "diophex/errors.hpp"

namespace diophex {

Polynomial Polynomial::constant(std::size_t n_params, const Rational& c) {
  Polynomial p(n_params);
  p.add_term(Exponents(n_params, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n_params, std::size_t i) {
  if (i >= n_params) throw ValidationError("polynomial", "parameter index");
  Polynomial p(n_params);
  Exponents e(n_params, 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != n_)
    throw ValidationError("polynomial", "exponent vector length must be n_params");
  for (int x : e)
    if (x < 0) throw ValidationError("polynomial", "negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.try_emplace(e).first;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational Polynomial::evaluate(const QVector& x) const {
  if (x.size() != n_) throw ValidationError("polynomial", "point dimension");
  Rational out;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i]) t *= pow(x[i], static_cast<unsigned>(e[i]));
    out += t;
  }
  return out;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
  double out = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < n_; ++i)
      for (int r = 0; r < e[i]; ++r) t *= x[i];
    out += t;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (n_ != o.n_) throw ValidationError("polynomial", "parameter count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (n_ != o.n_) throw ValidationError("polynomial", "parameter count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw ValidationError("polynomial", "parameter count mismatch");
  Polynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

PolyMap::PolyMap(std::size_t n_params, std::size_t dim_v, std::size_t dim_e)
    : n_(n_params), v_(dim_v), e_(dim_e), a_(dim_v * dim_e, Polynomial(n_params)) {}

QMatrix PolyMap::evaluate(const QVector& x) const {
  QMatrix m(e_, v_);
  for (std::size_t i = 0; i < e_; ++i)
    for (std::size_t j = 0; j < v_; ++j) m(i, j) = entry(i, j).evaluate(x);
  return m;
}

std::vector<double> PolyMap::evaluate(const std::vector<double>& x) const {
  if (x.size() != n_) throw ValidationError("polynomial", "point dimension");
  std::vector<double> m(e_ * v_);
  for (std::size_t i = 0; i < e_ * v_; ++i) m[i] = a_[i].evaluate(x);
  return m;
}

void PolyMap::validate() const {
  for (const auto& p : a_)
    if (p.n_params() != n_)
      throw ValidationError("manifold", "polynomial parameter count mismatch");
}

}  // namespace diophex
