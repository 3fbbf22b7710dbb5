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

#include <map>
#include <random>

#include "diophex/errors.hpp"
#include "diophex/freelie.hpp"
#include "diophex/liealg.hpp"
#include "doctest.h"

using namespace diophex;

namespace {

// Oracle: elements of the free associative algebra.
using NCPoly = std::map<Word, Rational>;

void add(NCPoly& p, const Word& w, const Rational& c) {
  auto& slot = p[w];
  slot += c;
  if (slot.is_zero()) p.erase(w);
}

NCPoly mul(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      add(out, uv, c * d);
    }
  return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) {
  NCPoly out = mul(a, b);
  for (const auto& [w, c] : mul(b, a)) add(out, w, -c);
  return out;
}

NCPoly expand(const FreeLieBasis& b, std::size_t i) {
  if (b.degree(i) == 1) return {{b.word(i), Rational(1)}};
  return commutator(expand(b, b.left(i)), expand(b, b.right(i)));
}

NCPoly expand(const LieElement& e) {
  NCPoly out;
  for (const auto& [i, c] : e.terms())
    for (const auto& [w, d] : expand(*e.basis(), i)) add(out, w, c * d);
  return out;
}

NCPoly truncate(NCPoly p, int s) {
  std::erase_if(p, [&](const auto& kv) {
    return static_cast<int>(kv.first.size()) > s;
  });
  return p;
}

// Peel off the smallest word, which must be Lyndon.
LieElement decompose(NCPoly p, const BasisPtr& basis) {
  LieElement out(basis);
  while (!p.empty()) {
    const auto [w, c] = *p.begin();
    REQUIRE(is_lyndon(w));
    const auto idx = basis->index(w);
    REQUIRE(idx.has_value());
    out.add_term(*idx, c);
    for (const auto& [v, d] : expand(*basis, *idx)) add(p, v, -c * d);
  }
  return out;
}

LieElement random_element(std::mt19937_64& rng, const BasisPtr& b, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, b->size() - 1);
  std::uniform_int_distribution<int> val(-5, 5);
  LieElement e(b);
  for (int t = 0; t < terms; ++t) e.add_term(pick(rng), Rational(val(rng), 1 + t % 3));
  return e;
}

QVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  QVector v(n);
  for (auto& x : v) x = Rational(val(rng), den(rng));
  return v;
}

}  // namespace

TEST_CASE("lyndon basis examples") {
  auto b21 = FreeLieBasis::make(2, 1);
  REQUIRE(b21->size() == 2);
  CHECK(b21->word(0) == Word{1});
  CHECK(b21->word(1) == Word{2});
  auto b22 = FreeLieBasis::make(2, 2);
  CHECK(b22->degree_end(2) - b22->degree_begin(2) == 1);
  CHECK(b22->bracketing(2) == "[x1,x2]");
  auto b33 = FreeLieBasis::make(3, 3);
  CHECK(b33->degree_end(3) - b33->degree_begin(3) == 8);
}

TEST_CASE("witt dimension examples") {
  CHECK(witt_dim(2, 2) == 1);
  CHECK(witt_dim(2, 3) == 2);
  CHECK(witt_dim(3, 3) == 8);
}

TEST_CASE("lyndon counts match Witt and words are Lyndon and ordered") {
  for (int k = 1; k <= 5; ++k) {
    auto b = FreeLieBasis::make(k, 6);
    for (int i = 1; i <= 6; ++i) {
      CHECK(b->degree_end(i) - b->degree_begin(i) == witt_dim(k, i));
      for (std::size_t j = b->degree_begin(i); j < b->degree_end(i); ++j) {
        CHECK(is_lyndon(b->word(j)));
        if (j > b->degree_begin(i)) CHECK(b->word(j - 1) < b->word(j));
      }
    }
  }
}

TEST_CASE("standard factorization is the longest Lyndon suffix") {
  auto b = FreeLieBasis::make(3, 5);
  for (std::size_t i = 0; i < b->size(); ++i) {
    if (b->degree(i) == 1) continue;
    const Word& w = b->word(i);
    const Word& r = b->word(b->right(i));
    for (std::size_t j = 1; j < w.size() - r.size(); ++j)
      CHECK_FALSE(is_lyndon(Word(w.begin() + j, w.end())));
  }
}

TEST_CASE("bracket examples") {
  auto b = FreeLieBasis::make(3, 3);
  auto x1 = LieElement::generator(b, 1), x2 = LieElement::generator(b, 2),
       x3 = LieElement::generator(b, 3);
  CHECK(bracket(x1, x1).is_zero());
  CHECK((bracket(x1, x2) + bracket(x2, x1)).is_zero());
  CHECK((bracket(bracket(x1, x2), x3) + bracket(bracket(x2, x3), x1) +
         bracket(bracket(x3, x1), x2))
            .is_zero());
  // Truncation above the step.
  auto b2 = FreeLieBasis::make(2, 2);
  auto y1 = LieElement::generator(b2, 1), y2 = LieElement::generator(b2, 2);
  CHECK(bracket(y1, bracket(y1, y2)).is_zero());
  auto other = FreeLieBasis::make(2, 3);
  CHECK_THROWS_AS(bracket(y1, LieElement::generator(other, 1)), ValidationError);
}

TEST_CASE("bracket of basis elements agrees with the associative oracle") {
  const int s = 6;
  auto b = FreeLieBasis::make(3, s);
  for (std::size_t i = 0; i < b->size(); ++i)
    for (std::size_t j = 0; j < b->size(); ++j) {
      if (b->degree(i) + b->degree(j) > s) continue;
      LieElement got(b);
      for (const auto& [t, c] : b->bracket_basis(i, j)) got.add_term(t, c);
      const NCPoly want = commutator(expand(*b, i), expand(*b, j));
      CHECK(expand(got) == want);
    }
}

TEST_CASE("bracket is bilinear, antisymmetric and satisfies Jacobi") {
  std::mt19937_64 rng(7);
  auto b = FreeLieBasis::make(3, 5);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_element(rng, b, 4), y = random_element(rng, b, 4),
               z = random_element(rng, b, 4);
    const Rational a(val(rng), 3), c(val(rng), 1);
    CHECK(bracket(a * x + c * y, z) == a * bracket(x, z) + c * bracket(y, z));
    CHECK((bracket(x, y) + bracket(y, x)).is_zero());
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
           bracket(z, bracket(x, y)))
              .is_zero());
    CHECK(expand(bracket(x, y)) == truncate(commutator(expand(x), expand(y)), 5));
    CHECK(decompose(expand(x), b) == x);
  }
}

TEST_CASE("evaluate examples") {
  const LieAlgebra h = heisenberg();
  auto b = FreeLieBasis::make(2, 3);
  const std::vector<QVector> tuple{h.unit(0), h.unit(1)};
  CHECK(evaluate(LieElement::generator(b, 1), h, tuple) == h.unit(0));
  auto x1 = LieElement::generator(b, 1), x2 = LieElement::generator(b, 2);
  CHECK(evaluate(bracket(x1, x2), h, tuple) == h.unit(2));
  CHECK(evaluate(bracket(x1, bracket(x1, x2)), h, tuple) == QVector(3));
  CHECK_THROWS_AS(evaluate(x1, h, {h.unit(0)}), ValidationError);
}

TEST_CASE("evaluate is a Lie homomorphism") {
  std::mt19937_64 rng(8);
  const LieAlgebra g = upper_triangular(3);
  auto b = FreeLieBasis::make(3, 4);
  for (int t = 0; t < 100; ++t) {
    std::vector<QVector> tuple;
    for (int i = 0; i < 3; ++i) tuple.push_back(random_vector(rng, g.dim()));
    const auto x = random_element(rng, b, 3), y = random_element(rng, b, 3);
    CHECK(evaluate(bracket(x, y), g, tuple) ==
          g.bracket(evaluate(x, g, tuple), evaluate(y, g, tuple)));
  }
}

namespace {

// Oracle: 4x4 unipotent matrices for u(3).
QMatrix to_matrix(const LieAlgebra& u3, const QVector& v) {
  QMatrix m(4, 4);
  for (std::size_t t = 0; t < u3.dim(); ++t) {
    const auto& nm = u3.names()[t];
    m(nm[1] - '1', nm[2] - '1') = v[t];
  }
  return m;
}

QVector from_matrix(const LieAlgebra& u3, const QMatrix& m) {
  QVector v(u3.dim());
  for (std::size_t t = 0; t < u3.dim(); ++t) {
    const auto& nm = u3.names()[t];
    v[t] = m(nm[1] - '1', nm[2] - '1');
  }
  return v;
}

QMatrix add(const QMatrix& a, const QMatrix& b, const Rational& c) {
  QMatrix out = a;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) += c * b(i, j);
  return out;
}

QMatrix mexp(const QMatrix& n) {
  const QMatrix n2 = n * n, n3 = n2 * n;
  return add(add(add(QMatrix::identity(4), n, 1), n2, Rational(1, 2)), n3,
             Rational(1, 6));
}

QMatrix mlog(const QMatrix& u) {
  const QMatrix n = add(u, QMatrix::identity(4), -1);
  const QMatrix n2 = n * n, n3 = n2 * n;
  return add(add(n, n2, Rational(-1, 2)), n3, Rational(1, 3));
}

}  // namespace

TEST_CASE("BCH examples") {
  std::mt19937_64 rng(9);
  const LieAlgebra ab = abelian(3);
  const QVector x = random_vector(rng, 3), y = random_vector(rng, 3);
  QVector xy(3);
  for (int i = 0; i < 3; ++i) xy[i] = x[i] + y[i];
  CHECK(bch_product(x, y, ab) == xy);

  const LieAlgebra h = heisenberg();
  const QVector a = random_vector(rng, 3), c = random_vector(rng, 3);
  QVector want(3);
  const QVector br = h.bracket(a, c);
  for (int i = 0; i < 3; ++i) want[i] = a[i] + c[i] + Rational(1, 2) * br[i];
  CHECK(bch_product(a, c, h) == want);
}

TEST_CASE("BCH matches the unipotent matrix oracle and is associative") {
  std::mt19937_64 rng(10);
  const LieAlgebra u3 = upper_triangular(3);
  for (int t = 0; t < 50; ++t) {
    const QVector x = random_vector(rng, 6), y = random_vector(rng, 6),
                  w = random_vector(rng, 6);
    const QVector z = bch_product(x, y, u3);
    CHECK(z == from_matrix(u3, mlog(mexp(to_matrix(u3, x)) * mexp(to_matrix(u3, y)))));
    CHECK(bch_product(z, w, u3) == bch_product(x, bch_product(y, w, u3), u3));
    CHECK(bch_product(x, QVector(6), u3) == x);
  }
}

TEST_CASE("BCH associativity up to step 6") {
  std::mt19937_64 rng(11);
  for (int s = 4; s <= 6; ++s) {
    const LieAlgebra g = s == 6 ? free_nilpotent(2, 6) : upper_triangular(s);
    for (int t = 0; t < 5; ++t) {
      const QVector x = random_vector(rng, g.dim()), y = random_vector(rng, g.dim()),
                    w = random_vector(rng, g.dim());
      CHECK(bch_product(bch_product(x, y, g), w, g) ==
            bch_product(x, bch_product(y, w, g), g));
    }
  }
  CHECK_THROWS_AS(bch_product(QVector(28), QVector(28), upper_triangular(7)),
                  ValidationError);
}
