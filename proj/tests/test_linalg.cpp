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

#include <random>

#include "diophex/errors.hpp"
#include "diophex/linalg.hpp"
#include "doctest.h"

using namespace diophex;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                      int h = 3, double density = 0.6) {
  std::uniform_int_distribution<int> val(-h, h);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution keep(density);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m(i, j) = Rational(val(rng), den(rng));
  return m;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> k(0, n);
  return Subspace::span(random_matrix(rng, k(rng), n, 2, 0.4));
}

QVector e(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK_THROWS(Rational::parse("1/-2"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK(Rational(3, 1).str() == "3");
}

TEST_CASE("rank examples") {
  CHECK(rank(QMatrix::identity(3)) == 3);
  CHECK(rank(QMatrix(2, 3)) == 0);
  CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(QMatrix::identity(3)).dim() == 0);
  const Subspace k = kernel(QMatrix{{1, 1}});
  CHECK(k == Subspace::span(std::vector<QVector>{{1, -1}}, 2));
  CHECK(kernel(QMatrix(2, 3)) == Subspace::full(3));
}

TEST_CASE("intersect examples") {
  std::mt19937_64 rng(11);
  const Subspace w = random_subspace(rng, 5);
  CHECK(intersect(w, w) == w);
  CHECK(intersect(Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1}))
            .dim() == 0);
  const Subspace a = Subspace::span(std::vector<QVector>{{1, 1, 0}, {0, 0, 1}}, 3);
  const Subspace b = Subspace::coordinate(3, {1, 2});
  CHECK(intersect(a, b) == Subspace::coordinate(3, {2}));
  CHECK_THROWS_AS(intersect(a, Subspace::full(2)), ValidationError);
}

TEST_CASE("sum examples") {
  std::mt19937_64 rng(12);
  const Subspace w = random_subspace(rng, 5);
  CHECK(sum(w, Subspace(5)) == w);
  CHECK(sum(Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1})) ==
        Subspace::full(2));
  const Subspace p = Subspace::span(std::vector<QVector>{{1, 1}}, 2);
  const Subspace m = Subspace::span(std::vector<QVector>{{1, -1}}, 2);
  CHECK(sum(p, m) == Subspace::full(2));
}

TEST_CASE("flag_dims examples") {
  std::vector<Subspace> flag;
  for (std::size_t i = 0; i <= 3; ++i) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < i; ++j) idx.push_back(j);
    flag.push_back(Subspace::coordinate(3, idx));
  }
  CHECK(flag_dims(Subspace::full(3), flag) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(flag_dims(Subspace(3), flag) == std::vector<std::size_t>{0, 0, 0, 0});
  std::vector<Subspace> f3(flag.begin() + 1, flag.end());
  CHECK(flag_dims(Subspace::coordinate(3, {1, 2}), f3) ==
        std::vector<std::size_t>{0, 1, 2});
  std::vector<Subspace> bad{Subspace::coordinate(3, {1}),
                            Subspace::coordinate(3, {0, 2}), Subspace::full(3)};
  CHECK_THROWS_AS(flag_dims(Subspace::full(3), bad), ValidationError);
}

TEST_CASE("modular law on random pairs") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> nd(1, 8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = nd(rng);
    const Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
    const Subspace s = sum(a, b), i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s == sum(b, a));
    CHECK(intersect(i, i) == i);
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("rank and kernel duality") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> nd(1, 7);
  for (int t = 0; t < 200; ++t) {
    const QMatrix m = random_matrix(rng, nd(rng), nd(rng));
    const Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == m.cols());
    for (std::size_t r = 0; r < k.dim(); ++r) {
      const QVector v = m * k.basis().row(r);
      for (const auto& x : v) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("canonical basis invariants") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Subspace w = random_subspace(rng, 6);
    const auto& b = w.basis();
    for (std::size_t r = 0; r < w.dim(); ++r) {
      const std::size_t p = w.pivots()[r];
      if (r > 0) CHECK(p > w.pivots()[r - 1]);
      CHECK(b(r, p) == 1);
      for (std::size_t q = 0; q < p; ++q) CHECK(b(r, q).is_zero());
      for (std::size_t o = 0; o < w.dim(); ++o)
        if (o != r) CHECK(b(o, p).is_zero());
    }
  }
}

TEST_CASE("large exact rationals") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int t = 0; t < 200; ++t) {
    std::string n = "1", d = "7";
    for (int i = 0; i < 200; ++i) n += char('0' + digit(rng));
    for (int i = 0; i < 150; ++i) d += char('0' + digit(rng));
    const Rational a = Rational::parse(n + "/" + d);
    CHECK(a * (Rational(1) / a) == 1);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("image, kernel_within and trailing pivots") {
  const QMatrix x{{1, 0, 0}, {0, 1, 0}};
  const Subspace k = kernel_within(x, Subspace::full(3));
  CHECK(k == Subspace::coordinate(3, {2}));
  CHECK(image(x, Subspace::full(3)) == Subspace::full(2));
  const Subspace w = Subspace::span(std::vector<QVector>{{1, 1, 0}, {0, 0, 1}}, 3);
  // dim(w ∩ <e1>) = 0, dim(w ∩ <e1,e2>) = 1, then 2
  CHECK(trailing_pivots(w) == std::vector<std::size_t>{1, 2});
  CHECK(w.contains(QVector{2, 2, 5}));
  CHECK_FALSE(w.contains(e(3, 0)));
}
