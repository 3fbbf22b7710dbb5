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
#include "diophex/manifold.hpp"
#include "diophex/pencil.hpp"
#include "doctest.h"

using namespace diophex;

namespace {

Subspace random_subspace(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> kd(0, n);
  std::uniform_int_distribution<int> val(-2, 2);
  std::bernoulli_distribution keep(0.5);
  const std::size_t k = kd(rng);
  QMatrix m(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(rng)) m(i, j) = val(rng);
  return Subspace::span(m);
}

std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(1, 6);
  std::vector<Rational> w;
  for (std::size_t i = 0; i < n; ++i) w.emplace_back(val(rng), 2);
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

// Telescoped forms through explicit flag intersections.
Rational psi_telescoped(const Subspace& w, const QuasiNorm& q) {
  const auto flag = q.flag();  // V_1 .. V_{d+1}
  const std::vector<Subspace> upper(flag.begin() + 1, flag.end());
  const auto dims = flag_dims(w, upper);  // dim(V_{i+1} ∩ W), i = 1..d
  Rational out;
  const auto& a = q.weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational next = i + 1 < a.size() ? a[i + 1] : Rational(0);
    out += (a[i] - next) * Rational(static_cast<long>(dims[i]));
  }
  return out;
}

Rational phi_telescoped(const Subspace& f, const QuasiNorm& q) {
  const auto& a = q.weights();
  const std::size_t e = a.size();
  Rational out;
  for (std::size_t i = 1; i <= e; ++i) {
    std::vector<std::size_t> idx;
    for (std::size_t j = i; j < e; ++j) idx.push_back(j);
    const std::size_t d = intersect(f, Subspace::coordinate(e, idx)).dim();
    const Rational next = i < e ? a[i] : Rational(0);
    out += (a[i - 1] - next) * Rational(static_cast<long>(f.dim() - d));
  }
  return out;
}

RationalSampler seeded(std::uint64_t s = 1) { return RationalSampler(s); }

}  // namespace

TEST_CASE("psi examples") {
  const auto q = QuasiNorm::source({Rational(2), Rational(1), Rational(1)});
  CHECK(psi(Subspace::full(3), q) == 4);
  CHECK(psi(Subspace(3), q) == 0);
  CHECK(psi(Subspace::coordinate(3, {0}), q) == 2);
  CHECK(psi(Subspace::coordinate(3, {2}), q) == 1);
  const auto u = QuasiNorm::unweighted(4, Side::kSource);
  CHECK(psi(Subspace::coordinate(4, {1, 3}), u) == 2);
  CHECK_THROWS_AS(psi(Subspace::full(2), q), ValidationError);
  CHECK_THROWS_AS(phi(Subspace::full(3), q), ValidationError);
  CHECK_THROWS_AS(QuasiNorm::source({Rational(1), Rational(2)}), ValidationError);
}

TEST_CASE("phi examples") {
  const auto q = QuasiNorm::target({Rational(2), Rational(1), Rational(1)});
  CHECK(phi(Subspace::full(3), q) == 4);
  CHECK(phi(Subspace::coordinate(3, {0}), q) == 2);
  CHECK(phi(Subspace::coordinate(3, {2}), q) == 1);
  const auto u = QuasiNorm::unweighted(3, Side::kTarget);
  CHECK(phi(Subspace::coordinate(3, {0, 2}), u) == 2);
}

TEST_CASE("psi and phi agree with their telescoped forms") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 7;
    const auto qs = QuasiNorm::source(random_weights(rng, n));
    const auto qt = QuasiNorm::target(random_weights(rng, n));
    const Subspace w = random_subspace(rng, n);
    CHECK(psi(w, qs) == psi_telescoped(w, qs));
    CHECK(phi(w, qt) == phi_telescoped(w, qt));
    const auto us = QuasiNorm::unweighted(n, Side::kSource);
    const auto ut = QuasiNorm::unweighted(n, Side::kTarget);
    CHECK(psi(w, us) == Rational(static_cast<long>(w.dim())));
    CHECK(phi(w, ut) == Rational(static_cast<long>(w.dim())));
  }
}

TEST_CASE("psi and phi are monotone and have the submodularity signs") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 6;
    const auto qs = QuasiNorm::source(random_weights(rng, n));
    const auto qt = QuasiNorm::target(random_weights(rng, n));
    const Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
    const Subspace s = sum(a, b), i = intersect(a, b);
    CHECK(psi(s, qs) + psi(i, qs) >= psi(a, qs) + psi(b, qs));
    CHECK(phi(s, qt) + phi(i, qt) <= phi(a, qt) + phi(b, qt));
    CHECK(psi(i, qs) <= psi(a, qs));
    CHECK(psi(a, qs) <= psi(s, qs));
    CHECK(phi(i, qt) <= phi(a, qt));
    CHECK(phi(a, qt) <= phi(s, qt));
  }
}

TEST_CASE("psi_M examples") {
  RationalSampler sampler(3);
  const Manifold h = builtin_manifold("heisenberg", {{"k", 3}}, "riemannian", sampler);
  REQUIRE(h.map.dim_v() == 6);
  CHECK(h.qv.weights() ==
        std::vector<Rational>{2, 2, 2, 1, 1, 1});
  CHECK(psi_M(Subspace(6), h.map, h.qv, seeded()) == 0);
  const Subspace deg2 = Subspace::coordinate(6, {0, 1, 2});
  CHECK(psi_M(deg2, h.map, h.qv, seeded()) == 4);
  const PolyMap zero(2, 3, 2);
  const auto q = QuasiNorm::source({Rational(3), Rational(2), Rational(1)});
  const Subspace w = Subspace::coordinate(3, {1, 2});
  CHECK(psi_M(w, zero, q, seeded()) == psi(w, q));
}

TEST_CASE("phi_M examples") {
  const Manifold v = veronese_manifold(3, 2);
  CHECK(phi_M(Subspace(4), v.map, v.qe, seeded()) == 0);
  CHECK(phi_M(Subspace::full(4), v.map, v.qe, seeded()) == 2);
  const Manifold c = curve_manifold(3);
  CHECK(phi_M(Subspace::full(4), c.map, c.qe, seeded()) == 1);
}

TEST_CASE("pencil containment examples") {
  const Manifold v = veronese_manifold(3, 2);
  CHECK(pencil_contains(v.map, {Subspace::full(4), 0, v.qe.total()}, v.qv, v.qe, seeded())
            .contains);
  CHECK(pencil_contains(v.map, {Subspace::full(4), 2, 2}, v.qv, v.qe, seeded()).contains);
  CHECK_FALSE(
      pencil_contains(v.map, {Subspace::full(4), 3, 2}, v.qv, v.qe, seeded()).contains);
  const Manifold w = wedge_manifold(4);
  const Subspace first = w.explicit_candidates[1];
  CHECK(first.dim() == 3);
  CHECK(pencil_contains(w.map, {first, 1, 2}, w.qv, w.qe, seeded()).contains);
  CHECK_FALSE(pencil_contains(w.map, {first, 1, 1}, w.qv, w.qe, seeded()).contains);
  CHECK_THROWS_AS(pencil_contains(w.map, {first, 4, 2}, w.qv, w.qe, seeded()),
                  ValidationError);
}

TEST_CASE("dirichlet bound examples") {
  const auto qv = QuasiNorm::unweighted(2, Side::kSource);
  const auto qe = QuasiNorm::unweighted(2, Side::kTarget);
  CHECK(dirichlet_bound(QMatrix{{1, 2}, {3, 4}}, Subspace::full(2), qv, qe) ==
        ExtRational{Rational(0), false});
  CHECK(dirichlet_bound(QMatrix(2, 2), Subspace::full(2), qv, qe).infinite);
  CHECK(dirichlet_bound(QMatrix(2, 2), Subspace(2), qv, qe) ==
        ExtRational{Rational(0), false});
  for (int n = 1; n <= 5; ++n) {
    QMatrix row(1, n + 1);
    for (int j = 0; j <= n; ++j) row(0, j) = Rational(j * j + 3, j + 1);
    const auto b = dirichlet_bound(row, Subspace::full(n + 1),
                                   QuasiNorm::unweighted(n + 1, Side::kSource),
                                   QuasiNorm::unweighted(1, Side::kTarget));
    CHECK(b == ExtRational{Rational(n), false});
  }
}

TEST_CASE("tau examples") {
  RationalSampler sampler(5);
  const Manifold h = builtin_manifold("heisenberg", {{"k", 3}}, "riemannian", sampler);
  const auto t = tau_candidates(h.map, h.qv, h.qe, candidates(h), seeded());
  CHECK(t.value == ExtRational{Rational(4), false});
  CHECK(t.witness == Subspace::coordinate(6, {0, 1, 2}));
  CHECK(t.a == 4);
  CHECK(t.b == 1);
  CHECK(Rational(4) / Rational(static_cast<long>(*h.eta)) == Rational(4, 9));

  const Manifold v = veronese_manifold(3, 2);
  const auto tv = tau_candidates(v.map, v.qv, v.qe, candidates(v), seeded());
  CHECK(tv.value == ExtRational{Rational(1), false});
  CHECK(tv.witness == Subspace::full(4));
  // (i + 1 - m) / m along the degree flag
  for (const auto& sc : tv.scores) {
    const long i = static_cast<long>(sc.w.dim()) - 1;
    const Rational want = i + 1 > 2 ? Rational(i - 1, 2) : Rational(0);
    CHECK(sc.ratio.value == want);
  }

  // generic full-rank linear family Hom(Q^5, Q^2)
  PolyMap lin(10, 5, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 5; ++j) lin.entry(i, j) = Polynomial::variable(10, i * 5 + j);
  const auto tl = tau_candidates(lin, QuasiNorm::unweighted(5, Side::kSource),
                                 QuasiNorm::unweighted(2, Side::kTarget),
                                 {Subspace::full(5)}, seeded());
  CHECK(tl.value == ExtRational{Rational(3, 2), false});
  CHECK_THROWS_AS(tau_candidates(lin, QuasiNorm::unweighted(5, Side::kSource),
                                 QuasiNorm::unweighted(2, Side::kTarget), {}, seeded()),
                  ValidationError);
}

TEST_CASE("tau rejects two maximizers of the same dimension") {
  const PolyMap zero(1, 2, 1);
  CHECK_THROWS_AS(tau_candidates(zero, QuasiNorm::unweighted(2, Side::kSource),
                                 QuasiNorm::unweighted(1, Side::kTarget),
                                 {Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1})},
                                 seeded()),
                  UniquenessError);
  const auto t = tau_candidates(zero, QuasiNorm::unweighted(2, Side::kSource),
                                QuasiNorm::unweighted(1, Side::kTarget),
                                {Subspace::coordinate(2, {0}), Subspace::full(2)}, seeded());
  CHECK(t.value.infinite);
  CHECK(t.flags == std::vector<std::string>{"infinite"});
  CHECK(t.witness == Subspace::full(2));
}

TEST_CASE("dirichlet bounds never exceed tau and tau is seed independent") {
  RationalSampler sampler(6);
  for (int k = 2; k <= 4; ++k) {
    const Manifold h = builtin_manifold("heisenberg", {{"k", k}}, "riemannian", sampler);
    const auto cands = candidates(h);
    const auto t = tau_candidates(h.map, h.qv, h.qe, cands, seeded(1));
    for (const auto& pt : t.samples)
      for (const auto& w : cands) {
        const auto b = dirichlet_bound(h.map.evaluate(pt), w, h.qv, h.qe);
        CHECK_FALSE(less(t.value, b));
      }
    for (std::uint64_t seed = 2; seed <= 6; ++seed) {
      const auto u = tau_candidates(h.map, h.qv, h.qe, cands, seeded(seed));
      CHECK(u.value == t.value);
      CHECK(u.witness == t.witness);
    }
  }
}

TEST_CASE("submodularity check") {
  RationalSampler sampler(7);
  const Manifold h = builtin_manifold("heisenberg", {{"k", 3}}, "riemannian", sampler);
  std::mt19937_64 rng(23);
  const Subspace w = random_subspace(rng, 6);
  CHECK(submodularity_check(h.map, h.qv, h.qe, w, w, seeded()));
  CHECK(submodularity_check(h.map, h.qv, h.qe, Subspace::full(6), w, seeded()));
  for (int t = 0; t < 100; ++t)
    CHECK(submodularity_check(h.map, h.qv, h.qe, random_subspace(rng, 6),
                              random_subspace(rng, 6), seeded(t)));
}

TEST_CASE("pluecker span examples") {
  PolyMap constant(1, 2, 2);
  constant.entry(0, 0) = Polynomial::constant(1, 3);
  constant.entry(1, 1) = Polynomial::constant(1, Rational(1, 2));
  CHECK(pluecker_span(constant, 1, seeded()) == 1);
  CHECK(pluecker_span(PolyMap(1, 2, 2), 1, seeded()) == 0);
  PolyMap line(1, 2, 1);
  line.entry(0, 0) = Polynomial::constant(1, 1);
  line.entry(0, 1) = Polynomial::variable(1, 0);
  CHECK(pluecker_span(line, 1, seeded()) == 2);
  CHECK(minors(QMatrix{{1, 2}, {3, 4}}) == QVector{1, 2, 3, 4, -2});
}

TEST_CASE("lie manifold orderings") {
  RationalSampler sampler(8);
  const Manifold cc = builtin_manifold("heisenberg", {{"k", 2}}, "cc", sampler);
  CHECK(cc.qe.weights() == std::vector<Rational>{2, 1, 1});
  CHECK(cc.e_labels == std::vector<std::string>{"e3", "e1", "e2"});
  CHECK(cc.v_labels.front() == "[x1,x2]");
  CHECK(*cc.eta == 4);
  CHECK(phi(Subspace::coordinate(3, {0}), cc.qe) == 2);
  const Manifold u = builtin_manifold("us", {{"s", 3}, {"k", 3}}, "cc", sampler);
  CHECK(u.qe.weights() == std::vector<Rational>{3, 2, 2, 1, 1, 1});
  CHECK(*u.eta == 33);
}
