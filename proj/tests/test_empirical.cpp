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

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "diophex/empirical.hpp"
#include "diophex/errors.hpp"
#include "doctest.h"

using namespace diophex;

namespace {

QuasiNorm src(std::size_t n) { return QuasiNorm::unweighted(n, Side::kSource); }
QuasiNorm tgt(std::size_t n) { return QuasiNorm::unweighted(n, Side::kTarget); }

// Scan of the whole cube |v_i| <= ceil(q^{max weight}) filtered by |v| <= q.
double brute_min(const RealMatrix& x, const QuasiNorm& qv, const QuasiNorm& qe, double q) {
  const std::size_t d = x.cols;
  double amax = 0;
  for (const auto& w : qv.weights()) amax = std::max(amax, w.to_double());
  const auto b = static_cast<std::int64_t>(std::ceil(std::pow(q, amax)));
  std::vector<std::int64_t> v(d, -b);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    bool nz = false;
    for (auto t : v) nz = nz || t != 0;
    if (nz && source_qnorm(v, qv) <= q * (1 + 1e-12)) {
      std::vector<double> y(x.rows);
      for (std::size_t i = 0; i < x.rows; ++i) {
        long double s = 0;
        for (std::size_t j = 0; j < d; ++j)
          if (v[j] != 0) s += static_cast<long double>(x(i, j)) * v[j];
        y[i] = static_cast<double>(s);
      }
      best = std::min(best, target_qnorm(y, qe));
    }
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (v[i] < b) {
        ++v[i];
        break;
      }
      v[i] = -b;
    }
    if (i == d) break;
  }
  return best;
}

// min |q theta - p| over convergents p/q of theta with max(|p|, q) <= Q,
// together with the trivial vectors (1, 0) and (0, 1).
double convergent_min(double theta, double Q) {
  double best = std::min(1.0, std::abs(theta));
  long double h0 = 1, h1 = std::floor(theta), k0 = 0, k1 = 1;
  long double r = theta - std::floor(theta);
  for (int it = 0; it < 60; ++it) {
    if (std::abs(h1) <= Q && k1 <= Q)
      best = std::min(best, static_cast<double>(std::fabs(k1 * theta - h1)));
    if (r < 1e-15) break;
    r = 1 / r;
    const long double a = std::floor(r);
    r -= a;
    const long double h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (k1 > Q) break;
  }
  return best;
}

RealMatrix row(std::vector<double> v) { return RealMatrix(1, v.size(), v); }

}  // namespace

TEST_CASE("search box covers exactly the quasi-norm ball") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> num(1, 6);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + t % 4;
    std::vector<Rational> w;
    for (std::size_t i = 0; i < d; ++i) w.emplace_back(num(rng), 3);
    std::sort(w.begin(), w.end(), std::greater<>());
    const auto qv = QuasiNorm::source(w);
    for (double q : {1.0, 2.0, 3.5, 7.0, 20.0}) {
      const auto box = search_box(qv, q);
      double amax = w[0].to_double();
      const auto b = static_cast<std::int64_t>(std::ceil(std::pow(q, amax)));
      if (std::pow(2.0 * b + 1, static_cast<double>(d)) > 2e5) continue;
      std::vector<std::int64_t> v(d, -b);
      while (true) {
        bool in_box = true;
        for (std::size_t i = 0; i < d; ++i) in_box = in_box && std::abs(v[i]) <= box.bounds[i];
        CHECK(in_box == (source_qnorm(v, qv) <= q * (1 + 1e-12)));
        std::size_t i = 0;
        for (; i < d; ++i) {
          if (v[i] < b) {
            ++v[i];
            break;
          }
          v[i] = -b;
        }
        if (i == d) break;
      }
    }
  }
}

TEST_CASE("box and lattice minimizers agree with a full scan") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
      {1, 2}, {1, 3}, {2, 3}, {2, 2}, {3, 2}, {2, 4}, {1, 4}};
  for (int t = 0; t < 40; ++t) {
    const auto [e, d] = shapes[t % shapes.size()];
    RealMatrix x(e, d);
    for (auto& a : x.a) a = u(rng);
    std::vector<Rational> wv(d, Rational(1)), we(e, Rational(1));
    if (t % 2) {
      wv[0] = Rational(3, 2);
      we[0] = Rational(2);
    }
    const auto qv = QuasiNorm::source(wv);
    const auto qe = QuasiNorm::target(we);
    for (double q : {1.0, 3.0, 6.0}) {
      const double want = brute_min(x, qv, qe, q);
      for (auto method : {EnumMethod::kBox, EnumMethod::kLattice}) {
        EnumOptions opt;
        opt.method = method;
        CHECK(min_image_qnorm(x, qv, qe, q, opt) == doctest::Approx(want).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("min_image_qnorm examples") {
  // kernel vector (2, -1) in reach
  CHECK(min_image_qnorm(row({1, 2}), src(2), tgt(1), 3) == 0);
  const RealMatrix id(2, 2, {1, 0, 0, 1});
  for (double q : {1.0, 5.0, 40.0}) CHECK(min_image_qnorm(id, src(2), tgt(2), q) == 1);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  for (double q : {2.0, 10.0, 100.0, 1000.0, 5000.0})
    CHECK(min_image_qnorm(row({1, phi}), src(2), tgt(1), q) ==
          doctest::Approx(convergent_min(phi, q)).epsilon(1e-9));
  const double q = 1e4;
  const double m = min_image_qnorm(row({1, phi}), src(2), tgt(1), q);
  CHECK(m * q > 0.2);
  CHECK(m * q < 2.0);
  CHECK_THROWS_AS(min_image_qnorm(row({1, phi}), src(2), tgt(1), 0.5), ValidationError);
  EnumOptions tight;
  tight.max_points = 100;
  CHECK_THROWS_AS(min_image_qnorm(row({1, phi, 0.3}), src(3), tgt(1), 100, tight),
                  ValidationError);
}

TEST_CASE("lattice minimizer matches the box scan at larger Q") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  EnumOptions box, lat;
  box.method = EnumMethod::kBox;
  lat.method = EnumMethod::kLattice;
  for (int t = 0; t < 12; ++t) {
    const std::size_t e = 1 + t % 3, d = e + 1 + t % 2;
    RealMatrix x(e, d);
    for (auto& a : x.a) a = u(rng);
    std::vector<Rational> wv(d, Rational(1)), we(e, Rational(1));
    if (t % 4 == 1) wv[d - 1] = Rational(1, 2);
    const auto qv = QuasiNorm::source(wv);
    const auto qe = QuasiNorm::target(we);
    const double q = e == 3 ? 12 : 150;
    CHECK(min_image_qnorm(x, qv, qe, q, lat) ==
          doctest::Approx(min_image_qnorm(x, qv, qe, q, box)).epsilon(1e-9));
  }
  // far beyond any box scan
  const double phi = (1 + std::sqrt(5.0)) / 2;
  for (double q : {1e5, 1e6, 1e7})
    CHECK(min_image_qnorm(row({1, phi}), src(2), tgt(1), q, lat) ==
          doctest::Approx(convergent_min(phi, q)).epsilon(1e-4));
}

TEST_CASE("min_image_qnorm is non-increasing in Q and thread independent") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 5; ++t) {
    const RealMatrix x = row({1, u(rng), u(rng)});
    double prev = std::numeric_limits<double>::infinity();
    for (double q : geometric_schedule(2, 1.7, 8)) {
      const double m = min_image_qnorm(x, src(3), tgt(1), q);
      CHECK(m <= prev);
      prev = m;
      EnumOptions par;
      par.threads = 3;
      CHECK(min_image_qnorm(x, src(3), tgt(1), q, par) == m);
    }
  }
}

TEST_CASE("ols recovers an exact line") {
  double s, c, r2;
  ols({0, 1, 2, 3}, {1, 3, 5, 7}, s, c, r2);
  CHECK(s == doctest::Approx(2));
  CHECK(c == doctest::Approx(1));
  CHECK(r2 == doctest::Approx(1));
  ols({0, 1, 2, 3}, {0, 1, 0, 1}, s, c, r2);
  CHECK(r2 >= 0);
  CHECK(r2 <= 1);
}

TEST_CASE("estimate_beta examples") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  const auto sched = geometric_range(16, 1e4, 10);
  double mean = 0;
  for (int t = 0; t < 5; ++t) {
    const auto fit = estimate_beta(row({1, u(rng)}), src(2), tgt(1), sched);
    mean += fit.slope / 5;
    CHECK(fit.r2 >= 0);
    CHECK(fit.points.size() == 10);
  }
  CHECK(mean == doctest::Approx(1).epsilon(0.2));

  mean = 0;
  for (int t = 0; t < 3; ++t) {
    const double tt = u(rng);
    mean += estimate_beta(row({1, tt, tt * tt}), src(3), tgt(1), sched).slope / 3;
  }
  CHECK(mean == doctest::Approx(2).epsilon(0.15));

  mean = 0;
  for (int t = 0; t < 3; ++t) {
    RealMatrix x(2, 3);
    for (auto& a : x.a) a = u(rng);
    mean += estimate_beta(x, src(3), tgt(2), sched).slope / 3;
  }
  CHECK(std::abs(mean - 0.5) <= 0.15);

  const auto rational = estimate_beta(row({1, 0.25}), src(2), tgt(1), geometric_schedule(2, 2, 6));
  CHECK(rational.excluded.size() == 5);
  CHECK(rational.flags == std::vector<std::string>{"exact-zero-minimum", "insufficient-points"});
  CHECK_THROWS_AS(estimate_beta(row({1, 0.3}), src(2), tgt(1), {2, 4, 8}), ValidationError);
  CHECK_THROWS_AS(estimate_beta(row({1, 0.3}), src(2), tgt(1), {2, 4, 8, 8, 16, 32}),
                  ValidationError);
}

TEST_CASE("shortest vector") {
  CHECK(shortest_vector(RealMatrix(2, 2, {1, 0, 0, 1})) == doctest::Approx(1));
  CHECK(shortest_vector(RealMatrix(2, 2, {1, 0.5, 0, std::sqrt(3.0) / 2})) ==
        doctest::Approx(1));
  // a skewed basis of Z^2
  CHECK(shortest_vector(RealMatrix(2, 2, {1, 1000, 0, 1})) == doctest::Approx(1));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 20; ++t) {
    RealMatrix b(3, 3);
    for (auto& a : b.a) a = u(rng);
    double radius = 0;
    const double s = shortest_vector(b, &radius);
    // coefficients of any vector of length <= radius: |u_i| <= |row_i(b^-1)| radius
    const double det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                       b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                       b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    std::int64_t range[3];
    for (int i = 0; i < 3; ++i) {
      double n2 = 0;
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        const double cof = b(r0, c0) * b(r1, c1) - b(r0, c1) * b(r1, c0);
        n2 += cof * cof;
      }
      range[i] = static_cast<std::int64_t>(std::ceil(std::sqrt(n2) / std::abs(det) * radius));
    }
    REQUIRE(range[0] * range[1] * range[2] < 2000000);
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t i = -range[0]; i <= range[0]; ++i)
      for (std::int64_t j = -range[1]; j <= range[1]; ++j)
        for (std::int64_t k = -range[2]; k <= range[2]; ++k) {
          if (!i && !j && !k) continue;
          double n2 = 0;
          for (std::size_t r = 0; r < 3; ++r) {
            const double c = b(r, 0) * i + b(r, 1) * j + b(r, 2) * k;
            n2 += c * c;
          }
          best = std::min(best, std::sqrt(n2));
        }
    CHECK(s == doctest::Approx(best));
    CHECK(radius >= s);
  }
}

TEST_CASE("dani systole examples") {
  const double r2 = std::sqrt(2.0);
  const auto x = row({1, r2});
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(0.25 * i);
  const auto tr = dani_systole(x, src(2), tgt(1), 1.0, grid);
  CHECK(tr.kernel_rows == std::vector<std::size_t>{0});
  CHECK(tr.image_rows == std::vector<std::size_t>{0});
  CHECK(tr.systole[0] == doctest::Approx(shortest_vector(RealMatrix(2, 2, {1, 0, 1, r2}))));
  const double lo = *std::min_element(tr.systole.begin(), tr.systole.end());
  CHECK(lo > 0.25 * tr.systole[0]);
  for (std::size_t i = 0; i < tr.times.size(); ++i) CHECK(tr.radius[i] >= tr.systole[i]);

  // kernel vector (1, -2) of [1, 1/2] contracts like e^{-t}
  const auto rat = dani_systole(row({1, 0.5}), src(2), tgt(1), 1.0, {0, 5, 10, 20});
  CHECK(rat.systole[2] == doctest::Approx(std::exp(-10.0)).epsilon(1e-9));
  CHECK(rat.systole[3] == doctest::Approx(std::exp(-20.0)).epsilon(1e-9));
  CHECK_THROWS_AS(dani_systole(x, src(2), tgt(1), 0, grid), ValidationError);

  std::ostringstream os;
  write_systole_csv(os, rat);
  CHECK(os.str().rfind("t,systole\n0,", 0) == 0);
}

TEST_CASE("dani consistency with slope estimates") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(0.5 * i);
  int agree = 0;
  for (int t = 0; t < 10; ++t) {
    const auto x = row({1, u(rng)});
    const double slope = estimate_beta(x, src(2), tgt(1), geometric_schedule(16, 2, 10)).slope;
    if (slope <= 0.5) continue;
    const auto above = dani_systole(x, src(2), tgt(1), slope, grid);
    const auto below = dani_systole(x, src(2), tgt(1), slope - 0.5, grid);
    const double a = *std::min_element(above.systole.begin(), above.systole.end());
    const double b = *std::min_element(below.systole.begin(), below.systole.end());
    if (a > 0.1 * above.systole[0] && b < 0.1 * below.systole[0]) ++agree;
  }
  CHECK(agree >= 8);
}

TEST_CASE("heisenberg group law") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  auto rnd = [&] { return HeisElement{u(rng), u(rng), u(rng)}; };
  auto close = [](const HeisElement& a, const HeisElement& b) {
    return std::abs(a.x - b.x) < 1e-12 && std::abs(a.y - b.y) < 1e-12 &&
           std::abs(a.z - b.z) < 1e-12;
  };
  for (int t = 0; t < 50; ++t) {
    const auto a = rnd(), b = rnd(), c = rnd();
    CHECK(close(heis_mul(heis_mul(a, b), c), heis_mul(a, heis_mul(b, c))));
    HeisElement p;
    for (int n = 0; n < 5; ++n) {
      CHECK(close(heis_pow(a, n), p));
      p = heis_mul(p, a);
    }
    CHECK(close(heis_mul(a, heis_pow(a, -1)), HeisElement{}));
    const auto direct =
        heis_mul(heis_mul(heis_mul(a, b), heis_pow(a, -1)), heis_pow(b, -1));
    CHECK(close(direct, heis_commutator(a, b)));
  }
  const std::vector<HeisElement> g = {rnd(), rnd()};
  CHECK(close(heis_word(g, {0, 0}, {0}), HeisElement{}));
  CHECK(close(heis_word(g, {1, 1}, {-1}), heis_mul(g[1], g[0])));
}

TEST_CASE("heisenberg word minima") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  auto rnd = [&] { return HeisElement{u(rng), u(rng), u(rng)}; };
  const auto f2 = heisenberg_word_min({rnd(), rnd()}, 2, 60);
  CHECK(std::abs(f2.slope) <= 0.5);
  const auto f3 = heisenberg_word_min({rnd(), rnd(), rnd()}, 3, 60);
  CHECK(std::abs(f3.slope - 4) <= 1.0);
  for (const auto& p : f3.points) CHECK(p.min_norm > 0);
  const auto dep = heisenberg_word_min({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 3, 4);
  CHECK(dep.excluded.size() == dep.q_schedule.size());
  CHECK_THROWS_AS(heisenberg_word_min({rnd()}, 1, 10), ValidationError);
}

TEST_CASE("quadratic level measure") {
  QuadForm x1x2{2, {0, 1, 0, 0}};
  const auto full = quadratic_level_measure(x1x2, 1, 20000, 1);
  CHECK(full.estimate == doctest::Approx(std::numbers::pi));
  CHECK(full.within_bound());

  // [-1,1]^2: measure = integral of 2 min(1, eps/|t|) over [-1, 1]
  const double eps = 0.01;
  double integral = 0;
  const int n = 2000000;
  for (int i = 0; i < n; ++i) {
    const double t = -1 + (i + 0.5) * 2.0 / n;
    integral += 2 * std::min(1.0, eps / std::abs(t)) * 2.0 / n;
  }
  const auto cube = quadratic_level_measure(x1x2, eps, 400000, 2, Region::kCube);
  CHECK(std::abs(cube.estimate - integral) <= 4 * cube.std_error);
  CHECK(cube.within_bound());

  QuadForm twice{2, {0, 2, 0, 0}};
  CHECK(quadratic_level_measure(twice, 2 * eps, 50000, 3).estimate ==
        quadratic_level_measure(x1x2, eps, 50000, 3).estimate);
  CHECK(quadratic_level_measure(x1x2, eps, 50000, 3, Region::kBall, 4).estimate ==
        quadratic_level_measure(x1x2, eps, 50000, 3).estimate);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + t % 5;
    QuadForm q{d, std::vector<double>(d * d, 0.0)};
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = k + 1; l < d; ++l) q.a[k * d + l] = u(rng);
    for (double e : {1e-1, 1e-2, 1e-3}) CHECK(quadratic_level_measure(q, e, 20000, t).within_bound());
  }
  CHECK_THROWS_AS(quadratic_level_measure(QuadForm{2, {0, 0, 0, 0}}, 0.1, 10, 1),
                  ValidationError);
}

TEST_CASE("slope csv") {
  SlopeFit fit;
  fit.points.push_back({16, 0.5, std::log(16.0), std::log(2.0)});
  std::ostringstream os;
  write_slope_csv(os, fit);
  CHECK(os.str() == "Q,min_norm,log_Q,neg_log_min\n16,0.5,2.77258872224,0.69314718056\n");
}
