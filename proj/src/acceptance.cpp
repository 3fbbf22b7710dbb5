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

#include "diophex/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>

#include "diophex/empirical.hpp"
#include "diophex/errors.hpp"
#include "diophex/freelie.hpp"
#include "diophex/liealg.hpp"
#include "diophex/manifold.hpp"
#include "diophex/ntheory.hpp"
#include "diophex/pencil.hpp"

namespace diophex {

namespace {

struct Context {
  std::optional<std::vector<SlopeFit>> curve, wedge;
  std::vector<double> curve_t;
};

std::mt19937_64 rng_for(const AcceptanceOptions& opt, int id) {
  std::seed_seq ss{opt.seed, static_cast<std::uint64_t>(id)};
  return std::mt19937_64(ss);
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> kd(0, n);
  std::uniform_int_distribution<int> val(-3, 3);
  const std::size_t k = kd(rng);
  QMatrix m(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = val(rng);
  return Subspace::span(m);
}

// 1. Lyndon counts against the Moebius formula.
void witt(CriterionResult& r) {
  int bad = 0;
  Json rows = Json::array();
  for (int k = 1; k <= 5; ++k) {
    const auto b = FreeLieBasis::make(k, 6);
    for (int i = 1; i <= 6; ++i) {
      const auto count = b->degree_end(i) - b->degree_begin(i);
      std::int64_t m = 0;  // (1/i) sum_{d | i} mu(d) k^{i/d}
      for (int d = 1; d <= i; ++d)
        if (i % d == 0) m += mobius(d) * static_cast<std::int64_t>(std::pow(k, i / d));
      m /= i;
      if (static_cast<std::int64_t>(count) != m || witt_dim(k, i) != count) ++bad;
      rows.push_back(Json{{"k", k}, {"i", i}, {"lyndon", count}, {"moebius", m}});
    }
  }
  r.pass = bad == 0;
  r.detail = bad ? std::to_string(bad) + " mismatches" : "30 of 30 counts agree";
  r.data = rows;
}

// 2. Weyl product against hook content.
void weyl_hook(CriterionResult& r, const AcceptanceOptions& opt) {
  int n_checked = 0, bad = 0;
  std::string first;
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions(n))
      for (unsigned k = 1; k <= 8; ++k) {
        ++n_checked;
        const mpz_class a = opt.weyl(lam, k), b = hook_content_dim(lam, k);
        if (a != b) {
          if (!bad) first = lam.str() + " k=" + std::to_string(k) + ": weyl " + a.get_str() +
                            " hook " + b.get_str();
          ++bad;
        }
      }
  r.pass = bad == 0;
  r.detail = bad ? std::to_string(bad) + " of " + std::to_string(n_checked) +
                       " disagree, first " + first
                 : std::to_string(n_checked) + " diagram/k pairs agree";
  r.data = Json{{"checked", n_checked}, {"mismatches", bad}};
}

// 3. Upper triangular algebras have no laws in their own step.
void us_laws(CriterionResult& r, const AcceptanceOptions& opt) {
  Json rows = Json::array();
  bool ok = true;
  for (auto [s, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {4, 3}}) {
    RationalSampler sampler(opt.seed);
    const auto rf = laws_ideal(upper_triangular(s), k, s, sampler);
    ok = ok && rf.laws.dim() == 0;
    rows.push_back(Json{{"s", s}, {"k", k}, {"laws_dim", rf.laws.dim()}});
  }
  r.pass = ok;
  r.detail = ok ? "laws ideal is 0 in all four cases" : "nonzero laws found";
  r.data = rows;
}

// 4. Exact exponent of the Heisenberg evaluation map.
void heisenberg_loop(CriterionResult& r, const AcceptanceOptions& opt) {
  bool ok = true;
  Json rows = Json::array();
  const std::vector<Rational> want = {Rational(0), Rational(4, 9), Rational(5, 8)};
  for (int k = 2; k <= 4; ++k) {
    RationalSampler sampler(opt.seed);
    const Manifold m = builtin_manifold("heisenberg", {{"k", k}}, "riemannian", sampler);
    const auto t = tau_candidates(m.map, m.qv, m.qe, candidates(m), sampler.split(1));
    const auto closed = heisenberg_beta(k);
    const Rational beta = t.value.value / Rational(static_cast<long>(*m.eta));
    const bool hit = !t.value.infinite && t.value.value == k * k - k - 2 &&
                     t.value.value == closed.alpha && beta == closed.beta &&
                     beta == want[k - 2];
    ok = ok && hit;
    rows.push_back(Json{{"k", k}, {"alpha", t.value.str()}, {"eta", *m.eta},
                        {"beta", beta.str()}, {"closed_form", closed.beta.str()}});
  }
  r.pass = ok;
  r.detail = ok ? "alpha 0, 4, 10 and beta 0, 4/9, 5/8" : "mismatch against closed form";
  r.data = rows;
}

// 5. Growth exponent of u_s against the Mertens expression.
void us_growth(CriterionResult& r, const AcceptanceOptions& opt) {
  bool ok = true;
  Json rows = Json::array();
  for (int s = 1; s <= 4; ++s)
    for (int k = 1; k <= 5; ++k) {
      RationalSampler sampler(opt.seed);
      const auto eta = growth_exponent(laws_ideal(upper_triangular(s), k, s, sampler));
      const auto want = free_growth_exponent(s, k);
      ok = ok && eta == want;
      rows.push_back(Json{{"s", s}, {"k", k}, {"eta", eta}, {"mertens", want}});
    }
  const auto b = us_beta(3, 3);
  ok = ok && b.beta == Rational(7, 11);
  r.pass = ok;
  r.detail = std::string(ok ? "20 growth exponents agree" : "mismatch") + ", us_beta(3,3) = " +
             b.beta.str();
  r.data = Json{{"growth", rows}, {"us_beta_3_3", b.beta.str()}};
}

// 6. free_beta(3,3,k) against the explicit Mertens/binomial expression.
void free_formula(CriterionResult& r) {
  const unsigned long d = 3, s = 3;
  bool ok = true;
  Json rows = Json::array();
  for (unsigned long k = d; k <= 12; ++k) {
    std::int64_t eta = 0;
    for (unsigned long i = 1; i <= s; ++i)
      eta += mertens(s / i) * static_cast<std::int64_t>(std::pow(k, i));
    const Rational want = Rational(static_cast<long>(s)) / Rational(binomial(d + 1, s)) *
                          (Rational(binomial(k + 1, s)) - Rational(binomial(d + 1, s))) /
                          Rational(static_cast<long>(eta));
    const auto got = free_beta(d, s, k);
    ok = ok && got.beta == want;
    rows.push_back(Json{{"k", k}, {"beta", got.beta.str()}, {"expression", want.str()}});
  }
  const auto lim = free_beta(d, s, 12).limit;
  const bool lim_ok = lim && *lim == Rational(1, 8);
  r.pass = ok && lim_ok;
  r.detail = std::string(ok ? "k = 3..12 agree" : "mismatch") + ", limit " +
             (lim ? lim->str() : "missing");
  r.data = Json{{"values", rows}, {"limit", lim ? lim->str() : ""}};
}

// 7. Veronese exponents.
void veronese(CriterionResult& r, const AcceptanceOptions& opt) {
  bool ok = true;
  Json rows = Json::array();
  auto tau = [&](int p, int m) {
    const Manifold v = veronese_manifold(p, m);
    return tau_candidates(v.map, v.qv, v.qe, candidates(v), RationalSampler(opt.seed));
  };
  const auto main = tau(3, 2);
  ok = ok && main.value == ExtRational{Rational(1), false} &&
       main.witness == Subspace::full(4) && veronese_beta(3, 2) == 1;
  rows.push_back(Json{{"p", 3}, {"m", 2}, {"tau", main.value.str()}});
  for (int p = 1; p <= 3; ++p)
    for (int m = p + 1; m <= p + 2 && m <= 4; ++m) {
      const auto t = tau(p, m);
      ok = ok && t.value == ExtRational{Rational(0), false} && veronese_beta(p, m) == 0;
      rows.push_back(Json{{"p", p}, {"m", m}, {"tau", t.value.str()}});
    }
  r.pass = ok;
  r.detail = ok ? "tau = 1 for p = 3 on M_2, 0 for every m >= p + 1" : "mismatch";
  r.data = rows;
}

// 8. Submodularity on random pairs.
void submodular(CriterionResult& r, const AcceptanceOptions& opt) {
  auto rng = rng_for(opt, 8);
  int bad = 0, checked = 0;
  RationalSampler sampler(opt.seed);
  const Manifold h = builtin_manifold("heisenberg", {{"k", 3}}, "riemannian", sampler);
  const Manifold v = veronese_manifold(3, 2);
  for (const Manifold* m : {&h, &v})
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = m->map.dim_v();
      const Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
      ++checked;
      if (!submodularity_check(m->map, m->qv, m->qe, a, b, sampler.split(t))) ++bad;
    }
  r.pass = bad == 0;
  r.detail = std::to_string(bad) + " counterexamples in " + std::to_string(checked) + " pairs";
  r.data = Json{{"pairs", checked}, {"counterexamples", bad}};
}

const std::vector<SlopeFit>& curve_fits(Context& ctx, const AcceptanceOptions& opt) {
  if (!ctx.curve) {
    auto rng = rng_for(opt, 9);
    std::uniform_real_distribution<double> u(0, 1);
    const Manifold c = curve_manifold(2);
    EnumOptions eo;
    eo.threads = opt.threads;
    std::vector<SlopeFit> fits;
    for (int i = 0; i < 10; ++i) {
      ctx.curve_t.push_back(u(rng));
      const RealMatrix x(1, 3, c.map.evaluate(std::vector<double>{ctx.curve_t.back()}));
      fits.push_back(estimate_beta(x, c.qv, c.qe, geometric_range(16, 1e4, 10), eo));
    }
    ctx.curve = fits;
  }
  return *ctx.curve;
}

const std::vector<SlopeFit>& wedge_fits(Context& ctx, const AcceptanceOptions& opt) {
  if (!ctx.wedge) {
    auto rng = rng_for(opt, 10);
    std::uniform_real_distribution<double> u(-1, 1);
    const Manifold w = wedge_manifold(4);
    EnumOptions eo;
    eo.threads = opt.threads;
    std::vector<SlopeFit> fits;
    for (int i = 0; i < 5; ++i) {
      std::vector<double> p(w.map.n_params());
      for (auto& x : p) x = u(rng);
      const RealMatrix x(w.map.dim_e(), w.map.dim_v(), w.map.evaluate(p));
      fits.push_back(estimate_beta(x, w.qv, w.qe, geometric_range(16, 1e7, 16), eo));
    }
    ctx.wedge = fits;
  }
  return *ctx.wedge;
}

Json slopes_json(const std::vector<SlopeFit>& fits) {
  Json a = Json::array();
  for (const auto& f : fits) a.push_back(Json{{"slope", real_json(f.slope)}, {"r2", real_json(f.r2)}});
  return a;
}

// 9. Slope of the (1, t, t^2) curve.
void curve_slope(CriterionResult& r, Context& ctx, const AcceptanceOptions& opt) {
  const auto& fits = curve_fits(ctx, opt);
  double mean = 0;
  int good = 0;
  for (const auto& f : fits) {
    mean += f.slope / static_cast<double>(fits.size());
    if (f.r2 >= 0.9) ++good;
  }
  r.pass = mean >= 1.7 && mean <= 2.3 && good >= 8;
  char buf[128];
  std::snprintf(buf, sizeof buf, "mean slope %.3f, %d/10 fits with r2 >= 0.9", mean, good);
  r.detail = buf;
  r.data = Json{{"mean", real_json(mean)}, {"fits", slopes_json(fits)}};
}

// 10. Slope for the wedge map, extremal value 1.
void wedge_slope(CriterionResult& r, Context& ctx, const AcceptanceOptions& opt) {
  const auto& fits = wedge_fits(ctx, opt);
  int inside = 0;
  std::string s;
  for (const auto& f : fits) {
    if (std::abs(f.slope - 1) <= 0.25) ++inside;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", f.slope);
    s += (s.empty() ? "" : " ") + std::string(buf);
  }
  r.pass = inside == static_cast<int>(fits.size());
  r.detail = std::to_string(inside) + "/5 slopes within 1 +- 0.25: " + s;
  r.data = Json{{"fits", slopes_json(fits)}};
}

// 11. Systole traces on either side of the exponent 1.
void dani(CriterionResult& r, const AcceptanceOptions& opt) {
  auto rng = rng_for(opt, 11);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(0.5 * i);
  const auto qv = QuasiNorm::unweighted(2, Side::kSource);
  const auto qe = QuasiNorm::unweighted(1, Side::kTarget);
  int agree = 0;
  Json rows = Json::array();
  for (int i = 0; i < 10; ++i) {
    const double theta = u(rng);
    const RealMatrix x(1, 2, {1, theta});
    const auto hi = dani_systole(x, qv, qe, 1.3, grid);
    const auto lo = dani_systole(x, qv, qe, 0.7, grid);
    const double hmin = *std::min_element(hi.systole.begin(), hi.systole.end()) / hi.systole[0];
    const double lmin = *std::min_element(lo.systole.begin(), lo.systole.end()) / lo.systole[0];
    const bool ok = hmin > 0.1 && lmin < 0.1;
    agree += ok;
    rows.push_back(Json{{"theta", real_json(theta)},
                        {"min_ratio_beta_1.3", real_json(hmin)},
                        {"min_ratio_beta_0.7", real_json(lmin)}});
  }
  r.pass = agree >= 8;
  r.detail = std::to_string(agree) + "/10 agree (fraction 0.1 of the t = 0 systole)";
  r.data = rows;
}

// Exact Dirichlet value of the best candidate at a generic rational point.
Rational best_dirichlet(const Manifold& m, const AcceptanceOptions& opt) {
  RationalSampler sampler(opt.seed);
  const QMatrix x = m.map.evaluate(sampler.vector(m.map.n_params()));
  ExtRational best{Rational(0), false};
  for (const auto& w : candidates(m)) {
    const auto b = dirichlet_bound(x, w, m.qv, m.qe);
    if (less(best, b)) best = b;
  }
  if (best.infinite) throw std::runtime_error("infinite Dirichlet bound");
  return best.value;
}

// 12. Every slope of 9 and 10 above its Dirichlet floor minus 0.15.
void dirichlet_floor(CriterionResult& r, Context& ctx, const AcceptanceOptions& opt) {
  const Rational bc = best_dirichlet(curve_manifold(2), opt);
  const Rational bw = best_dirichlet(wedge_manifold(4), opt);
  int below = 0, total = 0;
  double worst = 1e300;
  for (const auto& [fits, b] : {std::pair{&curve_fits(ctx, opt), bc}, std::pair{&wedge_fits(ctx, opt), bw}})
    for (const auto& f : *fits) {
      ++total;
      const double margin = f.slope - (b.to_double() - 0.15);
      worst = std::min(worst, margin);
      if (margin <= 0) ++below;
    }
  // Same curve points pushed to Q = 1e8: shows how much of a shortfall is
  // finite-Q bias. Not part of the verdict.
  const Manifold c = curve_manifold(2);
  Json far = Json::array();
  int far_below = 0;
  for (double t : ctx.curve_t) {
    const RealMatrix x(1, 3, c.map.evaluate(std::vector<double>{t}));
    const double sl = estimate_beta(x, c.qv, c.qe, geometric_range(16, 1e8, 16)).slope;
    far_below += sl <= bc.to_double() - 0.15;
    far.push_back(real_json(sl));
  }
  r.pass = below == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "floors %s (curve) and %s (wedge); %d/%d slopes below, worst margin %.3f",
                bc.str().c_str(), bw.str().c_str(), below, total, worst);
  r.detail = buf;
  r.detail += "; curve at Q = 1e8: " + std::to_string(far_below) + "/10 below";
  r.data = Json{{"curve_floor", bc.str()}, {"wedge_floor", bw.str()}, {"below", below},
                {"worst_margin", real_json(worst)},
                {"curve_slopes_qmax_1e8", far}};
}

// 13. Level set measure of square-free quadratic forms.
void remez(CriterionResult& r, const AcceptanceOptions& opt, int id = 13) {
  auto rng = rng_for(opt, id);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<std::size_t> dd(2, 6);
  int bad = 0, total = 0;
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = dd(rng);
    QuadForm q{d, std::vector<double>(d * d, 0.0)};
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = k + 1; l < d; ++l) q.a[k * d + l] = u(rng);
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      const auto m = quadratic_level_measure(q, eps, 100000, opt.seed * 1000 + t, Region::kBall,
                                             opt.threads);
      ++total;
      worst = std::max(worst, m.estimate / m.bound);
      if (!m.within_bound()) ++bad;
    }
  }
  r.pass = bad == 0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d/%d above bound + 3 sigma, largest estimate/bound %.3f", bad,
                total, worst);
  r.detail = buf;
  r.data = Json{{"violations", bad}, {"cases", total}, {"max_ratio", real_json(worst)}};
}

// Exact outputs that must not depend on the sampling seed.
std::string exact_digest(std::uint64_t seed) {
  std::ostringstream os;
  RationalSampler sampler(seed);
  for (auto [s, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    const auto rf = laws_ideal(upper_triangular(s), k, s, sampler);
    os << "laws" << s << k << ':' << rf.laws.dim() << ';';
  }
  const auto rf = laws_ideal(filiform(5), 3, 4, sampler);
  for (auto d : rf.quotient_dims) os << d << ',';
  for (int k = 2; k <= 4; ++k) {
    const Manifold m = builtin_manifold("heisenberg", {{"k", k}}, "riemannian", sampler);
    const auto t = tau_candidates(m.map, m.qv, m.qe, candidates(m), sampler.split(k));
    os << "h" << k << ':' << t.value.str() << '/' << *m.eta;
    for (const auto& x : t.witness.basis().entries()) os << ' ' << x;
    os << ';';
  }
  const Manifold v = veronese_manifold(3, 2);
  const auto t = tau_candidates(v.map, v.qv, v.qe, candidates(v), sampler.split(99));
  os << "v:" << t.value.str() << ';' << us_beta(3, 3).beta << ';' << free_beta(3, 3, 5).beta;
  return os.str();
}

// 14. Seed independence of exact outputs; empirical outputs inside bands.
void determinism(CriterionResult& r, const AcceptanceOptions& opt) {
  const std::string ref = exact_digest(opt.seed);
  int exact_same = 0, bands = 0;
  Json rows = Json::array();
  for (std::uint64_t i = 0; i < 5; ++i) {
    AcceptanceOptions o = opt;
    o.seed = opt.seed + 7919 * (i + 1);
    if (exact_digest(o.seed) == ref) ++exact_same;
    // reduced empirical suite
    auto rng = rng_for(o, 9);
    std::uniform_real_distribution<double> u(0, 1);
    const Manifold c = curve_manifold(2);
    double mean = 0;
    for (int j = 0; j < 3; ++j) {
      const RealMatrix x(1, 3, c.map.evaluate(std::vector<double>{u(rng)}));
      mean += estimate_beta(x, c.qv, c.qe, geometric_range(16, 2000, 8)).slope / 3;
    }
    CriterionResult d, q;
    dani(d, o);
    remez(q, o);
    const bool in = mean >= 1.7 && mean <= 2.3 && d.pass && q.pass;
    bands += in;
    rows.push_back(Json{{"seed", o.seed}, {"curve_mean_slope", real_json(mean)},
                        {"dani", d.detail}, {"remez", q.detail}, {"in_bands", in}});
  }
  // bit-identical rerun, serial against parallel enumeration
  const Manifold c = curve_manifold(2);
  const RealMatrix x(1, 3, c.map.evaluate(std::vector<double>{0.318309886}));
  EnumOptions ser, par;
  ser.method = par.method = EnumMethod::kBox;
  par.threads = std::max(2u, opt.threads);
  const auto f1 = estimate_beta(x, c.qv, c.qe, geometric_range(16, 2000, 8), ser);
  const auto f2 = estimate_beta(x, c.qv, c.qe, geometric_range(16, 2000, 8), par);
  const bool bits = f1.slope == f2.slope && f1.intercept == f2.intercept && f1.r2 == f2.r2;
  r.pass = exact_same == 5 && bands == 5 && bits;
  r.detail = std::to_string(exact_same) + "/5 seeds give identical exact outputs, " +
             std::to_string(bands) + "/5 empirical runs inside bands, parallel rerun " +
             (bits ? "bit-identical" : "differs");
  r.data = Json{{"seeds", rows}, {"bit_identical", bits}};
}

struct Spec {
  const char* name;
  double budget;
};

const Spec kSpecs[kCriteria] = {
    {"witt-oracle", 1},         {"weyl-vs-hook", 5},       {"us-laws-vanish", 30},
    {"heisenberg-closed-loop", 10}, {"us-growth-cross-check", 30}, {"free-nilpotent-formula", 0},
    {"veronese", 10},           {"submodularity", 0},      {"curve-slope", 120},
    {"wedge-extremality", 120}, {"dani-correspondence", 60}, {"dirichlet-floor", 0},
    {"remez-bound", 60},        {"determinism", 0}};

CriterionResult run_one(int id, Context& ctx, const AcceptanceOptions& opt) {
  if (id < 1 || id > kCriteria) throw ValidationError("range", "criteria are numbered 1..14");
  CriterionResult r;
  r.id = id;
  r.name = kSpecs[id - 1].name;
  r.budget = kSpecs[id - 1].budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: witt(r); break;
      case 2: weyl_hook(r, opt); break;
      case 3: us_laws(r, opt); break;
      case 4: heisenberg_loop(r, opt); break;
      case 5: us_growth(r, opt); break;
      case 6: free_formula(r); break;
      case 7: veronese(r, opt); break;
      case 8: submodular(r, opt); break;
      case 9: curve_slope(r, ctx, opt); break;
      case 10: wedge_slope(r, ctx, opt); break;
      case 11: dani(r, opt); break;
      case 12: dirichlet_floor(r, ctx, opt); break;
      case 13: remez(r, opt); break;
      case 14: determinism(r, opt); break;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  // criteria 9 and 10 prepare fits that 12 reuses; the budget covers own work
  if (r.budget > 0 && r.seconds > r.budget) {
    r.pass = false;
    r.detail += " [over the " + std::to_string(static_cast<int>(r.budget)) + " s budget]";
  }
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  Context ctx;
  return run_one(id, ctx, opt);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  Context ctx;
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end())
      continue;
    out.push_back(run_one(id, ctx, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "criterion %2d %s %-24s %8.2f s  ", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds);
  return buf + r.detail;
}

Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id},
              {"name", r.name},
              {"pass", r.pass},
              {"seconds", real_json(r.seconds)},
              {"budget_seconds", r.budget > 0 ? Json(r.budget) : Json(nullptr)},
              {"detail", r.detail},
              {"data", r.data}};
}

}  // namespace diophex
