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

#include "diophex/repthy.hpp"

#include <algorithm>
#include <numeric>

#include "diophex/errors.hpp"
#include "diophex/freelie.hpp"

namespace diophex {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0)
      throw ValidationError("diagram", "Young diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw ValidationError("diagram", "Young diagram rows must not increase");
  }
}

int YoungDiagram::boxes() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::string YoungDiagram::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i)
    out += (i ? "," : "") + std::to_string(rows_[i]);
  return out + ")";
}

std::vector<YoungDiagram> partitions(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

bool dominated_by(const YoungDiagram& mu, const YoungDiagram& lam) {
  if (mu.boxes() != lam.boxes()) return false;
  int a = 0, b = 0;
  const std::size_t n = std::max(mu.length(), lam.length());
  for (std::size_t i = 0; i < n; ++i) {
    a += i < mu.length() ? mu.rows()[i] : 0;
    b += i < lam.length() ? lam.rows()[i] : 0;
    if (a > b) return false;
  }
  return true;
}

mpz_class weyl_dim(const YoungDiagram& lam, unsigned k) {
  if (lam.length() > k) return 0;
  std::vector<long> l(k, 0);
  for (std::size_t i = 0; i < lam.length(); ++i) l[i] = lam.rows()[i];
  mpz_class num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = i + 1; j < k; ++j) {
      num *= l[i] - l[j] + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  return num / den;
}

mpz_class hook_content_dim(const YoungDiagram& lam, unsigned k) {
  const auto& r = lam.rows();
  mpz_class num = 1, den = 1;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (int j = 0; j < r[i]; ++j) {
      const long content = j - static_cast<long>(i);
      long below = 0;
      for (std::size_t t = i + 1; t < r.size() && r[t] > j; ++t) ++below;
      const long hook = (r[i] - j - 1) + below + 1;
      num *= static_cast<long>(k) + content;
      den *= hook;
    }
  if (num <= 0) return 0;
  return num / den;
}

bool dominance_check(const YoungDiagram& lam, const YoungDiagram& mu, unsigned k,
                     unsigned d) {
  if (lam.boxes() != mu.boxes())
    throw ValidationError("precondition", "diagrams must have the same boxes");
  if (!dominated_by(mu, lam))
    throw ValidationError("precondition",
                          "mu is not obtained from lam by moving boxes down");
  if (k < d || d < lam.length() || d < mu.length())
    throw ValidationError("precondition", "need k >= d >= number of rows");
  // d_mu(k) / d_mu(d) >= d_lam(k) / d_lam(d)
  return weyl_dim(mu, k) * weyl_dim(lam, d) >= weyl_dim(lam, k) * weyl_dim(mu, d);
}

std::vector<YoungDiagram> klyachko_diagrams(int s) {
  std::vector<YoungDiagram> out;
  for (auto& p : partitions(s)) {
    const auto& r = p.rows();
    if (r.size() == 1) continue;
    if (r[0] == 1) continue;
    if (r == std::vector<int>{2, 2} || r == std::vector<int>{2, 2, 2}) continue;
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

Rational q(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }
Rational q(const mpz_class& v) { return Rational(v); }

std::string ustr(std::uint64_t v) { return std::to_string(v); }

// Ratio psi_M / phi_M of the tail V_i = sum of degrees >= i, for a source with
// layer dims f and a Riemannian target with graded layers gamma, assuming the
// generic evaluation maps every tail onto the matching term of the lower
// central series.
Rational tail_ratio(const std::vector<Rational>& f,
                    const std::vector<Rational>& gamma, std::size_t i) {
  const std::size_t s = f.size();
  std::vector<Rational> F(s + 1), G(s + 1);
  for (std::size_t j = s; j-- > 0;) {
    F[j] = F[j + 1] + f[j];
    G[j] = G[j + 1] + gamma[j];
  }
  Rational psi;
  for (std::size_t j = 0; j < s; ++j) {
    const std::size_t t = std::max(i, j);
    const Rational kd = F[t] - G[t];
    if (kd.sign() > 0) psi += kd;
  }
  const Rational phi = std::min(F[i], G[i]);
  if (phi.is_zero()) return 0;
  return psi / phi;
}

using Candidates = std::function<std::vector<Rational>(std::uint64_t k)>;

// Smallest k in [k_min, k_min + 64] from which alpha(k) dominates every other
// candidate up to the end of the scan.
std::optional<std::uint64_t> scan_stable(
    std::uint64_t k_min, const std::function<Rational(std::uint64_t)>& alpha,
    const Candidates& others) {
  const std::uint64_t k_max = k_min + 64;
  std::optional<std::uint64_t> from;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    const Rational a = alpha(k);
    bool ok = true;
    for (const auto& r : others(k)) ok = ok && r <= a;
    if (!ok) {
      from.reset();
    } else if (!from) {
      from = k;
    }
  }
  return from;
}

void finish(ExponentValue& v, std::uint64_t k) {
  v.beta = v.alpha / q(v.eta);
  if (!v.stable_from)
    v.flags.push_back("stable-range-not-found");
  else if (k < *v.stable_from)
    v.flags.push_back("below-stable-range");
}

}  // namespace

std::uint64_t free_growth_exponent(std::uint64_t s, std::uint64_t k) {
  mpz_class e = 0;
  for (std::uint64_t i = 1; i <= s; ++i) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), k, i);
    e += mertens(s / i) * p;
  }
  return e.get_ui();
}

ExponentValue step2_beta(std::uint64_t d1, std::uint64_t d2, std::uint64_t k) {
  if (d2 < 1 || d2 > d1 * (d1 - 1) / 2)
    throw ValidationError("precondition", "need 1 <= d2 <= d1(d1-1)/2");
  if (k < d1) throw ValidationError("precondition", "need k >= d1");
  ExponentValue v;
  v.family = "step2";
  v.parameters = {{"d1", ustr(d1)}, {"d2", ustr(d2)}, {"k", ustr(k)}};
  auto alpha = [d2](std::uint64_t kk) {
    return q(kk * (kk - 1)) / q(d2) - Rational(2);
  };
  v.alpha = alpha(k);
  v.eta = k * k;
  v.limit = Rational(1) / q(d2);
  v.stable_from = scan_stable(d1, alpha, [&](std::uint64_t kk) {
    return std::vector<Rational>{
        tail_ratio({q(kk), q(kk * (kk - 1) / 2)}, {q(d1), q(d2)}, 0)};
  });
  finish(v, k);
  return v;
}

ExponentValue heisenberg_beta(std::uint64_t k) {
  if (k < 2) throw ValidationError("precondition", "need k >= 2");
  ExponentValue v = step2_beta(2, 1, k);
  v.family = "heisenberg";
  v.parameters = {{"k", ustr(k)}};
  return v;
}

ExponentValue metabelian_beta(std::uint64_t s, std::uint64_t dim_last,
                              std::uint64_t k,
                              std::vector<std::uint64_t> layer_dims) {
  if (s < 2) throw ValidationError("precondition", "need s >= 2");
  if (dim_last < 1) throw ValidationError("precondition", "need dim_last >= 1");
  if (k < 2) throw ValidationError("precondition", "need k >= 2");
  if (!layer_dims.empty() &&
      (layer_dims.size() != s || layer_dims.back() != dim_last))
    throw ValidationError("precondition",
                          "layer dims must have s entries ending in dim_last");
  ExponentValue v;
  v.family = "metabelian";
  v.parameters = {{"s", ustr(s)}, {"dim_last", ustr(dim_last)}, {"k", ustr(k)}};
  // dim E^{(i-1,1)}(k) = (i-1) C(i+k-2, i)
  auto layer = [](std::uint64_t i, std::uint64_t kk) {
    return q((i - 1) * binomial(i + kk - 2, i).get_ui());
  };
  auto alpha = [&](std::uint64_t kk) {
    return q(s) * layer(s, kk) / q(dim_last) - q(s);
  };
  v.alpha = alpha(k);
  std::uint64_t eta = k;
  for (std::uint64_t i = 2; i <= s; ++i) eta += i * layer(i, k).num().get_ui();
  v.eta = eta;
  v.limit = Rational(1) / q(dim_last);
  if (layer_dims.empty()) {
    v.flags.push_back("stable-from-needs-layer-dims");
  } else {
    v.stable_from = scan_stable(std::max<std::uint64_t>(2, layer_dims[0]), alpha,
                                [&](std::uint64_t kk) {
      std::vector<Rational> f{q(kk)}, g;
      for (std::uint64_t i = 2; i <= s; ++i) f.push_back(layer(i, kk));
      for (auto x : layer_dims) g.push_back(q(x));
      std::vector<Rational> out;
      for (std::size_t i = 0; i < s; ++i) out.push_back(tail_ratio(f, g, i));
      return out;
    });
  }
  v.beta = v.alpha / q(v.eta);
  if (v.stable_from && k < *v.stable_from) v.flags.push_back("below-stable-range");
  if (!layer_dims.empty() && !v.stable_from)
    v.flags.push_back("stable-range-not-found");
  return v;
}

ExponentValue us_beta(std::uint64_t s, std::uint64_t k) {
  if (s < 2) throw ValidationError("precondition", "need s >= 2");
  if (k < s) throw ValidationError("precondition", "need k >= s");
  ExponentValue v;
  v.family = "us";
  v.parameters = {{"s", ustr(s)}, {"k", ustr(k)}};
  auto alpha = [s](std::uint64_t kk) {
    mpz_class num = 0;
    for (std::uint64_t d = 1; d <= s; ++d) {
      if (s % d) continue;
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), kk, s / d);
      num += mobius(d) * p;
    }
    return Rational(num) - q(s);
  };
  v.alpha = alpha(k);
  v.eta = free_growth_exponent(s, k);
  v.limit = Rational(1);
  v.stable_from = scan_stable(s, alpha, [&](std::uint64_t kk) {
    std::vector<Rational> f, g;
    for (std::uint64_t i = 1; i <= s; ++i) {
      f.push_back(q(witt_dim(kk, i)));
      g.push_back(q(s + 1 - i));
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < s; ++i) out.push_back(tail_ratio(f, g, i));
    return out;
  });
  finish(v, k);
  return v;
}

ExponentValue free_beta(std::uint64_t d, std::uint64_t s, std::uint64_t k) {
  if (d < s) throw ValidationError("precondition", "need d >= s");
  if (s < 2) throw ValidationError("precondition", "need s >= 2");
  if (s == 2) {
    ExponentValue v = step2_beta(d, d * (d - 1) / 2, k);
    v.family = "free";
    v.parameters = {{"d", ustr(d)}, {"s", ustr(s)}, {"k", ustr(k)}};
    v.flags.push_back("s2-dispatched-to-step2");
    return v;
  }
  ExponentValue v;
  v.family = "free";
  v.parameters = {{"d", ustr(d)}, {"s", ustr(s)}, {"k", ustr(k)}};
  const Rational cd = q(binomial(d + 1, s));
  auto alpha = [&](std::uint64_t kk) {
    return q(s) / cd * (q(binomial(kk + 1, s)) - cd);
  };
  v.alpha = alpha(k);
  v.eta = free_growth_exponent(s, k);
  mpz_class fact = 1;
  for (std::uint64_t i = 2; i < s; ++i) fact *= static_cast<unsigned long>(i);
  v.limit = Rational(1) / (q(fact) * cd);
  const auto diagrams = klyachko_diagrams(static_cast<int>(s));
  v.stable_from = scan_stable(d, alpha, [&](std::uint64_t kk) {
    std::vector<Rational> f, g, out;
    for (std::uint64_t i = 1; i <= s; ++i) {
      f.push_back(q(witt_dim(kk, i)));
      g.push_back(q(witt_dim(d, i)));
    }
    for (std::size_t i = 0; i < s; ++i) out.push_back(tail_ratio(f, g, i));
    for (const auto& lam : diagrams) {
      const mpz_class dd = weyl_dim(lam, static_cast<unsigned>(d));
      if (dd == 0) continue;
      const mpz_class dk = weyl_dim(lam, static_cast<unsigned>(kk));
      out.push_back(q(s) * (q(dk) - q(dd)) / q(dd));
    }
    return out;
  });
  finish(v, k);
  return v;
}

Rational veronese_beta(std::uint64_t p, std::uint64_t m) {
  if (p < 1 || m < 1) throw ValidationError("precondition", "need p, m >= 1");
  const Rational r = (q(p + 1) - q(m)) / q(m);
  return r.sign() > 0 ? r : Rational(0);
}

}  // namespace diophex
