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

#include "diophex/manifold.hpp"

#include <algorithm>
#include <numeric>

#include "diophex/errors.hpp"

namespace diophex {

std::vector<Subspace> candidates(const Manifold& m) {
  if (m.strategy == "graded") return graded_candidates(m.qv);
  if (m.strategy == "flag") return flag_candidates(m.map.dim_v());
  if (m.strategy == "explicit") {
    if (m.explicit_candidates.empty())
      throw ValidationError("candidates", "explicit strategy without subspaces");
    return m.explicit_candidates;
  }
  throw ValidationError("candidates", "unknown strategy \"" + m.strategy + "\"");
}

namespace {

using PolyVec = std::vector<Polynomial>;

PolyVec poly_bracket(const LieAlgebra& g, const PolyVec& x, const PolyVec& y,
                     std::size_t n_params) {
  PolyVec out(g.dim(), Polynomial(n_params));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (i == j || y[j].is_zero()) continue;
      const auto& t = g.bracket_basis(i, j);
      if (t.empty()) continue;
      const Polynomial xy = x[i] * y[j];
      for (const auto& [k, c] : t) out[k] += c * xy;
    }
  }
  return out;
}

bool is_coordinate(const Subspace& w) {
  for (std::size_t r = 0; r < w.dim(); ++r)
    for (std::size_t j = 0; j < w.ambient_dim(); ++j)
      if (j != w.pivots()[r] && !w.basis()(r, j).is_zero()) return false;
  return true;
}

}  // namespace

Manifold lie_manifold(const LieAlgebra& g, int k, const MetricWeights& metric,
                      RationalSampler& sampler) {
  if (k < 1) throw ValidationError("domain", "need k >= 1");
  for (const auto& f : metric.generating_flag)
    if (!is_coordinate(f))
      throw ValidationError("metric",
                            "metric flag must be spanned by basis vectors");
  const int s = static_cast<int>(g.step());
  const RelativelyFree rf = laws_ideal(g, k, std::max(s, 1), sampler);
  const auto& basis = *rf.basis;
  const std::size_t n_params = static_cast<std::size_t>(k) * g.dim();

  std::vector<PolyVec> val(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.degree(i) == 1) {
      const std::size_t t = basis.word(i)[0] - 1;
      for (std::size_t c = 0; c < g.dim(); ++c)
        val[i].push_back(Polynomial::variable(n_params, t * g.dim() + c));
    } else {
      val[i] = poly_bracket(g, val[basis.left(i)], val[basis.right(i)], n_params);
    }
  }

  std::vector<std::size_t> cols;
  std::vector<Rational> wv;
  Manifold m;
  for (int d = rf.s; d >= 1; --d)
    for (auto j : rf.quotient_words(d)) {
      cols.push_back(j);
      wv.emplace_back(d);
      m.v_labels.push_back(basis.bracketing(j));
    }
  std::vector<std::size_t> rows(g.dim());
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
    return metric.weights[a] > metric.weights[b];
  });
  std::vector<Rational> we;
  for (auto r : rows) {
    we.push_back(metric.weights[r]);
    m.e_labels.push_back(g.names()[r]);
  }
  m.name = g.name() + " k=" + std::to_string(k);
  m.map = PolyMap(n_params, cols.size(), g.dim());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.map.entry(r, c) = val[cols[c]][rows[r]];
  m.qv = QuasiNorm::source(wv);
  m.qe = QuasiNorm::target(we);
  m.strategy = "graded";
  m.eta = growth_exponent(rf);
  if (rf.possible_irrational_laws) m.flags.push_back("possible-irrational-laws");
  return m;
}

Manifold veronese_manifold(int p, int s) {
  if (p < 1 || s < 1) throw ValidationError("domain", "need p, s >= 1");
  const std::size_t n = static_cast<std::size_t>(s) * s;
  Manifold m;
  m.name = "veronese p=" + std::to_string(p) + " M" + std::to_string(s);
  m.map = PolyMap(n, p + 1, n);
  // power[i][j] is the (i,j) entry of M^d as a polynomial.
  std::vector<Polynomial> power(n, Polynomial(n)), gen(n, Polynomial(n));
  for (std::size_t i = 0; i < n; ++i) gen[i] = Polynomial::variable(n, i);
  for (int i = 0; i < s; ++i) power[i * s + i] = Polynomial::constant(n, Rational(1));
  for (int d = 0; d <= p; ++d) {
    for (std::size_t e = 0; e < n; ++e) m.map.entry(e, d) = power[e];
    std::vector<Polynomial> next(n, Polynomial(n));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int l = 0; l < s; ++l)
          next[i * s + j] += power[i * s + l] * gen[l * s + j];
    power = std::move(next);
    m.v_labels.push_back("X^" + std::to_string(d));
  }
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j)
      m.e_labels.push_back("m" + std::to_string(i) + std::to_string(j));
  m.qv = QuasiNorm::unweighted(p + 1, Side::kSource);
  m.qe = QuasiNorm::unweighted(n, Side::kTarget);
  m.strategy = "flag";
  return m;
}

Manifold wedge_manifold(int k) {
  if (k < 2) throw ValidationError("domain", "need k >= 2");
  const std::size_t n = 3 * static_cast<std::size_t>(k);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  Manifold m;
  m.name = "wedge k=" + std::to_string(k);
  m.map = PolyMap(n, pairs.size(), 3);
  auto u = [&](int i, int c) { return Polynomial::variable(n, 3 * i + c); };
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto [i, j] = pairs[c];
    for (int r = 0; r < 3; ++r) {
      const int a = (r + 1) % 3, b = (r + 2) % 3;
      m.map.entry(r, c) = u(i, a) * u(j, b) - u(i, b) * u(j, a);
    }
    m.v_labels.push_back("u" + std::to_string(i + 1) + "^u" + std::to_string(j + 1));
  }
  m.e_labels = {"y1", "y2", "y3"};
  m.qv = QuasiNorm::unweighted(pairs.size(), Side::kSource);
  m.qe = QuasiNorm::unweighted(3, Side::kTarget);
  m.strategy = "explicit";
  // V itself and span{u1^uj}.
  m.explicit_candidates.push_back(Subspace::full(pairs.size()));
  std::vector<std::size_t> first;
  for (std::size_t c = 0; c < pairs.size(); ++c)
    if (pairs[c].first == 0) first.push_back(c);
  m.explicit_candidates.push_back(Subspace::coordinate(pairs.size(), first));
  return m;
}

Manifold curve_manifold(int p) {
  if (p < 1) throw ValidationError("domain", "need p >= 1");
  Manifold m;
  m.name = "curve p=" + std::to_string(p);
  m.map = PolyMap(1, p + 1, 1);
  for (int d = 0; d <= p; ++d) {
    Polynomial t(1);
    t.add_term({d}, Rational(1));
    m.map.entry(0, d) = t;
    m.v_labels.push_back("t^" + std::to_string(d));
  }
  m.e_labels = {"y"};
  m.qv = QuasiNorm::unweighted(p + 1, Side::kSource);
  m.qe = QuasiNorm::unweighted(1, Side::kTarget);
  m.strategy = "flag";
  return m;
}

Manifold builtin_manifold(const std::string& family,
                          const std::vector<std::pair<std::string, int>>& params,
                          const std::string& metric, RationalSampler& sampler) {
  auto get = [&](const std::string& key) {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw ValidationError("parameters", "family " + family + " needs --" + key);
  };
  auto lie = [&](const LieAlgebra& g) {
    const int k = get("k");
    if (metric == "riemannian") return lie_manifold(g, k, riemannian_weights(g), sampler);
    if (metric == "cc") {
      const Subspace v1 = Subspace::span(
          [&] {
            // degree-one layer: complement of [g, g] spanned by basis vectors
            std::vector<QVector> rows;
            const Subspace& d = g.lower_central_series()[1];
            for (std::size_t i = 0; i < g.dim(); ++i)
              if (!d.contains(g.unit(i))) rows.push_back(g.unit(i));
            return rows;
          }(),
          g.dim());
      return lie_manifold(g, k, metric_weights(g, v1), sampler);
    }
    throw ValidationError("metric", "metric must be riemannian or cc");
  };
  if (family == "heisenberg") return lie(heisenberg());
  if (family == "us") return lie(upper_triangular(get("s")));
  if (family == "free") return lie(free_nilpotent(get("d"), get("s")));
  if (family == "veronese") return veronese_manifold(get("p"), get("m"));
  if (family == "wedge") return wedge_manifold(get("k"));
  if (family == "curve") return curve_manifold(get("p"));
  throw ValidationError("family", "unknown family \"" + family + "\"");
}

}  // namespace diophex
