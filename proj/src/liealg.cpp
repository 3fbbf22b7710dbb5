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

#include "diophex/liealg.hpp"

#include <map>
#include <regex>

#include "diophex/errors.hpp"

namespace diophex {

LieAlgebra heisenberg() {
  return LieAlgebra("heisenberg", {"e1", "e2", "e3"}, {{0, 1, 2, Rational(1)}});
}

LieAlgebra upper_triangular(int s) {
  if (s < 1) throw ValidationError("domain", "u(s) needs s >= 1");
  const int n = s + 1;
  std::vector<std::string> names;
  std::map<std::pair<int, int>, std::size_t> idx;
  for (int gap = 1; gap < n; ++gap)
    for (int i = 1; i + gap <= n; ++i) {
      idx[{i, i + gap}] = names.size();
      names.push_back(n < 10 ? "E" + std::to_string(i) + std::to_string(i + gap)
                             : "E" + std::to_string(i) + "_" +
                                   std::to_string(i + gap));
    }
  std::vector<StructureConstant> sc;
  for (const auto& [a, ia] : idx)
    for (const auto& [b, ib] : idx) {
      if (ia >= ib) continue;
      // [E_ij, E_kl] = d_jk E_il - d_li E_kj
      if (a.second == b.first)
        sc.push_back({ia, ib, idx.at({a.first, b.second}), Rational(1)});
      if (b.second == a.first)
        sc.push_back({ia, ib, idx.at({b.first, a.second}), Rational(-1)});
    }
  return LieAlgebra("u(" + std::to_string(s) + ")", names, sc);
}

LieAlgebra free_nilpotent(int d, int s) {
  const auto basis = FreeLieBasis::make(d, s);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis->size(); ++i)
    names.push_back(basis->bracketing(i));
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < basis->size(); ++i)
    for (std::size_t j = i + 1; j < basis->size(); ++j)
      for (const auto& [t, c] : basis->bracket_basis(i, j))
        sc.push_back({i, j, t, c});
  return LieAlgebra("free(" + std::to_string(d) + "," + std::to_string(s) + ")",
                    names, sc);
}

LieAlgebra abelian(int d) {
  if (d < 1) throw ValidationError("domain", "abelian(d) needs d >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebra("abelian(" + std::to_string(d) + ")", names, {});
}

LieAlgebra filiform(int n) {
  if (n < 3) throw ValidationError("domain", "filiform(n) needs n >= 3");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<StructureConstant> sc;
  for (int i = 2; i < n; ++i)
    sc.push_back({0, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i),
                  Rational(1)});
  return LieAlgebra("filiform(" + std::to_string(n) + ")", names, sc);
}

LieAlgebra builtin_algebra(const std::string& spec) {
  static const std::regex one(R"((\w+)\((\d+)\))");
  static const std::regex two(R"((\w+)\((\d+),\s*(\d+)\))");
  std::smatch m;
  if (spec == "heisenberg") return heisenberg();
  if (std::regex_match(spec, m, one)) {
    const int a = std::stoi(m[2]);
    if (m[1] == "u") return upper_triangular(a);
    if (m[1] == "abelian") return abelian(a);
    if (m[1] == "filiform") return filiform(a);
  }
  if (std::regex_match(spec, m, two) && m[1] == "free")
    return free_nilpotent(std::stoi(m[2]), std::stoi(m[3]));
  throw ValidationError("algebra", "unknown built-in algebra \"" + spec + "\"");
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  return g.lower_central_series();
}

QMatrix eval_matrix(const LieAlgebra& g, const FreeLieBasis& basis,
                    const std::vector<QVector>& tuple) {
  const auto vals = evaluate_basis(basis, g, tuple);
  QMatrix m(g.dim(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < g.dim(); ++i) m(i, j) = vals[j][i];
  return m;
}

namespace {

// Rows of w supported in [b, e), restricted to those columns.
Subspace restrict_rows(const Subspace& w, std::size_t b, std::size_t e) {
  std::vector<QVector> rows;
  for (std::size_t r = 0; r < w.dim(); ++r) {
    const std::size_t p = w.pivots()[r];
    if (p < b || p >= e) continue;
    QVector v(e - b);
    for (std::size_t j = b; j < e; ++j) v[j - b] = w.basis()(r, j);
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, e - b);
}

}  // namespace

Subspace RelativelyFree::laws_in_degree(int i) const {
  return restrict_rows(laws, basis->degree_begin(i), basis->degree_end(i));
}

std::vector<std::size_t> RelativelyFree::quotient_words(int i) const {
  const Subspace li = laws_in_degree(i);
  const std::size_t b = basis->degree_begin(i), e = basis->degree_end(i);
  std::vector<bool> piv(e - b, false);
  for (auto p : li.pivots()) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < e - b; ++j)
    if (!piv[j]) out.push_back(b + j);
  return out;
}

RelativelyFree laws_ideal(const LieAlgebra& g, int k, int s,
                          RationalSampler& sampler) {
  RelativelyFree rf;
  rf.k = k;
  rf.s = s;
  rf.basis = FreeLieBasis::make(k, s);
  const auto& basis = *rf.basis;
  std::vector<Subspace> slice;
  for (int i = 1; i <= s; ++i)
    slice.push_back(Subspace::full(basis.degree_end(i) - basis.degree_begin(i)));
  int unchanged = 0;
  while (unchanged < 3) {
    std::vector<QVector> tuple;
    for (int t = 0; t < k; ++t) tuple.push_back(sampler.vector(g.dim()));
    const auto vals = evaluate_basis(basis, g, tuple);
    bool changed = false;
    for (int i = 1; i <= s; ++i) {
      if (slice[i - 1].dim() == 0) continue;
      const std::size_t b = basis.degree_begin(i), e = basis.degree_end(i);
      QMatrix m(g.dim(), e - b);
      for (std::size_t j = b; j < e; ++j)
        for (std::size_t r = 0; r < g.dim(); ++r) m(r, j - b) = vals[j][r];
      Subspace next = kernel_within(m, slice[i - 1]);
      if (next.dim() != slice[i - 1].dim()) {
        changed = true;
        slice[i - 1] = std::move(next);
      }
    }
    rf.sample_log.push_back(std::move(tuple));
    unchanged = changed ? 0 : unchanged + 1;
  }
  std::vector<QVector> rows;
  const mpz_class limit("1000000");
  for (int i = 1; i <= s; ++i) {
    const std::size_t b = basis.degree_begin(i);
    const Subspace& li = slice[i - 1];
    rf.quotient_dims.push_back((basis.degree_end(i) - b) - li.dim());
    for (std::size_t r = 0; r < li.dim(); ++r) {
      QVector v(basis.size());
      for (std::size_t j = 0; j < li.ambient_dim(); ++j) {
        v[b + j] = li.basis()(r, j);
        if (v[b + j].height() > limit) rf.possible_irrational_laws = true;
      }
      rows.push_back(std::move(v));
    }
  }
  rf.laws = Subspace::span(rows, basis.size());
  return rf;
}

std::uint64_t growth_exponent(const RelativelyFree& rf) {
  std::uint64_t eta = 0;
  for (std::size_t i = 0; i < rf.quotient_dims.size(); ++i)
    eta += (i + 1) * rf.quotient_dims[i];
  return eta;
}

MetricWeights metric_weights(const LieAlgebra& g, const Subspace& v1) {
  if (v1.ambient_dim() != g.dim())
    throw ValidationError("shape", "v1 ambient dimension");
  MetricWeights mw;
  mw.generating_flag.push_back(v1);
  while (mw.generating_flag.back().dim() < g.dim()) {
    const Subspace& cur = mw.generating_flag.back();
    Subspace next = sum(cur, g.bracket(v1, cur));
    if (next == cur)
      throw ValidationError("metric", "v1 does not generate the Lie algebra");
    mw.generating_flag.push_back(std::move(next));
  }
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const QVector e = g.unit(j);
    for (std::size_t i = 0; i < mw.generating_flag.size(); ++i)
      if (mw.generating_flag[i].contains(e)) {
        mw.weights.push_back(Rational(static_cast<long>(i + 1)));
        break;
      }
  }
  return mw;
}

MetricWeights riemannian_weights(const LieAlgebra& g) {
  MetricWeights mw;
  mw.generating_flag.push_back(Subspace::full(g.dim()));
  mw.weights.assign(g.dim(), Rational(1));
  mw.riemannian = true;
  return mw;
}

}  // namespace diophex
