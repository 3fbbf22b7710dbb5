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

#include "diophex/lie_algebra.hpp"

#include <map>

#include "diophex/errors.hpp"

namespace diophex {

namespace {

void add_to(std::map<std::size_t, Rational>& acc, const SparseVec& v,
            const Rational& c) {
  for (const auto& [k, x] : v) {
    auto& slot = acc[k];
    slot += c * x;
    if (slot.is_zero()) acc.erase(k);
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> names,
                       const std::vector<StructureConstant>& constants)
    : name_(std::move(name)), dim_(names.size()), names_(std::move(names)) {
  const std::size_t n = dim_;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>>
      given;
  for (const auto& sc : constants) {
    if (sc.i >= n || sc.j >= n || sc.k >= n)
      throw ValidationError("lie-algebra", "structure index out of range");
    if (sc.c.is_zero()) continue;
    if (sc.i == sc.j)
      throw ValidationError("lie-algebra",
                            "antisymmetry: [e_i, e_i] must vanish");
    auto& slot = given[{sc.i, sc.j}][sc.k];
    slot += sc.c;
  }
  table_.assign(n * n, {});
  for (const auto& [ij, out] : given) {
    const auto [i, j] = ij;
    auto rev = given.find({j, i});
    if (rev != given.end()) {
      std::map<std::size_t, Rational> neg;
      for (const auto& [k, c] : rev->second)
        if (!c.is_zero()) neg[k] = -c;
      std::map<std::size_t, Rational> mine;
      for (const auto& [k, c] : out)
        if (!c.is_zero()) mine[k] = c;
      if (neg != mine)
        throw ValidationError("lie-algebra",
                              "antisymmetry violated for (" +
                                  std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
    }
    for (const auto& [k, c] : out) {
      if (c.is_zero()) continue;
      table_[i * n + j].emplace_back(k, c);
    }
    if (rev == given.end())
      for (const auto& [k, c] : out)
        if (!c.is_zero()) table_[j * n + i].emplace_back(k, -c);
  }

  // Jacobi on basis triples.
  auto br = [&](const SparseVec& x, std::size_t l) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [a, c] : x) add_to(acc, table_[a * n + l], c);
    return acc;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        std::map<std::size_t, Rational> acc;
        for (auto&& [t, c] : br(table_[i * n + j], l)) acc[t] += c;
        for (auto&& [t, c] : br(table_[j * n + l], i)) acc[t] += c;
        for (auto&& [t, c] : br(table_[l * n + i], j)) acc[t] += c;
        for (const auto& [t, c] : acc)
          if (!c.is_zero())
            throw ValidationError(
                "lie-algebra", "Jacobi identity fails on (" +
                                   std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + "," +
                                   std::to_string(l + 1) + ")");
      }

  Subspace g = Subspace::full(n);
  Subspace cur = g;
  lcs_.push_back(cur);
  while (cur.dim() > 0) {
    Subspace next = bracket(g, cur);
    if (next == cur)
      throw ValidationError("non-nilpotent",
                            "lower central series stabilizes above 0");
    lcs_.push_back(next);
    cur = std::move(next);
  }
}

std::vector<StructureConstant> LieAlgebra::constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& [k, c] : table_[i * dim_ + j]) out.push_back({i, j, k, c});
  return out;
}

QVector LieAlgebra::unit(std::size_t i) const {
  QVector v(dim_);
  v[i] = 1;
  return v;
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw ValidationError("shape", "bracket: vector length");
  QVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const auto& t = table_[i * dim_ + j];
      if (t.empty()) continue;
      const Rational c = x[i] * y[j];
      for (const auto& [k, v] : t) out[k] += c * v;
    }
  }
  return out;
}

Subspace LieAlgebra::bracket(const Subspace& a, const Subspace& b) const {
  SpanBuilder sb(dim_);
  for (std::size_t r = 0; r < a.dim() && !sb.full(); ++r) {
    const QVector x = a.basis().row(r);
    for (std::size_t t = 0; t < b.dim() && !sb.full(); ++t)
      sb.add(bracket(x, b.basis().row(t)));
  }
  return sb.subspace();
}

}  // namespace diophex
