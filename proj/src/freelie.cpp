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

#include "diophex/freelie.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "diophex/errors.hpp"
#include "diophex/ntheory.hpp"

namespace diophex {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void accumulate(std::map<std::size_t, Rational>& acc, const SparseVec& v,
                const Rational& c) {
  for (const auto& [k, x] : v) {
    auto it = acc.try_emplace(k).first;
    it->second += c * x;
    if (it->second.is_zero()) acc.erase(it);
  }
}

SparseVec to_sparse(const std::map<std::size_t, Rational>& m) {
  return SparseVec(m.begin(), m.end());
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    // Compare w with its rotation starting at r.
    for (std::size_t t = 0; t < n; ++t) {
      const int a = w[t], b = w[(r + t) % n];
      if (a < b) break;
      if (a > b) return false;
      if (t + 1 == n) return false;  // periodic
    }
  }
  return true;
}

std::uint64_t witt_dim(std::uint64_t k, std::uint64_t i) {
  if (k < 1 || i < 1) throw ValidationError("domain", "witt_dim needs k,i >= 1");
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= i; ++d) {
    if (i % d) continue;
    std::int64_t p = 1;
    for (std::uint64_t e = 0; e < i / d; ++e) p *= static_cast<std::int64_t>(k);
    total += mobius(d) * p;
  }
  return static_cast<std::uint64_t>(total) / i;
}

FreeLieBasis::FreeLieBasis(int k, int s) : k_(k), s_(s) {
  if (k < 1 || s < 1) throw ValidationError("domain", "lyndon_basis needs k,s >= 1");
  // Duval's generation, lexicographic order.
  std::vector<Word> all;
  Word w{1};
  while (!w.empty()) {
    all.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(s)) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(all.begin(), all.end(), [](const Word& a, const Word& b) {
    return a.size() < b.size();
  });
  words_ = std::move(all);
  offsets_.assign(s + 1, 0);
  for (const auto& x : words_) ++offsets_[x.size()];
  for (int d = 1; d <= s; ++d) offsets_[d] += offsets_[d - 1];
  for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
  left_.assign(words_.size(), kNone);
  right_.assign(words_.size(), kNone);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& x = words_[i];
    for (std::size_t j = 1; j < x.size(); ++j) {
      auto it = index_.find(Word(x.begin() + j, x.end()));
      if (it == index_.end()) continue;
      right_[i] = it->second;
      left_[i] = index_.at(Word(x.begin(), x.begin() + j));
      break;
    }
  }
}

std::shared_ptr<const FreeLieBasis> FreeLieBasis::make(int k, int s) {
  return std::shared_ptr<const FreeLieBasis>(new FreeLieBasis(k, s));
}

std::optional<std::size_t> FreeLieBasis::index(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string FreeLieBasis::bracketing(std::size_t i) const {
  if (left_[i] == kNone) return "x" + std::to_string(words_[i][0]);
  return "[" + bracketing(left_[i]) + "," + bracketing(right_[i]) + "]";
}

SparseVec FreeLieBasis::bracket_basis(std::size_t i, std::size_t j) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return bracket_locked(i, j);
}

const SparseVec& FreeLieBasis::bracket_locked(std::size_t i,
                                              std::size_t j) const {
  const std::uint64_t key = static_cast<std::uint64_t>(i) * words_.size() + j;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  SparseVec out;
  const Word& u = words_[i];
  const Word& v = words_[j];
  if (i == j || static_cast<int>(u.size() + v.size()) > s_) {
    // zero
  } else if (v < u) {
    for (const auto& [t, c] : bracket_locked(j, i)) out.emplace_back(t, -c);
  } else if (left_[i] == kNone || !(words_[right_[i]] < v)) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    out.emplace_back(index_.at(uv), Rational(1));
  } else {
    // [[a,b],v] = [a,[b,v]] - [b,[a,v]]
    const std::size_t a = left_[i], b = right_[i];
    std::map<std::size_t, Rational> acc;
    const SparseVec bv = bracket_locked(b, j);
    for (const auto& [t, c] : bv) accumulate(acc, bracket_locked(a, t), c);
    const SparseVec av = bracket_locked(a, j);
    for (const auto& [t, c] : av) accumulate(acc, bracket_locked(b, t), -c);
    out = to_sparse(acc);
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

LieElement LieElement::generator(BasisPtr basis, int letter) {
  if (letter < 1 || letter > basis->k())
    throw ValidationError("domain", "generator letter out of range");
  return basis_element(std::move(basis), Word{letter});
}

LieElement LieElement::basis_element(BasisPtr basis, const Word& w) {
  auto idx = basis->index(w);
  if (!idx) throw ValidationError("domain", "not a Lyndon word of the basis");
  LieElement e(std::move(basis));
  e.terms_[*idx] = 1;
  return e;
}

Rational LieElement::coeff(std::size_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(std::size_t i, const Rational& c) {
  if (i >= basis_->size()) throw ValidationError("domain", "basis index");
  auto it = terms_.try_emplace(i).first;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LieElement LieElement::component(int d) const {
  LieElement out(basis_);
  for (const auto& [i, c] : terms_)
    if (basis_->degree(i) == d) out.terms_.emplace(i, c);
  return out;
}

void LieElement::check(const LieElement& o) const {
  if (basis_ != o.basis_ &&
      (basis_->k() != o.basis_->k() || basis_->s() != o.basis_->s()))
    throw ValidationError("basis", "basis mismatch");
}

LieElement LieElement::operator-() const {
  LieElement out(basis_);
  for (const auto& [i, c] : terms_) out.terms_.emplace(i, -c);
  return out;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check(o);
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check(o);
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, x] : terms_) x *= c;
  return *this;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.basis()->k() != b.basis()->k() || a.basis()->s() != b.basis()->s())
    throw ValidationError("basis", "basis mismatch");
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms())
      accumulate(acc, a.basis()->bracket_basis(i, j), ci * cj);
  LieElement out(a.basis());
  for (const auto& [i, c] : acc) out.add_term(i, c);
  return out;
}

std::vector<QVector> evaluate_basis(const FreeLieBasis& basis,
                                    const LieAlgebra& g,
                                    const std::vector<QVector>& tuple) {
  if (tuple.size() != static_cast<std::size_t>(basis.k()))
    throw ValidationError("shape", "tuple length must equal k");
  for (const auto& x : tuple)
    if (x.size() != g.dim()) throw ValidationError("shape", "tuple vector length");
  std::vector<QVector> val(basis.size());
  const int top = std::min<int>(basis.s(), static_cast<int>(g.step()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.degree(i) == 1) {
      val[i] = tuple[basis.word(i)[0] - 1];
    } else if (basis.degree(i) > top) {
      val[i] = QVector(g.dim());
    } else {
      val[i] = g.bracket(val[basis.left(i)], val[basis.right(i)]);
    }
  }
  return val;
}

QVector evaluate(const LieElement& elem, const LieAlgebra& g,
                 const std::vector<QVector>& tuple) {
  const auto vals = evaluate_basis(*elem.basis(), g, tuple);
  QVector out(g.dim());
  for (const auto& [i, c] : elem.terms())
    for (std::size_t t = 0; t < g.dim(); ++t)
      if (!vals[i][t].is_zero()) out[t] += c * vals[i][t];
  return out;
}

namespace {

// Right-normed bracket words in {X=0, Y=1} with their Dynkin coefficients,
// all total degrees up to 6.
using DynkinTable = std::vector<std::pair<std::vector<int>, Rational>>;

const DynkinTable& dynkin_table() {
  static const DynkinTable table = [] {
    constexpr int kMax = 6;
    std::map<std::vector<int>, Rational> acc;
    Rational fact[kMax + 1];
    fact[0] = 1;
    for (int i = 1; i <= kMax; ++i) fact[i] = fact[i - 1] * Rational(i);
    std::vector<std::pair<int, int>> seq;
    std::function<void(int)> rec = [&](int total) {
      if (!seq.empty()) {
        const int n = static_cast<int>(seq.size());
        Rational c = Rational(n % 2 ? 1 : -1, n);
        Rational denom = total;
        std::vector<int> word;
        for (auto [r, s] : seq) {
          denom *= fact[r] * fact[s];
          word.insert(word.end(), r, 0);
          word.insert(word.end(), s, 1);
        }
        const std::size_t L = word.size();
        if (L == 1 || word[L - 1] != word[L - 2]) {
          auto& slot = acc[word];
          slot += c / denom;
        }
      }
      for (int t = 1; total + t <= kMax; ++t)
        for (int r = 0; r <= t; ++r) {
          seq.emplace_back(r, t - r);
          rec(total + t);
          seq.pop_back();
        }
    };
    rec(0);
    DynkinTable out;
    for (auto& [w, c] : acc)
      if (!c.is_zero()) out.emplace_back(w, c);
    return out;
  }();
  return table;
}

}  // namespace

QVector bch_product(const QVector& x, const QVector& y, const LieAlgebra& g) {
  if (g.step() > 6) throw ValidationError("domain", "BCH is capped at step 6");
  if (x.size() != g.dim() || y.size() != g.dim())
    throw ValidationError("shape", "bch: vector length");
  const std::size_t s = std::max<std::size_t>(g.step(), 1);
  QVector z(g.dim());
  // Memoize right-normed suffix values.
  std::map<std::vector<int>, QVector> memo;
  std::function<const QVector&(const std::vector<int>&, std::size_t)> value =
      [&](const std::vector<int>& w, std::size_t from) -> const QVector& {
    std::vector<int> key(w.begin() + from, w.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QVector v;
    const QVector& head = w[from] == 0 ? x : y;
    if (from + 1 == w.size()) {
      v = head;
    } else {
      v = g.bracket(head, value(w, from + 1));
    }
    return memo.emplace(std::move(key), std::move(v)).first->second;
  };
  for (const auto& [w, c] : dynkin_table()) {
    if (w.size() > s) continue;
    const QVector& v = value(w, 0);
    for (std::size_t t = 0; t < g.dim(); ++t)
      if (!v[t].is_zero()) z[t] += c * v[t];
  }
  return z;
}

}  // namespace diophex
