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

#include "diophex/pencil.hpp"

#include <algorithm>
#include <optional>

#include "diophex/errors.hpp"

namespace diophex {

QuasiNorm::QuasiNorm(std::vector<Rational> weights, Side side)
    : w_(std::move(weights)), side_(side) {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i].sign() <= 0)
      throw ValidationError("quasi-norm", "weights must be positive");
    if (i > 0 && w_[i] > w_[i - 1])
      throw ValidationError("quasi-norm", "weights must be non-increasing");
  }
}

QuasiNorm QuasiNorm::unweighted(std::size_t n, Side side) {
  return QuasiNorm(std::vector<Rational>(n, Rational(1)), side);
}

Rational QuasiNorm::total() const {
  Rational t;
  for (const auto& x : w_) t += x;
  return t;
}

std::vector<Subspace> QuasiNorm::flag() const {
  const std::size_t n = w_.size();
  std::vector<Subspace> out;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::size_t> idx;
    if (side_ == Side::kSource) {
      for (std::size_t j = 0; j < i; ++j) idx.push_back(j);
    } else {
      for (std::size_t j = i; j < n; ++j) idx.push_back(j);
    }
    out.push_back(Subspace::coordinate(n, idx));
  }
  return out;
}

Rational psi(const Subspace& w, const QuasiNorm& q) {
  if (q.side() != Side::kSource)
    throw ValidationError("quasi-norm", "psi needs a source quasi-norm");
  if (w.ambient_dim() != q.dim())
    throw ValidationError("shape", "psi: dimension mismatch");
  Rational out;
  for (auto p : trailing_pivots(w)) out += q.weights()[p];
  return out;
}

Rational phi(const Subspace& f, const QuasiNorm& q) {
  if (q.side() != Side::kTarget)
    throw ValidationError("quasi-norm", "phi needs a target quasi-norm");
  if (f.ambient_dim() != q.dim())
    throw ValidationError("shape", "phi: dimension mismatch");
  Rational out;
  for (auto p : f.pivots()) out += q.weights()[p];
  return out;
}

ExtRational ratio(const Rational& a, const Rational& b) {
  if (a.is_zero()) return {Rational(0), false};
  if (b.is_zero()) return {Rational(0), true};
  return {a / b, false};
}

bool less(const ExtRational& x, const ExtRational& y) {
  if (x.infinite) return false;
  if (y.infinite) return true;
  return x.value < y.value;
}

const QMatrix& SampleSet::matrix(std::size_t i) {
  while (mats_.size() <= i) {
    points_.push_back(sampler_.vector(map_->n_params()));
    mats_.push_back(map_->evaluate(points_.back()));
  }
  return mats_[i];
}

GenericValues generic_values(const std::vector<Subspace>& ws, SampleSet& samples,
                             const QuasiNorm& qv, const QuasiNorm& qe,
                             std::size_t min_samples) {
  GenericValues gv;
  gv.psi_m.resize(ws.size());
  gv.phi_m.resize(ws.size());
  std::vector<bool> seen(ws.size(), false);
  int unchanged = 0;
  std::size_t i = 0;
  while (i < min_samples || unchanged < 3) {
    const QMatrix& x = samples.matrix(i);
    if (x.rows() != qe.dim() || x.cols() != qv.dim())
      throw ValidationError("shape", "map shape does not match quasi-norms");
    bool changed = false;
    for (std::size_t c = 0; c < ws.size(); ++c) {
      const Rational a = psi(kernel_within(x, ws[c]), qv);
      const Rational b = phi(image(x, ws[c]), qe);
      if (!seen[c]) {
        gv.psi_m[c] = a;
        gv.phi_m[c] = b;
        seen[c] = true;
        changed = true;
        continue;
      }
      if (a < gv.psi_m[c]) {
        gv.psi_m[c] = a;
        changed = true;
      }
      if (b > gv.phi_m[c]) {
        gv.phi_m[c] = b;
        changed = true;
      }
    }
    ++i;
    if (i > min_samples) unchanged = changed ? 0 : unchanged + 1;
  }
  gv.samples_used = i;
  return gv;
}

Rational psi_M(const Subspace& w, const PolyMap& map, const QuasiNorm& qv,
               RationalSampler sampler) {
  SampleSet s(map, std::move(sampler));
  const QuasiNorm qe = QuasiNorm::unweighted(map.dim_e(), Side::kTarget);
  return generic_values({w}, s, qv, qe).psi_m[0];
}

Rational phi_M(const Subspace& w, const PolyMap& map, const QuasiNorm& qe,
               RationalSampler sampler) {
  SampleSet s(map, std::move(sampler));
  const QuasiNorm qv = QuasiNorm::unweighted(map.dim_v(), Side::kSource);
  return generic_values({w}, s, qv, qe).phi_m[0];
}

PencilCheck pencil_contains(const PolyMap& map, const Pencil& p, const QuasiNorm& qv,
                            const QuasiNorm& qe, RationalSampler sampler) {
  if (p.a.sign() < 0 || p.b.sign() < 0)
    throw ValidationError("pencil", "pencil needs a, b >= 0");
  if (p.a > psi(p.w, qv)) throw ValidationError("pencil", "pencil needs a <= psi(W)");
  SampleSet s(map, std::move(sampler));
  const auto gv = generic_values({p.w}, s, qv, qe);
  PencilCheck out;
  out.psi_m = gv.psi_m[0];
  out.phi_m = gv.phi_m[0];
  out.contains = out.psi_m >= p.a && out.phi_m <= p.b;
  out.samples = s.points();
  return out;
}

ExtRational dirichlet_bound(const QMatrix& x, const Subspace& w, const QuasiNorm& qv,
                            const QuasiNorm& qe) {
  if (w.dim() == 0) return {Rational(0), false};
  return ratio(psi(kernel_within(x, w), qv), phi(image(x, w), qe));
}

TauResult tau_candidates(const PolyMap& map, const QuasiNorm& qv, const QuasiNorm& qe,
                         const std::vector<Subspace>& candidates,
                         RationalSampler sampler) {
  if (candidates.empty()) throw ValidationError("candidates", "empty candidate family");
  std::vector<Subspace> ws;
  for (const auto& c : candidates) {
    if (c.ambient_dim() != map.dim_v())
      throw ValidationError("shape", "candidate ambient dimension");
    if (std::find(ws.begin(), ws.end(), c) == ws.end()) ws.push_back(c);
  }
  SampleSet s(map, std::move(sampler));
  const auto gv = generic_values(ws, s, qv, qe);
  TauResult out;
  out.samples = s.points();
  for (std::size_t c = 0; c < ws.size(); ++c)
    out.scores.push_back({ws[c], gv.psi_m[c], gv.phi_m[c],
                          ratio(gv.psi_m[c], gv.phi_m[c])});
  ExtRational best = out.scores[0].ratio;
  for (const auto& sc : out.scores)
    if (less(best, sc.ratio)) best = sc.ratio;
  const CandidateScore* pick = nullptr;
  for (const auto& sc : out.scores) {
    if (!(sc.ratio == best)) continue;
    if (!pick || sc.w.dim() > pick->w.dim()) {
      pick = &sc;
    } else if (sc.w.dim() == pick->w.dim()) {
      throw UniquenessError("two distinct maximizers of dimension " +
                            std::to_string(sc.w.dim()));
    }
  }
  out.value = best;
  out.witness = pick->w;
  out.a = pick->a;
  out.b = pick->b;
  if (best.infinite) out.flags.push_back("infinite");
  return out;
}

bool submodularity_check(const PolyMap& map, const QuasiNorm& qv, const QuasiNorm& qe,
                         const Subspace& w1, const Subspace& w2,
                         RationalSampler sampler) {
  SampleSet s(map, std::move(sampler));
  const auto gv = generic_values({w1, w2, sum(w1, w2), intersect(w1, w2)}, s, qv, qe);
  const auto& a = gv.psi_m;
  const auto& b = gv.phi_m;
  return b[2] + b[3] <= b[0] + b[1] && a[2] + a[3] >= a[0] + a[1];
}

namespace {

Rational determinant(QMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = Rational(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

void subsets(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

QVector minors(const QMatrix& x) {
  const std::size_t top = std::min(x.rows(), x.cols());
  mpz_class n_minors = 0;
  for (std::size_t r = 1; r <= top; ++r)
    n_minors += binomial(x.rows(), r) * binomial(x.cols(), r);
  if (n_minors > 200000)
    throw ValidationError("guard", "too many minors for the Pluecker vector");
  QVector out;
  for (std::size_t r = 1; r <= top; ++r) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(x.rows(), r, rs);
    subsets(x.cols(), r, cs);
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        QMatrix sub(r, r);
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b) sub(a, b) = x(ri[a], ci[b]);
        out.push_back(determinant(std::move(sub)));
      }
  }
  return out;
}

std::size_t pluecker_span(const PolyMap& map, std::size_t n_samples,
                          RationalSampler sampler) {
  if (n_samples < 1) throw ValidationError("precondition", "n_samples >= 1");
  SampleSet s(map, std::move(sampler));
  std::optional<SpanBuilder> span;
  int unchanged = 0;
  for (std::size_t i = 0; i < n_samples || unchanged < 3; ++i) {
    QVector th = minors(s.matrix(i));
    if (!span) span.emplace(th.size());
    const bool grew = span->add(std::move(th));
    if (i >= n_samples) unchanged = grew ? 0 : unchanged + 1;
  }
  return span->dim();
}

std::vector<Subspace> graded_candidates(const QuasiNorm& qv) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < qv.dim(); ++i) {
    if (i == 0 || qv.weights()[i] != qv.weights()[i - 1]) blocks.emplace_back();
    blocks.back().push_back(i);
  }
  if (blocks.size() > 12)
    throw ValidationError("guard", "too many weight blocks for graded candidates");
  std::vector<Subspace> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << blocks.size()); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (mask >> b & 1) idx.insert(idx.end(), blocks[b].begin(), blocks[b].end());
    std::sort(idx.begin(), idx.end());
    out.push_back(Subspace::coordinate(qv.dim(), idx));
  }
  return out;
}

std::vector<Subspace> flag_candidates(std::size_t d) {
  std::vector<Subspace> out;
  for (std::size_t j = 1; j <= d; ++j) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < j; ++i) idx.push_back(i);
    out.push_back(Subspace::coordinate(d, idx));
  }
  return out;
}

}  // namespace diophex
