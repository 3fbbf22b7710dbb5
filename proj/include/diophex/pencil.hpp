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

#ifndef DIOPHEX_PENCIL_HPP_
#define DIOPHEX_PENCIL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "diophex/linalg.hpp"
#include "diophex/polynomial.hpp"
#include "diophex/sampler.hpp"

namespace diophex {

enum class Side { kSource, kTarget };

// Weighted sup quasi-norm data. Weights are non-increasing. On a source
// space the flag is V_i = span(e_1..e_{i-1}); on a target space it is
// V'_i = span(e_{i+1}..e_e).
class QuasiNorm {
 public:
  QuasiNorm() = default;
  QuasiNorm(std::vector<Rational> weights, Side side);
  static QuasiNorm source(std::vector<Rational> w) { return {std::move(w), Side::kSource}; }
  static QuasiNorm target(std::vector<Rational> w) { return {std::move(w), Side::kTarget}; }
  static QuasiNorm unweighted(std::size_t n, Side side);

  std::size_t dim() const { return w_.size(); }
  const std::vector<Rational>& weights() const { return w_; }
  Side side() const { return side_; }
  Rational total() const;
  // V_1 ⊂ ... ⊂ V_{d+1} (source) or V'_0 ⊃ ... ⊃ V'_e (target).
  std::vector<Subspace> flag() const;

 private:
  std::vector<Rational> w_;
  Side side_ = Side::kSource;
};

Rational psi(const Subspace& w, const QuasiNorm& q);
Rational phi(const Subspace& f, const QuasiNorm& q);

// Rational number or +infinity.
struct ExtRational {
  Rational value;
  bool infinite = false;
  std::string str() const { return infinite ? "inf" : value.str(); }
  friend bool operator==(const ExtRational&, const ExtRational&) = default;
};
// a / b with 0/0 = 0 and a/0 = inf for a > 0.
ExtRational ratio(const Rational& a, const Rational& b);
bool less(const ExtRational& x, const ExtRational& y);

struct Pencil {
  Subspace w;
  Rational a, b;
};

// Lazily drawn generic parameter points and their evaluated matrices.
class SampleSet {
 public:
  SampleSet(const PolyMap& map, RationalSampler sampler)
      : map_(&map), sampler_(std::move(sampler)) {}
  const QMatrix& matrix(std::size_t i);
  const std::vector<QVector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  const PolyMap* map_;
  RationalSampler sampler_;
  std::vector<QVector> points_;
  std::vector<QMatrix> mats_;
};

struct GenericValues {
  std::vector<Rational> psi_m, phi_m;
  std::size_t samples_used = 0;
};

// psi_M and phi_M for each subspace: min of psi(W ∩ ker x) and max of
// phi(xW) over at least min_samples points, continued until three fresh
// points change nothing.
GenericValues generic_values(const std::vector<Subspace>& ws, SampleSet& samples,
                             const QuasiNorm& qv, const QuasiNorm& qe,
                             std::size_t min_samples = 5);

Rational psi_M(const Subspace& w, const PolyMap& map, const QuasiNorm& qv,
               RationalSampler sampler);
Rational phi_M(const Subspace& w, const PolyMap& map, const QuasiNorm& qe,
               RationalSampler sampler);

struct PencilCheck {
  bool contains = false;
  Rational psi_m, phi_m;
  std::vector<QVector> samples;
};
PencilCheck pencil_contains(const PolyMap& map, const Pencil& p, const QuasiNorm& qv,
                            const QuasiNorm& qe, RationalSampler sampler);

// psi(W ∩ ker x) / phi(xW), the lower bound for the exponent of x.
ExtRational dirichlet_bound(const QMatrix& x, const Subspace& w, const QuasiNorm& qv,
                            const QuasiNorm& qe);

struct CandidateScore {
  Subspace w;
  Rational a, b;
  ExtRational ratio;
};

struct TauResult {
  ExtRational value;
  Subspace witness;
  Rational a, b;
  std::vector<QVector> samples;
  std::vector<CandidateScore> scores;
  std::vector<std::string> flags;
};

TauResult tau_candidates(const PolyMap& map, const QuasiNorm& qv, const QuasiNorm& qe,
                         const std::vector<Subspace>& candidates,
                         RationalSampler sampler);

bool submodularity_check(const PolyMap& map, const QuasiNorm& qv, const QuasiNorm& qe,
                         const Subspace& w1, const Subspace& w2,
                         RationalSampler sampler);

// Dimension of the span of the minor vectors of Phi(x) over sampled x.
std::size_t pluecker_span(const PolyMap& map, std::size_t n_samples,
                          RationalSampler sampler);
// All minors of orders 1..min(rows, cols), orders ascending, then row and
// column subsets in lexicographic order.
QVector minors(const QMatrix& x);

// Candidate families.
// All nonempty direct sums of the blocks of equal source weight.
std::vector<Subspace> graded_candidates(const QuasiNorm& qv);
// span(e_1..e_j) for j = 1..d.
std::vector<Subspace> flag_candidates(std::size_t d);

}  // namespace diophex

#endif  // DIOPHEX_PENCIL_HPP_
