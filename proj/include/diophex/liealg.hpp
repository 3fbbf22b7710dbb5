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

#ifndef DIOPHEX_LIEALG_HPP_
#define DIOPHEX_LIEALG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "diophex/freelie.hpp"
#include "diophex/lie_algebra.hpp"
#include "diophex/sampler.hpp"

namespace diophex {

LieAlgebra heisenberg();
// Strictly upper triangular (s+1)x(s+1) matrices, basis E_ij ordered by
// j - i, then i.
LieAlgebra upper_triangular(int s);
// F_{d,s} realized through its Lyndon structure constants.
LieAlgebra free_nilpotent(int d, int s);
LieAlgebra abelian(int d);
// [e1, e_i] = e_{i+1} for 2 <= i < n. Metabelian, step n - 1.
LieAlgebra filiform(int n);
// "heisenberg", "u(s)", "free(d,s)", "abelian(d)", "filiform(n)".
LieAlgebra builtin_algebra(const std::string& spec);

std::vector<Subspace> lower_central_series(const LieAlgebra& g);

// Column j is basis word j evaluated at the tuple.
QMatrix eval_matrix(const LieAlgebra& g, const FreeLieBasis& basis,
                    const std::vector<QVector>& tuple);

struct RelativelyFree {
  int k = 0, s = 0;
  BasisPtr basis;
  Subspace laws;
  // quotient_dims[i - 1] is the dimension in degree i.
  std::vector<std::uint64_t> quotient_dims;
  std::vector<std::vector<QVector>> sample_log;
  bool possible_irrational_laws = false;

  // Laws restricted to the degree-i slice, as a subspace of that slice.
  Subspace laws_in_degree(int i) const;
  // Indices of the basis words whose images span the quotient in degree i
  // (the non-pivot columns of the degree-i laws).
  std::vector<std::size_t> quotient_words(int i) const;
};

RelativelyFree laws_ideal(const LieAlgebra& g, int k, int s,
                          RationalSampler& sampler);
std::uint64_t growth_exponent(const RelativelyFree& rf);

struct MetricWeights {
  std::vector<Subspace> generating_flag;
  // Per basis direction of g.
  std::vector<Rational> weights;
  bool riemannian = false;
};

MetricWeights metric_weights(const LieAlgebra& g, const Subspace& v1);
MetricWeights riemannian_weights(const LieAlgebra& g);

}  // namespace diophex

#endif  // DIOPHEX_LIEALG_HPP_
