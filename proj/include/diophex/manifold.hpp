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

#ifndef DIOPHEX_MANIFOLD_HPP_
#define DIOPHEX_MANIFOLD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "diophex/liealg.hpp"
#include "diophex/pencil.hpp"

namespace diophex {

// A rational polynomial family of maps V -> E with quasi-norms on both sides
// and a rule for producing candidate subspaces.
struct Manifold {
  std::string name;
  PolyMap map;
  QuasiNorm qv, qe;
  std::string strategy = "graded";  // graded | flag | explicit
  std::vector<Subspace> explicit_candidates;
  std::vector<std::string> v_labels, e_labels;
  // Set for Lie evaluation maps.
  std::optional<std::uint64_t> eta;
  std::vector<std::string> flags;
};

std::vector<Subspace> candidates(const Manifold& m);

// Evaluation map of the relatively free algebra F_{k,g} into g. Source basis
// ordered by decreasing degree with weight = degree; target ordered by
// decreasing metric weight.
Manifold lie_manifold(const LieAlgebra& g, int k, const MetricWeights& metric,
                      RationalSampler& sampler);

// Polynomials of degree <= p evaluated at a generic s x s matrix.
Manifold veronese_manifold(int p, int s);
// a_ij -> sum a_ij u_i x u_j in R^3, k vectors u_i.
Manifold wedge_manifold(int k);
// The row (1, t, ..., t^p).
Manifold curve_manifold(int p);

// family: heisenberg | us | free | veronese | wedge | curve. Integer
// parameters by name (k, s, d, p, m); metric "riemannian" or "cc".
Manifold builtin_manifold(const std::string& family,
                          const std::vector<std::pair<std::string, int>>& params,
                          const std::string& metric, RationalSampler& sampler);

}  // namespace diophex

#endif  // DIOPHEX_MANIFOLD_HPP_
