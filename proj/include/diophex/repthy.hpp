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

#ifndef DIOPHEX_REPTHY_HPP_
#define DIOPHEX_REPTHY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diophex/ntheory.hpp"
#include "diophex/rational.hpp"

namespace diophex {

class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);
  const std::vector<int>& rows() const { return rows_; }
  std::size_t length() const { return rows_.size(); }
  int boxes() const;
  std::string str() const;
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

// All partitions of n in reverse lexicographic order.
std::vector<YoungDiagram> partitions(int n);
// mu is obtained from lam by moving boxes downwards (dominance order).
bool dominated_by(const YoungDiagram& mu, const YoungDiagram& lam);

mpz_class weyl_dim(const YoungDiagram& lam, unsigned k);
mpz_class hook_content_dim(const YoungDiagram& lam, unsigned k);
bool dominance_check(const YoungDiagram& lam, const YoungDiagram& mu, unsigned k,
                     unsigned d);
// Diagrams with s boxes occurring in the last layer of a free nilpotent Lie
// algebra of step s: everything except (s), (1^s), (2,2) and (2,2,2).
std::vector<YoungDiagram> klyachko_diagrams(int s);

struct ExponentValue {
  bool infinite = false;
  Rational beta;
  Rational alpha;
  std::uint64_t eta = 0;
  std::string family;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<Rational> limit;
  // Smallest k from which the closed form beats the other implemented
  // candidates; empty when no such k was found in the scanned range.
  std::optional<std::uint64_t> stable_from;
  std::vector<std::string> flags;
};

// sum over i <= s of M(s/i) k^i, the growth exponent of F_{k,s}.
std::uint64_t free_growth_exponent(std::uint64_t s, std::uint64_t k);

ExponentValue heisenberg_beta(std::uint64_t k);
ExponentValue step2_beta(std::uint64_t d1, std::uint64_t d2, std::uint64_t k);
// layer_dims, if given, are the dimensions of the graded layers of g
// (g^(i) / g^(i+1)); otherwise candidate comparisons use a conservative bound.
ExponentValue metabelian_beta(std::uint64_t s, std::uint64_t dim_last,
                              std::uint64_t k,
                              std::vector<std::uint64_t> layer_dims = {});
ExponentValue us_beta(std::uint64_t s, std::uint64_t k);
ExponentValue free_beta(std::uint64_t d, std::uint64_t s, std::uint64_t k);
Rational veronese_beta(std::uint64_t p, std::uint64_t m);

}  // namespace diophex

#endif  // DIOPHEX_REPTHY_HPP_
