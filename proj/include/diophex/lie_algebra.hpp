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

#ifndef DIOPHEX_LIE_ALGEBRA_HPP_
#define DIOPHEX_LIE_ALGEBRA_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "diophex/linalg.hpp"

namespace diophex {

// [e_i, e_j] gets c * e_k. Indices are 0-based.
struct StructureConstant {
  std::size_t i, j, k;
  Rational c;
};

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// Finite-dimensional nilpotent Lie algebra over Q given by structure
// constants. Construction validates antisymmetry, Jacobi and nilpotency and
// computes the lower central series.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Constants for (j, i) are inferred from (i, j); if both are given they must
  // be negatives of each other.
  LieAlgebra(std::string name, std::vector<std::string> names,
             const std::vector<StructureConstant>& constants);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  // Nonzero constants with i < j.
  std::vector<StructureConstant> constants() const;
  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  QVector bracket(const QVector& x, const QVector& y) const;
  QVector unit(std::size_t i) const;

  // g = g^(1) ⊇ g^(2) ⊇ ... ⊇ 0, zero space included.
  const std::vector<Subspace>& lower_central_series() const { return lcs_; }
  std::size_t step() const { return lcs_.size() - 1; }
  // [a, b] for subspaces a, b.
  Subspace bracket(const Subspace& a, const Subspace& b) const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<SparseVec> table_;
  std::vector<Subspace> lcs_;
};

}  // namespace diophex

#endif  // DIOPHEX_LIE_ALGEBRA_HPP_
