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

#ifndef DIOPHEX_JSON_IO_HPP_
#define DIOPHEX_JSON_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "diophex/empirical.hpp"
#include "diophex/freelie.hpp"
#include "diophex/manifold.hpp"
#include "diophex/repthy.hpp"
#include "json.hpp"

namespace diophex {

using Json = nlohmann::ordered_json;

// Exact values travel as "p/q" strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const ExtRational& r);

// Floats rounded to 12 significant digits.
Json real_json(double x);

Json to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, const std::string& where);
// Basis rows of the reduced echelon form.
Json to_json(const Subspace& w);
Subspace subspace_from_json(const Json& j, std::size_t ambient, const std::string& where);

Json to_json(const LieElement& x);
LieElement lie_element_from_json(const Json& j);

// A Lie algebra with its optional metric description.
struct AlgebraSpec {
  LieAlgebra algebra;
  std::optional<std::vector<std::size_t>> v1;  // 0-based
  bool riemannian = false;
};
Json to_json(const LieAlgebra& g, const std::optional<std::vector<std::size_t>>& v1 = {},
             bool riemannian = false);
AlgebraSpec algebra_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, std::size_t n_params, const std::string& where);
Json to_json(const Manifold& m);
Manifold manifold_from_json(const Json& j);

Json to_json(const TauResult& t);
Json to_json(const ExponentValue& v);
Json to_json(const SlopeFit& f);
Json to_json(const SystoleTrace& t);
Json to_json(const LevelMeasure& m);

Json error_json(const std::string& kind, const std::string& message);

// Parses text, mapping parse failures to ValidationError("json", ...).
Json parse_json(const std::string& text, const std::string& where);

// FNV-1a 64 of the bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace diophex

#endif  // DIOPHEX_JSON_IO_HPP_
