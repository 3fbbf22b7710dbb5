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

#ifndef DIOPHEX_ACCEPTANCE_HPP_
#define DIOPHEX_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "diophex/json_io.hpp"
#include "diophex/repthy.hpp"

namespace diophex {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds, 0 = none
  Json data;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  // Dimension formula checked against hook content; replaceable so the
  // oracle can be shown to catch a broken implementation.
  std::function<mpz_class(const YoungDiagram&, unsigned)> weyl = weyl_dim;
  // Criteria to run; empty means all.
  std::vector<int> only;
};

constexpr int kCriteria = 14;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});
// One line: "criterion  4 PASS heisenberg-closed-loop (0.41 s) ..."
std::string format_line(const CriterionResult& r);
Json to_json(const CriterionResult& r);

}  // namespace diophex

#endif  // DIOPHEX_ACCEPTANCE_HPP_
