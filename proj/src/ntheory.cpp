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

#include "diophex/ntheory.hpp"

#include "diophex/errors.hpp"

namespace diophex {

int mobius(std::uint64_t n) {
  if (n == 0) throw ValidationError("domain", "mobius(0) is undefined");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t mertens(std::uint64_t x) {
  if (x == 0) throw ValidationError("domain", "mertens(0) is undefined");
  std::int64_t m = 0;
  for (std::uint64_t n = 1; n <= x; ++n) m += mobius(n);
  return m;
}

}  // namespace diophex
