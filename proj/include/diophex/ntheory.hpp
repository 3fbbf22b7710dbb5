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

#ifndef DIOPHEX_NTHEORY_HPP_
#define DIOPHEX_NTHEORY_HPP_

#include <cstdint>

namespace diophex {

// Moebius function. Throws ValidationError for n = 0.
int mobius(std::uint64_t n);
// Mertens function M(x) = sum of mobius(n) for 1 <= n <= x.
std::int64_t mertens(std::uint64_t x);

}  // namespace diophex

#endif  // DIOPHEX_NTHEORY_HPP_
