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

#ifndef DIOPHEX_SAMPLER_HPP_
#define DIOPHEX_SAMPLER_HPP_

#include <cstdint>
#include <random>

#include "diophex/linalg.hpp"

namespace diophex {

// Seeded source of small-height integer points. Entries are uniform in
// [-height, height].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int height = 10)
      : seed_(seed), height_(height), rng_(seed) {}

  std::uint64_t seed() const { return seed_; }
  int height() const { return height_; }
  Rational next();
  QVector vector(std::size_t n);
  // Independent stream derived from this sampler's seed.
  RationalSampler split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  int height_;
  std::mt19937_64 rng_;
};

}  // namespace diophex

#endif  // DIOPHEX_SAMPLER_HPP_
