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

#include "diophex/sampler.hpp"

namespace diophex {

Rational RationalSampler::next() {
  std::uniform_int_distribution<long> d(-height_, height_);
  return Rational(d(rng_));
}

QVector RationalSampler::vector(std::size_t n) {
  QVector v(n);
  for (auto& x : v) x = next();
  return v;
}

RationalSampler RationalSampler::split(std::uint64_t stream) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_),
                    static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 g(seq);
  return RationalSampler(g(), height_);
}

}  // namespace diophex
