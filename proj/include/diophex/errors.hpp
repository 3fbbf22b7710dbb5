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

#ifndef DIOPHEX_ERRORS_HPP_
#define DIOPHEX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace diophex {

// Precondition or input validation failure.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string kind, const std::string& what)
      : std::invalid_argument(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Two distinct ratio maximizers of the same maximal dimension.
class UniquenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diophex

#endif  // DIOPHEX_ERRORS_HPP_
