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

#ifndef DIOPHEX_CLI_HPP_
#define DIOPHEX_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace diophex {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;      // selftest criterion failed, internal error
constexpr int kExitInvalid = 2;     // validation or usage error
constexpr int kExitUniqueness = 3;  // tied maximizers, or --strict escalation

// Runs the command line (args exclude the program name). The report or the
// error object goes to out, human oriented progress to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diophex

#endif  // DIOPHEX_CLI_HPP_
