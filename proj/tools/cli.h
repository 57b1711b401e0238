// Copyright 2026 The vsfplace Authors.
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

#ifndef VSFPLACE_TOOLS_CLI_H_
#define VSFPLACE_TOOLS_CLI_H_

#include <ostream>

namespace vsfplace::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;       // bad flags, unreadable or invalid input
inline constexpr int kExitInfeasible = 2;  // no feasible placement
inline constexpr int kExitTimeLimit = 3;   // stopped at the time limit

// Entry point shared by the binary and the tests. argv[0] is the program
// name.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vsfplace::cli

#endif  // VSFPLACE_TOOLS_CLI_H_
