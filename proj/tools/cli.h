// Copyright 2026 The demipath Authors
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

#ifndef DEMIPATH_TOOLS_CLI_H_
#define DEMIPATH_TOOLS_CLI_H_

#include <iosfwd>

namespace demipath {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBadInstance = 2;
inline constexpr int kExitClassCheck = 3;
inline constexpr int kExitMismatch = 4;

// Runs the command line `argv` and returns the exit code. Reports go to
// `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace demipath

#endif  // DEMIPATH_TOOLS_CLI_H_
