// Copyright 2026 The binpack Authors.
//
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

#ifndef BINPACK_CLI_HPP_INCLUDED
#define BINPACK_CLI_HPP_INCLUDED

#include <iosfwd>

namespace binpack::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kUsage = 2,
  kIo = 3,
  kRemote = 4,
};

/// Entry point of the `binpack` tool. Reports go to `out`, diagnostics to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace binpack::cli

#endif  // BINPACK_CLI_HPP_INCLUDED
