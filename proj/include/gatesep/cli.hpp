// Copyright 2026 The gatesep Authors
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

#ifndef GATESEP_CLI_HPP
#define GATESEP_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace gatesep {

/// Exit codes: positive verdict or plain success.
inline constexpr int kExitOk = 0;
/// Any error, including usage errors.
inline constexpr int kExitError = 1;
/// Negative verdict: not Hermitian, or a genuine two-qubit gate.
inline constexpr int kExitNegative = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage text to `err`.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gatesep

#endif  // GATESEP_CLI_HPP
