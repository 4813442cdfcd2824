/*
   Copyright 2026 The dtlsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DTLSUM_TOOLS_CLI_HPP
#define DTLSUM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dtlsum::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kAlgebra = 3 };

/// Default for --jobs when the flag is absent.
inline constexpr const char* kJobsEnv = "DTLSUM_JOBS";

/// Runs one command line (args exclude the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtlsum::cli

#endif  // DTLSUM_TOOLS_CLI_HPP
