// Copyright 2026 The Corona Authors.
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

#ifndef CORONA_CLI_HPP_
#define CORONA_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace corona::cli {

enum ExitCode : int {
  kPass = 0,
  kViolation = 1,
  kInputError = 2,
  kInconclusive = 3,
};

// Runs one subcommand. `args` excludes the program name. Reports go to `out`
// (or the --out file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corona::cli

#endif  // CORONA_CLI_HPP_
