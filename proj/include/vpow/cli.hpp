/*
 * Copyright 2026 The vpow Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef VPOW_CLI_HPP
#define VPOW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vpow {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIdentityFailure = 2,
  kExitNotApplicable = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vpow

#endif  // VPOW_CLI_HPP
