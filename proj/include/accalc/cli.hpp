/*
 Copyright 2026 The accalc Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef ACCALC_CLI_HPP
#define ACCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace accalc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kParseError = 2,
  kPreconditionViolation = 3,
  kNumericalFailure = 4,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace accalc::cli

#endif  // ACCALC_CLI_HPP
