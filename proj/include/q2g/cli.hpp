// Copyright 2026 The q2graph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef Q2G_CLI_HPP
#define Q2G_CLI_HPP

#include <ostream>

namespace q2g::cli {

enum ExitStatus : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerificationFailure = 3,
};

/// Entry point of the q2g tool. Results go to `out`; every error is a single
/// line on `err` of the form "error[<rule>]: <message>".
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace q2g::cli

#endif  // Q2G_CLI_HPP
