// Copyright 2026 The qstab Authors
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

#ifndef QSTAB_TOOLS_CLI_H
#define QSTAB_TOOLS_CLI_H

#include <iosfwd>

namespace qstab::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kBudgetExceeded = 3,
};

/// Parses argv and dispatches one subcommand. Reports go to `out`; failures
/// print a `error=<kind>` / `reason=<text>` pair to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qstab::cli

#endif
