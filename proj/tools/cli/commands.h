// Copyright 2026 The qbcap Authors
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

#ifndef QBCAP_CLI_COMMANDS_H
#define QBCAP_CLI_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qbcap::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 2,
    kExitInvalidState = 3,
    kExitBadConfig = 4,
    kExitReproduction = 5,
};

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Same, with `args` excluding the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qbcap::cli

#endif  // QBCAP_CLI_COMMANDS_H
