// Copyright 2026 The Tapaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The tapaudit command line. Every subcommand writes its artifacts and a
// manifest.json into --out; `rerun` replays a manifest.
//
// Exit codes: 0 success, 1 audit found a pure-DP violation, 2 usage or
// schema error, 3 insufficient data.

#ifndef TAPAUDIT_CLI_CLI_H_
#define TAPAUDIT_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tapaudit {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitInsufficientData = 3,
};

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace tapaudit

#endif  // TAPAUDIT_CLI_CLI_H_
