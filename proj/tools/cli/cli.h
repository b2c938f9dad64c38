//
// Copyright 2026 The Camo Authors
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
//

// Command-line front end. Every subcommand is a thin adapter over the
// library; Run is callable in-process for tests.
//
// Exit codes: 0 success, 1 validation error (bad flags, malformed input,
// manifest mismatch), 2 I/O error.

#ifndef CAMO_TOOLS_CLI_H_
#define CAMO_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace camo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// `args` excludes the program name. Machine output goes to `out`, progress
// and checksums to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int Main(int argc, char** argv);

}  // namespace camo::cli

#endif  // CAMO_TOOLS_CLI_H_
