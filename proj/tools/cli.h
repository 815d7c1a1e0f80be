// Copyright 2026 The Spectravert Authors
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

// Command-line front end, callable in-process for tests.

#ifndef SPECTRAVERT_TOOLS_CLI_H_
#define SPECTRAVERT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace spectravert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. JSON results go to `out`, errors as JSON
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectravert::cli

#endif  // SPECTRAVERT_TOOLS_CLI_H_
