// Copyright 2026 The semiqft Authors
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

#ifndef SEMIQFT_TOOLS_CLI_H
#define SEMIQFT_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace semiqft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Largest register the CLI will simulate (s <= 14).
inline constexpr unsigned kMaxS = 14;

/// Runs one command line (without the program name). Returns the process exit status:
/// 0 on success, 1 on usage errors, 2 on domain errors (malformed files, no QFT match, ...).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace semiqft::cli

#endif
