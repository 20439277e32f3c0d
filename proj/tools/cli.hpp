// Copyright 2026 The sqfree Authors
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

#ifndef SQFREE_TOOLS_CLI_HPP_
#define SQFREE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sqfree::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kFailure = 2;  // overflow, integrity or consistency

// Depth used for each alphabet size when reproducing the bounds table.
unsigned bounds_table_depth(unsigned x);

// Runs the command line `args` (without the program name), writing results
// to `out` (unless --out is given) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqfree::cli

#endif  // SQFREE_TOOLS_CLI_HPP_
