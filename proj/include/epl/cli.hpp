// Copyright 2026 The EPL Authors
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
#ifndef EPL_CLI_HPP_
#define EPL_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace epl {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the epl tool. args[0] is the program name. Subcommands:
// taxonomy-check, index, serve, query. Every flag can also come from an
// EPL_* environment variable; flags win.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace epl

#endif  // EPL_CLI_HPP_
