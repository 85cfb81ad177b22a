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
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <iostream>
#include <string>
#include <vector>

#include "epl/cli.hpp"

int main(int argc, char** argv) {
  // stdout is reserved for results and the JSON summary line.
  spdlog::set_default_logger(spdlog::stderr_logger_st("epl"));
  std::vector<std::string> args(argv, argv + argc);
  return epl::run_cli(args, std::cout, std::cerr);
}
