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
#include "support/fixtures.hpp"

#include <unistd.h>

#include <atomic>
#include <sstream>
#include <stdexcept>

#include "epl/cli.hpp"

namespace epl::testing {

std::filesystem::path data_dir() { return EPL_TEST_DATA_DIR; }

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("epl-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

CliResult run_cli_capture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> argv = {"epl"};
  argv.insert(argv.end(), args.begin(), args.end());
  int code = run_cli(argv, out, err);
  return {code, out.str(), err.str()};
}

CliResult index_fixture(const std::filesystem::path& output) {
  auto e2e = data_dir() / "e2e";
  return run_cli_capture({"index",
                          "--taxonomy", (e2e / "taxonomy.rdf").string(),
                          "--wiki-dump", (e2e / "wiki_dump.xml").string(),
                          "--expert-root", (e2e / "experts").string(),
                          "--expert-url-base", "https://raweb.example.org/2014/",
                          "--output", output.string()});
}

}  // namespace epl::testing
