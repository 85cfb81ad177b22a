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
#ifndef EPL_TESTS_SUPPORT_FIXTURES_HPP_
#define EPL_TESTS_SUPPORT_FIXTURES_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace epl::testing {

std::filesystem::path data_dir();

// Directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli_capture(const std::vector<std::string>& args);

// `epl index` over tests/data/e2e, writing to output.
CliResult index_fixture(const std::filesystem::path& output);

}  // namespace epl::testing

#endif  // EPL_TESTS_SUPPORT_FIXTURES_HPP_
