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
#ifndef EPL_FILE_UTIL_HPP_
#define EPL_FILE_UTIL_HPP_

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "epl/error.hpp"
#include "epl/iri.hpp"

namespace epl {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return data;
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out << data;
  if (!out.flush()) throw IoError("write failed: " + path.string());
}

inline std::string file_uri(const std::filesystem::path& path) {
  return "file://" +
         iri_escape(std::filesystem::absolute(path).lexically_normal().string());
}

}  // namespace epl

#endif  // EPL_FILE_UTIL_HPP_
