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

#ifndef EPL_ERROR_HPP_
#define EPL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epl {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in some input. position is a byte offset, a line number or a
// token offset depending on the format; the message says which.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input is well-formed but violates a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// SPARQL construct outside the supported subset.
class UnsupportedFeatureError : public ParseError {
 public:
  using ParseError::ParseError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace epl

#endif  // EPL_ERROR_HPP_
