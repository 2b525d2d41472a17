// Copyright 2026 The kacgal Authors
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

#ifndef KACGAL_ERROR_HPP_
#define KACGAL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kacgal {

// Malformed input document (bad JSON, wrong field types, unknown keys).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well-formed but violates a mathematical precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw ValidationError(msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw InternalError(msg);
}

}  // namespace kacgal

#endif  // KACGAL_ERROR_HPP_
