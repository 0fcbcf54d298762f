// Copyright 2026 The gaussperiod Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaussperiod {

/// Input outside the mathematical domain of an operation (composite
/// conductor, degree not dividing q-1, zero-degree polynomial, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is mathematically valid but exceeds what an operation supports.
class UnsupportedRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A structural identity that must hold did not. Always a bug or a
/// mismatched (q, e) pairing, never a recoverable condition.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed reference data.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gaussperiod
