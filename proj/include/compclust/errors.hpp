// Copyright 2026 The compclust Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compclust {

// Root of every error thrown by the library. The CLI maps each subclass to a
// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed pattern or polynomial text. `position()` is a 0-based offset into
// the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Pattern set violates its invariants (zero part, duplicates, mixed lengths).
class PatternSetError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration requested above the configured guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Precondition failure in the algebra kernel or the analysis layer: division
// by zero, a pole at the origin, a missing root, an out-of-range offset.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

// An exact post-condition check failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace compclust
