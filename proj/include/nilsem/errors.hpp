// Copyright 2026 The nilsem Authors
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

#ifndef NILSEM_ERRORS_HPP_
#define NILSEM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilsem {

  // Two transformations (or a transformation and a semigroup) act on
  // different sets.
  class DomainMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A point lies outside {0, ..., n - 1}.
  class RangeError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
  };

  // Malformed arguments: empty generator sets, bad blocks, etc.
  class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // The input does not satisfy a mathematical precondition of the
  // operation (not nilpotent, not commutative, zero of rank > 1, ...).
  class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A result failed its own post-check. Always a bug.
  class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // Malformed semigroup file. line() is 1-based, 0 when not applicable.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : std::runtime_error(line == 0 ? what
                                       : "line " + std::to_string(line)
                                             + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

}  // namespace nilsem

#endif  // NILSEM_ERRORS_HPP_
