// Copyright 2026 The omegamon Authors.
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

#ifndef OMEGAMON_ERROR_HPP_
#define OMEGAMON_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegamon {

  // Base class for every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: bad arguments, ill-formed files, violated preconditions.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // A text-level syntax error; `position()` is a 0-based offset (or line
  // number for line-oriented formats).
  class ParseError : public InvalidArgument {
   public:
    ParseError(std::string const& what, std::size_t position)
        : InvalidArgument(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A configured cap (element count, memory, substitution count) was hit.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // The requested computation has no exact procedure here, e.g. a free
  // Burnside group of exponent >= 4.
  class Unsupported : public Error {
   public:
    using Error::Error;
  };

  // A semi-decision procedure gave up inside its caps without an answer.
  class Undecided : public Error {
   public:
    using Error::Error;
  };

  // An internal cross-check disagreed; always a bug.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace omegamon

#endif  // OMEGAMON_ERROR_HPP_
