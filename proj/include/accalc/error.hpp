/*
 Copyright 2026 The accalc Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef ACCALC_ERROR_HPP
#define ACCALC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace accalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside an operation's domain (zero polynomial handed to
/// the root finder, non-positive frequency, mismatched vector lengths, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A complex scalar was applied to an element of a space that only carries a
/// real-linear structure (omega == 0).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an analysis does not hold, e.g. a
/// steady-state split requested for a non-Hurwitz operator.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Floating-point trouble: divergence, non-finite values, ill-conditioned
/// linear systems.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace accalc

#endif  // ACCALC_ERROR_HPP
