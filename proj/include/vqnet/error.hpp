// Copyright 2026 The VQNet Authors. All Rights Reserved.
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

namespace vqnet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand extents do not conform.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation (log of a
/// non-positive number, division by zero).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Invalid argument value (duplicate qubit, label out of range, ...).
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// A gate references a qubit outside the register, or controls itself.
class CircuitError : public Error {
  public:
    using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// A value was requested from something that was never set or fed.
class UnboundError : public Error {
  public:
    using Error::Error;
};

/// API used out of order or on the wrong kind of object.
class UsageError : public Error {
  public:
    using Error::Error;
};

/// Input is valid but the requested operation does not support it.
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

/// Malformed cell or record in an input data file.
class DataError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

/// Text could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace vqnet
