// Copyright 2026 The hamlearn Authors
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

#ifndef HAMLEARN_ERRORS_HPP
#define HAMLEARN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamlearn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every particle was assigned zero likelihood; the update must be rejected.
class ZeroTotalWeight : public Error {
 public:
  ZeroTotalWeight() : Error("total particle weight is zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class TooManyQubits : public Error {
 public:
  using Error::Error;
};

/// The posterior has collapsed so that two distinct particles cannot be drawn.
class DegenerateCloud : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration text. `line` is 1-based, 0 when not tied to a line.
class SchemaError : public Error {
 public:
  SchemaError(std::size_t line, std::string field, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + field + ": " + what
                   : field + ": " + what),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace hamlearn

#endif  // HAMLEARN_ERRORS_HPP
