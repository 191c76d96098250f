// Copyright 2026 The sharpcsp Authors
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

#include <stdexcept>
#include <string>

namespace sharpcsp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Unknown or reserved relation name.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Tuple or scope length disagrees with a relation arity.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A witness was requested for a relation that has none (e.g. an affine relation).
class NoWitnessError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Exhaustive enumeration would exceed the configured variable cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Never expected; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sharpcsp
