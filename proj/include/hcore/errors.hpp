// Copyright 2026 The hcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
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

namespace hcore {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or empty edge-list input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line number of the offending input line, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// File could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (dead source vertex, empty subset, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An out-of-range tuning parameter (h < 1, s < 1, ell > n, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The query admits no feasible answer (e.g. query vertices in different components).
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcore
