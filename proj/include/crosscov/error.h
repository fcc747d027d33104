// Copyright 2026 The Crosscov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CROSSCOV_ERROR_H_
#define CROSSCOV_ERROR_H_

#include <stdexcept>
#include <string>

namespace crosscov {

// Position inside a source text. Lines and columns are 1-based.
struct SourceLocation {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

std::string ToString(const SourceLocation& loc);

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors tied to a place in mini-language source.
class SourceError : public Error {
 public:
  SourceError(const std::string& what, SourceLocation loc)
      : Error(ToString(loc) + ": " + what), location_(loc), message_(what) {}

  const SourceLocation& location() const { return location_; }
  const std::string& message() const { return message_; }

 private:
  SourceLocation location_;
  std::string message_;
};

class SyntaxError : public SourceError {
 public:
  using SourceError::SourceError;
};

class CheckError : public SourceError {
 public:
  using SourceError::SourceError;
};

// Input tuple does not match a program's parameter list.
class InputError : public Error {
 public:
  using Error::Error;
};

// Coverage vectors of two different programs were combined.
class ProgramMismatch : public Error {
 public:
  using Error::Error;
};

// A program group is malformed (e.g. members disagree on their signature).
class GroupError : public Error {
 public:
  using Error::Error;
};

// A generator could not produce enough unique inputs.
class ExhaustedError : public Error {
 public:
  using Error::Error;
};

class UnknownDecision : public Error {
 public:
  using Error::Error;
};

// Malformed manifest, suite file, or report.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace crosscov

#endif  // CROSSCOV_ERROR_H_
