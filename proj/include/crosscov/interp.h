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

// Coverage-instrumented interpreter for mini-language programs.
//
// Semantics:
//  * integers are 64-bit two's complement; +, -, *, unary - and the
//    INT64_MIN / -1 division report runtime_error(overflow) instead of
//    wrapping. Division truncates toward zero, % takes the sign of the
//    dividend, INT64_MIN % -1 is 0.
//  * && and || short-circuit.
//  * fuel: executing a statement costs one step, and so does every
//    re-evaluation of a while condition after the first. A run that needs
//    a step with no fuel left ends in fuel_exhausted.
//  * a statement is hit once its step has been paid; an arm is hit when
//    its decision's condition evaluates to the matching truth value.

#ifndef CROSSCOV_INTERP_H_
#define CROSSCOV_INTERP_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosscov/coverage.h"
#include "crosscov/minilang.h"

namespace crosscov {

inline constexpr std::uint64_t kDefaultFuel = 10000;

enum class RuntimeErrorKind { kNone, kDivideByZero, kModByZero, kOverflow };

std::string_view ToString(RuntimeErrorKind kind);

struct ExecutionOutcome {
  enum class Kind { kValue, kFailure, kRuntimeError, kFuelExhausted };

  Kind kind = Kind::kValue;
  Value value = std::int64_t{0};  // kValue
  std::string message;            // kFailure
  RuntimeErrorKind error = RuntimeErrorKind::kNone;

  static ExecutionOutcome Returned(Value v);
  static ExecutionOutcome Failed(std::string message);
  static ExecutionOutcome Error(RuntimeErrorKind kind);
  static ExecutionOutcome FuelExhausted();

  // Kind and payload both take part; unused payload fields stay at their
  // defaults so the defaulted comparison is exact.
  friend auto operator<=>(const ExecutionOutcome&,
                          const ExecutionOutcome&) = default;
};

// value(5), value(true), failure("neg input"), runtime_error(divide_by_zero),
// fuel_exhausted. ParseOutcome is the inverse.
std::string ToString(const ExecutionOutcome& o);
ExecutionOutcome ParseOutcome(std::string_view text);

struct Execution {
  ExecutionOutcome outcome;
  CoverageVector coverage;
};

// Throws InputError when the input does not match the parameter list.
void CheckInput(const Program& p, const Input& input);

// Runs p on input. `program_id` labels the returned coverage vector.
// Throws InputError; fuel must be at least 1.
Execution Execute(const Program& p, const Input& input,
                  std::uint64_t fuel = kDefaultFuel,
                  std::string_view program_id = {});

// Independent, deliberately naive tree-walking tracer used as an oracle for
// Execute: name-keyed environments, exceptions for control flow and 128-bit
// overflow checks. Same semantics, separate code.
struct Trace {
  std::vector<StatementId> visited;  // in execution order, with repeats
  std::vector<BranchArmId> arms;     // one entry per condition evaluation
  ExecutionOutcome outcome;
};

Trace TraceReference(const Program& p, const Input& input,
                     std::uint64_t fuel = kDefaultFuel);

}  // namespace crosscov

#endif  // CROSSCOV_INTERP_H_
