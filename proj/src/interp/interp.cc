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

#include "crosscov/interp.h"

#include <charconv>
#include <limits>
#include <optional>
#include <stdexcept>

namespace crosscov {

std::string_view ToString(RuntimeErrorKind kind) {
  switch (kind) {
    case RuntimeErrorKind::kDivideByZero: return "divide_by_zero";
    case RuntimeErrorKind::kModByZero: return "mod_by_zero";
    case RuntimeErrorKind::kOverflow: return "overflow";
    case RuntimeErrorKind::kNone: break;
  }
  return "none";
}

ExecutionOutcome ExecutionOutcome::Returned(Value v) {
  ExecutionOutcome o;
  o.kind = Kind::kValue;
  o.value = v;
  return o;
}

ExecutionOutcome ExecutionOutcome::Failed(std::string message) {
  ExecutionOutcome o;
  o.kind = Kind::kFailure;
  o.message = std::move(message);
  return o;
}

ExecutionOutcome ExecutionOutcome::Error(RuntimeErrorKind kind) {
  ExecutionOutcome o;
  o.kind = Kind::kRuntimeError;
  o.error = kind;
  return o;
}

ExecutionOutcome ExecutionOutcome::FuelExhausted() {
  ExecutionOutcome o;
  o.kind = Kind::kFuelExhausted;
  return o;
}

std::string ToString(const ExecutionOutcome& o) {
  switch (o.kind) {
    case ExecutionOutcome::Kind::kValue:
      return "value(" + ToString(o.value) + ")";
    case ExecutionOutcome::Kind::kFailure: {
      std::string out = "failure(\"";
      for (char c : o.message) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      return out + "\")";
    }
    case ExecutionOutcome::Kind::kRuntimeError:
      return "runtime_error(" + std::string(ToString(o.error)) + ")";
    case ExecutionOutcome::Kind::kFuelExhausted:
      return "fuel_exhausted";
  }
  return "?";
}

ExecutionOutcome ParseOutcome(std::string_view text) {
  auto bad = [&] {
    return FormatError("malformed outcome '" + std::string(text) + "'");
  };
  auto inner = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.size() < prefix.size() + 1 || text.substr(0, prefix.size()) != prefix ||
        text.back() != ')') {
      return std::nullopt;
    }
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
  };
  if (text == "fuel_exhausted") return ExecutionOutcome::FuelExhausted();
  if (auto v = inner("value(")) {
    if (*v == "true") return ExecutionOutcome::Returned(true);
    if (*v == "false") return ExecutionOutcome::Returned(false);
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), n);
    if (ec != std::errc() || ptr != v->data() + v->size()) throw bad();
    return ExecutionOutcome::Returned(n);
  }
  if (auto v = inner("failure(")) {
    if (v->size() < 2 || v->front() != '"' || v->back() != '"') throw bad();
    std::string msg;
    for (std::size_t i = 1; i + 1 < v->size(); ++i) {
      char c = (*v)[i];
      if (c == '\\') {
        if (i + 2 >= v->size()) throw bad();
        c = (*v)[++i];
      }
      msg += c;
    }
    return ExecutionOutcome::Failed(std::move(msg));
  }
  if (auto v = inner("runtime_error(")) {
    for (RuntimeErrorKind k : {RuntimeErrorKind::kDivideByZero,
                               RuntimeErrorKind::kModByZero,
                               RuntimeErrorKind::kOverflow}) {
      if (*v == ToString(k)) return ExecutionOutcome::Error(k);
    }
  }
  throw bad();
}

void CheckInput(const Program& p, const Input& input) {
  if (input.size() != p.params.size()) {
    throw InputError("'" + p.name + "' expects " +
                     std::to_string(p.params.size()) + " argument(s), got " +
                     std::to_string(input.size()));
  }
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (TypeOf(input[i]) != p.params[i].type) {
      throw InputError("argument " + std::to_string(i) + " of '" + p.name +
                       "' must be " + std::string(ToString(p.params[i].type)));
    }
  }
}

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

class Executor {
 public:
  Executor(const Program& p, std::uint64_t fuel, std::string_view id)
      : p_(p),
        fuel_(fuel),
        slots_(static_cast<std::size_t>(p.slot_count)),
        coverage_(std::string(id.empty() ? std::string_view(p.name) : id),
                  p.statement_count, p.arm_count()) {}

  Execution Run(const Input& input) {
    for (std::size_t i = 0; i < input.size(); ++i) slots_[i] = input[i];
    if (RunBlock(p_.body)) {
      // The checker guarantees every path returns or fails.
      throw std::logic_error("execution fell off the end of '" + p_.name + "'");
    }
    return {std::move(*outcome_), std::move(coverage_)};
  }

 private:
  bool Step() {
    if (fuel_ == 0) {
      outcome_ = ExecutionOutcome::FuelExhausted();
      return false;
    }
    --fuel_;
    return true;
  }

  void Stop(ExecutionOutcome o) { outcome_ = std::move(o); }

  // Returns false once an outcome has been produced.
  bool RunBlock(const std::vector<Stmt>& block) {
    for (const Stmt& s : block) {
      if (!RunStmt(s)) return false;
    }
    return true;
  }

  bool Branch(const Stmt& s, bool& taken) {
    std::optional<Value> c = Eval(s.expr);
    if (!c) return false;
    taken = std::get<bool>(*c);
    coverage_.arms.insert(ArmOf(s.decision, taken).value);
    return true;
  }

  bool RunStmt(const Stmt& s) {
    if (!Step()) return false;
    coverage_.stmts.insert(s.id.value);
    switch (s.kind) {
      case Stmt::Kind::kDecl:
      case Stmt::Kind::kAssign: {
        std::optional<Value> v = Eval(s.expr);
        if (!v) return false;
        slots_[static_cast<std::size_t>(s.slot)] = *v;
        return true;
      }
      case Stmt::Kind::kIf: {
        bool taken = false;
        if (!Branch(s, taken)) return false;
        return RunBlock(taken ? s.then_body : s.else_body);
      }
      case Stmt::Kind::kWhile: {
        bool taken = false;
        if (!Branch(s, taken)) return false;
        while (taken) {
          if (!RunBlock(s.then_body)) return false;
          if (!Step()) return false;
          if (!Branch(s, taken)) return false;
        }
        return true;
      }
      case Stmt::Kind::kReturn: {
        std::optional<Value> v = Eval(s.expr);
        if (!v) return false;
        Stop(ExecutionOutcome::Returned(*v));
        return false;
      }
      case Stmt::Kind::kFail:
        Stop(ExecutionOutcome::Failed(s.message));
        return false;
    }
    return false;
  }

  std::optional<Value> Fault(RuntimeErrorKind kind) {
    Stop(ExecutionOutcome::Error(kind));
    return std::nullopt;
  }

  std::optional<Value> Arith(Op op, std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    switch (op) {
      case Op::kAdd:
        if (__builtin_add_overflow(a, b, &r)) return Fault(RuntimeErrorKind::kOverflow);
        return r;
      case Op::kSub:
        if (__builtin_sub_overflow(a, b, &r)) return Fault(RuntimeErrorKind::kOverflow);
        return r;
      case Op::kMul:
        if (__builtin_mul_overflow(a, b, &r)) return Fault(RuntimeErrorKind::kOverflow);
        return r;
      case Op::kDiv:
        if (b == 0) return Fault(RuntimeErrorKind::kDivideByZero);
        if (a == kMin && b == -1) return Fault(RuntimeErrorKind::kOverflow);
        return a / b;
      case Op::kMod:
        if (b == 0) return Fault(RuntimeErrorKind::kModByZero);
        if (b == -1) return std::int64_t{0};
        return a % b;
      default:
        break;
    }
    throw std::logic_error("not an arithmetic operator");
  }

  std::optional<Value> Eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kIntLit:
        return e.int_value;
      case Expr::Kind::kBoolLit:
        return e.bool_value;
      case Expr::Kind::kVar:
        return slots_[static_cast<std::size_t>(e.slot)];
      case Expr::Kind::kUnary: {
        std::optional<Value> v = Eval(e.operands[0]);
        if (!v) return v;
        if (e.op == Op::kNot) return !std::get<bool>(*v);
        std::int64_t x = std::get<std::int64_t>(*v);
        if (x == kMin) return Fault(RuntimeErrorKind::kOverflow);
        return -x;
      }
      case Expr::Kind::kBinary:
        break;
    }
    std::optional<Value> lhs = Eval(e.operands[0]);
    if (!lhs) return lhs;
    if (e.op == Op::kAnd || e.op == Op::kOr) {
      bool l = std::get<bool>(*lhs);
      if (e.op == Op::kAnd && !l) return false;
      if (e.op == Op::kOr && l) return true;
      return Eval(e.operands[1]);
    }
    std::optional<Value> rhs = Eval(e.operands[1]);
    if (!rhs) return rhs;
    switch (e.op) {
      case Op::kEq: return *lhs == *rhs;
      case Op::kNe: return *lhs != *rhs;
      default: break;
    }
    std::int64_t a = std::get<std::int64_t>(*lhs);
    std::int64_t b = std::get<std::int64_t>(*rhs);
    switch (e.op) {
      case Op::kLt: return a < b;
      case Op::kLe: return a <= b;
      case Op::kGt: return a > b;
      case Op::kGe: return a >= b;
      default: return Arith(e.op, a, b);
    }
  }

  const Program& p_;
  std::uint64_t fuel_;
  std::vector<Value> slots_;
  CoverageVector coverage_;
  std::optional<ExecutionOutcome> outcome_;
};

}  // namespace

Execution Execute(const Program& p, const Input& input, std::uint64_t fuel,
                  std::string_view program_id) {
  if (fuel == 0) throw std::invalid_argument("Execute: fuel must be >= 1");
  CheckInput(p, input);
  return Executor(p, fuel, program_id).Run(input);
}

}  // namespace crosscov
