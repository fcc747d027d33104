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

// Shares nothing with interp.cc beyond the AST: no slots, no builtins.

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosscov/interp.h"

namespace crosscov {
namespace {

struct Stopped {
  ExecutionOutcome outcome;
};

using Wide = __int128;

Wide Narrowable(Wide v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw Stopped{ExecutionOutcome::Error(RuntimeErrorKind::kOverflow)};
  }
  return v;
}

class Tracer {
 public:
  Tracer(const Program& p, std::uint64_t fuel) : p_(p), fuel_left_(fuel) {}

  Trace Run(const Input& input) {
    env_.emplace_back();
    for (std::size_t i = 0; i < input.size(); ++i) {
      env_.back()[p_.params[i].name] = input[i];
    }
    try {
      Block(p_.body);
      throw std::logic_error("reference tracer fell off the end");
    } catch (const Stopped& s) {
      return Trace{std::move(visited_), std::move(arms_), s.outcome};
    }
  }

 private:
  void Pay() {
    if (fuel_left_ == 0) throw Stopped{ExecutionOutcome::FuelExhausted()};
    fuel_left_ -= 1;
  }

  Value& Slot(const std::string& name) {
    for (std::size_t i = env_.size(); i-- > 0;) {
      auto it = env_[i].find(name);
      if (it != env_[i].end()) return it->second;
    }
    throw std::logic_error("unbound variable " + name);
  }

  void Block(const std::vector<Stmt>& stmts) {
    env_.emplace_back();
    for (const Stmt& s : stmts) Statement(s);
    env_.pop_back();
  }

  void Statement(const Stmt& s) {
    Pay();
    visited_.push_back(s.id);
    if (s.kind == Stmt::Kind::kDecl) {
      Value v = Evaluate(s.expr);
      env_.back()[s.name] = v;
    } else if (s.kind == Stmt::Kind::kAssign) {
      Value v = Evaluate(s.expr);
      Slot(s.name) = v;
    } else if (s.kind == Stmt::Kind::kIf) {
      if (Decide(s)) {
        Block(s.then_body);
      } else {
        Block(s.else_body);
      }
    } else if (s.kind == Stmt::Kind::kWhile) {
      bool first = true;
      for (;;) {
        if (!first) Pay();
        first = false;
        if (!Decide(s)) break;
        Block(s.then_body);
      }
    } else if (s.kind == Stmt::Kind::kReturn) {
      throw Stopped{ExecutionOutcome::Returned(Evaluate(s.expr))};
    } else {
      throw Stopped{ExecutionOutcome::Failed(s.message)};
    }
  }

  bool Decide(const Stmt& s) {
    const bool taken = std::get<bool>(Evaluate(s.expr));
    arms_.push_back(ArmOf(s.decision, taken));
    return taken;
  }

  Wide Int(const Expr& e) { return std::get<std::int64_t>(Evaluate(e)); }
  bool Bool(const Expr& e) { return std::get<bool>(Evaluate(e)); }

  Value Evaluate(const Expr& e) {
    using K = Expr::Kind;
    if (e.kind == K::kIntLit) return e.int_value;
    if (e.kind == K::kBoolLit) return e.bool_value;
    if (e.kind == K::kVar) return Slot(e.name);
    if (e.kind == K::kUnary) {
      if (e.op == Op::kNot) return !Bool(e.operands[0]);
      return static_cast<std::int64_t>(Narrowable(-Int(e.operands[0])));
    }
    const Expr& l = e.operands[0];
    const Expr& r = e.operands[1];
    switch (e.op) {
      case Op::kAnd: return Bool(l) ? Bool(r) : false;
      case Op::kOr: return Bool(l) ? true : Bool(r);
      case Op::kEq: {
        Value a = Evaluate(l);
        return a == Evaluate(r);
      }
      case Op::kNe: {
        Value a = Evaluate(l);
        return a != Evaluate(r);
      }
      default: break;
    }
    Wide a = Int(l);
    Wide b = Int(r);
    Wide out = 0;
    switch (e.op) {
      case Op::kLt: return a < b;
      case Op::kLe: return a <= b;
      case Op::kGt: return a > b;
      case Op::kGe: return a >= b;
      case Op::kAdd: out = a + b; break;
      case Op::kSub: out = a - b; break;
      case Op::kMul: out = a * b; break;
      case Op::kDiv:
        if (b == 0) throw Stopped{ExecutionOutcome::Error(RuntimeErrorKind::kDivideByZero)};
        out = a / b;
        break;
      case Op::kMod:
        if (b == 0) throw Stopped{ExecutionOutcome::Error(RuntimeErrorKind::kModByZero)};
        out = a % b;
        break;
      default:
        throw std::logic_error("unexpected operator");
    }
    return static_cast<std::int64_t>(Narrowable(out));
  }

  const Program& p_;
  std::uint64_t fuel_left_;
  std::vector<std::map<std::string, Value>> env_;
  std::vector<StatementId> visited_;
  std::vector<BranchArmId> arms_;
};

}  // namespace

Trace TraceReference(const Program& p, const Input& input, std::uint64_t fuel) {
  if (fuel == 0) throw std::invalid_argument("TraceReference: fuel must be >= 1");
  CheckInput(p, input);
  return Tracer(p, fuel).Run(input);
}

}  // namespace crosscov
