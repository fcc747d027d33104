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

#include <algorithm>
#include <string>

#include "crosscov/minilang.h"

namespace crosscov {

std::string ToString(const SourceLocation& loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

std::string_view ToString(Type type) {
  return type == Type::kInt ? "int" : "bool";
}

Type TypeOf(const Value& v) {
  return std::holds_alternative<bool>(v) ? Type::kBool : Type::kInt;
}

std::string ToString(const Value& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::to_string(std::get<std::int64_t>(v));
}

std::string ToString(const Input& input) {
  std::string out = "(";
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (i) out += ", ";
    out += ToString(input[i]);
  }
  return out + ")";
}

std::string_view Spelling(Op op) {
  switch (op) {
    case Op::kNeg: return "-";
    case Op::kNot: return "!";
    case Op::kAdd: return "+";
    case Op::kSub: return "-";
    case Op::kMul: return "*";
    case Op::kDiv: return "/";
    case Op::kMod: return "%";
    case Op::kLt: return "<";
    case Op::kLe: return "<=";
    case Op::kGt: return ">";
    case Op::kGe: return ">=";
    case Op::kEq: return "==";
    case Op::kNe: return "!=";
    case Op::kAnd: return "&&";
    case Op::kOr: return "||";
    case Op::kNone: break;
  }
  return "?";
}

bool IsComparison(Op op) { return op >= Op::kLt && op <= Op::kNe; }
bool IsArithmetic(Op op) { return op >= Op::kAdd && op <= Op::kMod; }

Expr Expr::IntLit(std::int64_t v, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kIntLit;
  e.int_value = v;
  e.loc = loc;
  return e;
}

Expr Expr::BoolLit(bool v, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kBoolLit;
  e.bool_value = v;
  e.type = Type::kBool;
  e.loc = loc;
  return e;
}

Expr Expr::Var(std::string name, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kVar;
  e.name = std::move(name);
  e.loc = loc;
  return e;
}

Expr Expr::Unary(Op op, Expr operand, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kUnary;
  e.op = op;
  e.operands.push_back(std::move(operand));
  e.loc = loc;
  return e;
}

Expr Expr::Binary(Op op, Expr lhs, Expr rhs, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kBinary;
  e.op = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  e.loc = loc;
  return e;
}

bool SameStructure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.op != b.op) return false;
  switch (a.kind) {
    case Expr::Kind::kIntLit:
      return a.int_value == b.int_value;
    case Expr::Kind::kBoolLit:
      return a.bool_value == b.bool_value;
    case Expr::Kind::kVar:
      return a.name == b.name;
    case Expr::Kind::kUnary:
    case Expr::Kind::kBinary:
      return std::equal(a.operands.begin(), a.operands.end(),
                        b.operands.begin(), b.operands.end(),
                        [](const Expr& x, const Expr& y) {
                          return SameStructure(x, y);
                        });
  }
  return false;
}

namespace {

bool SameBlock(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  return std::equal(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Stmt& x, const Stmt& y) { return SameStructure(x, y); });
}

template <typename Visit>
const Stmt* FindIn(const std::vector<Stmt>& block, Visit&& match) {
  for (const Stmt& s : block) {
    if (match(s)) return &s;
    if (const Stmt* hit = FindIn(s.then_body, match)) return hit;
    if (const Stmt* hit = FindIn(s.else_body, match)) return hit;
  }
  return nullptr;
}

}  // namespace

bool SameStructure(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.id != b.id) return false;
  switch (a.kind) {
    case Stmt::Kind::kDecl:
      return a.name == b.name && a.decl_type == b.decl_type &&
             SameStructure(a.expr, b.expr);
    case Stmt::Kind::kAssign:
      return a.name == b.name && SameStructure(a.expr, b.expr);
    case Stmt::Kind::kIf:
      return a.decision == b.decision && a.has_else == b.has_else &&
             SameStructure(a.expr, b.expr) &&
             SameBlock(a.then_body, b.then_body) &&
             SameBlock(a.else_body, b.else_body);
    case Stmt::Kind::kWhile:
      return a.decision == b.decision && SameStructure(a.expr, b.expr) &&
             SameBlock(a.then_body, b.then_body);
    case Stmt::Kind::kReturn:
      return SameStructure(a.expr, b.expr);
    case Stmt::Kind::kFail:
      return a.message == b.message;
  }
  return false;
}

bool SameStructure(const Program& a, const Program& b) {
  if (a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].name != b.params[i].name ||
        a.params[i].type != b.params[i].type) {
      return false;
    }
  }
  return a.name == b.name && a.return_type == b.return_type &&
         a.statement_count == b.statement_count &&
         a.decision_count == b.decision_count && SameBlock(a.body, b.body);
}

bool SameSignature(const Program& a, const Program& b) {
  if (a.return_type != b.return_type || a.params.size() != b.params.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].type != b.params[i].type) return false;
  }
  return true;
}

std::string SignatureString(const Program& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.params.size(); ++i) {
    if (i) out += ", ";
    out += ToString(p.params[i].type);
  }
  out += ") -> ";
  out += ToString(p.return_type);
  return out;
}

const Stmt* FindStatement(const Program& p, StatementId id) {
  return FindIn(p.body, [id](const Stmt& s) { return s.id == id; });
}

const Stmt* FindDecision(const Program& p, DecisionId id) {
  return FindIn(p.body,
                [id](const Stmt& s) { return s.IsDecision() && s.decision == id; });
}

}  // namespace crosscov
