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

// The mini-language every subject program is written in: a single function
// over int/bool parameters with declarations, assignment, if/else, while,
// return and fail. See docs/minilang.md for the grammar.

#ifndef CROSSCOV_MINILANG_H_
#define CROSSCOV_MINILANG_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crosscov/error.h"

namespace crosscov {

enum class Type { kInt, kBool };

std::string_view ToString(Type type);

// Runtime value. 64-bit two's-complement integers or booleans.
using Value = std::variant<std::int64_t, bool>;

Type TypeOf(const Value& v);
std::string ToString(const Value& v);

using Input = std::vector<Value>;
std::string ToString(const Input& input);

template <typename Tag>
struct StrongId {
  std::uint32_t value = 0;

  friend auto operator<=>(const StrongId&, const StrongId&) = default;
};

using StatementId = StrongId<struct StatementIdTag>;
using DecisionId = StrongId<struct DecisionIdTag>;
using BranchArmId = StrongId<struct BranchArmIdTag>;

// Arm 2d is the true-arm of decision d, 2d+1 its false-arm.
inline BranchArmId ArmOf(DecisionId d, bool taken) {
  return BranchArmId{2 * d.value + (taken ? 0u : 1u)};
}

enum class Op {
  kNone,
  // unary
  kNeg,
  kNot,
  // arithmetic
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  // comparison
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  // boolean (short-circuit)
  kAnd,
  kOr,
};

std::string_view Spelling(Op op);
bool IsComparison(Op op);
bool IsArithmetic(Op op);

struct Expr {
  enum class Kind { kIntLit, kBoolLit, kVar, kUnary, kBinary };

  Kind kind = Kind::kIntLit;
  Op op = Op::kNone;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;
  std::vector<Expr> operands;
  SourceLocation loc;

  // Filled in by the checker.
  Type type = Type::kInt;
  int slot = -1;

  static Expr IntLit(std::int64_t v, SourceLocation loc = {});
  static Expr BoolLit(bool v, SourceLocation loc = {});
  static Expr Var(std::string name, SourceLocation loc = {});
  static Expr Unary(Op op, Expr operand, SourceLocation loc = {});
  static Expr Binary(Op op, Expr lhs, Expr rhs, SourceLocation loc = {});

  bool IsLogical() const {
    return (kind == Kind::kBinary && (op == Op::kAnd || op == Op::kOr)) ||
           (kind == Kind::kUnary && op == Op::kNot);
  }
};

// Structural equality: ignores source locations and checker annotations.
bool SameStructure(const Expr& a, const Expr& b);

struct Stmt {
  enum class Kind { kDecl, kAssign, kIf, kWhile, kReturn, kFail };

  Kind kind = Kind::kReturn;
  StatementId id;
  DecisionId decision;  // if / while only
  std::string name;     // decl / assign target
  Type decl_type = Type::kInt;
  Expr expr;            // initializer, assigned value, condition, returned value
  std::string message;  // fail
  std::vector<Stmt> then_body;  // if-then or while body
  std::vector<Stmt> else_body;
  bool has_else = false;
  SourceLocation loc;

  int slot = -1;  // decl / assign target, filled by the checker

  bool IsDecision() const { return kind == Kind::kIf || kind == Kind::kWhile; }
};

bool SameStructure(const Stmt& a, const Stmt& b);

struct Param {
  std::string name;
  Type type = Type::kInt;
};

struct Program {
  std::string name;
  std::vector<Param> params;
  Type return_type = Type::kInt;
  std::vector<Stmt> body;
  std::string source;

  std::uint32_t statement_count = 0;
  std::uint32_t decision_count = 0;
  int slot_count = 0;

  std::uint32_t arm_count() const { return 2 * decision_count; }
};

// Source text and locations are ignored; names, types, shape and IDs are
// compared.
bool SameStructure(const Program& a, const Program& b);

// Two programs share a signature when parameter types and return type agree.
bool SameSignature(const Program& a, const Program& b);
std::string SignatureString(const Program& p);

// Parses, checks and numbers a program. Throws SyntaxError or CheckError.
Program Parse(std::string_view source);

// Canonical source text. Parse(PrettyPrint(p)) is structurally equal to p.
std::string PrettyPrint(const Program& p);
std::string PrettyPrint(const Expr& e);

// Checks a freshly parsed (or edited) AST and assigns statement/decision IDs
// and variable slots. Parse calls this; exposed for AST builders.
void CheckAndNumber(Program& p);

// An atom is a leaf of a decision's boolean formula: a comparison, a bool
// variable, or a bool literal. `path` lists operand indices from the root
// of the condition.
struct AtomRef {
  DecisionId decision;
  std::uint32_t index = 0;
  std::vector<std::uint32_t> path;
  std::string text;
};

// Atoms of decision d, left to right. Throws UnknownDecision.
std::vector<AtomRef> EnumerateAtoms(DecisionId d, const Program& p);

// Pre-order lookups.
const Stmt* FindStatement(const Program& p, StatementId id);
const Stmt* FindDecision(const Program& p, DecisionId id);

}  // namespace crosscov

#endif  // CROSSCOV_MINILANG_H_
