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

#include <map>
#include <string>
#include <vector>

#include "crosscov/minilang.h"

namespace crosscov {
namespace {

struct Binding {
  Type type;
  int slot;
};

class Checker {
 public:
  explicit Checker(Program& p) : p_(p) {}

  void Run() {
    scopes_.emplace_back();
    for (const Param& param : p_.params) {
      Declare(param.name, param.type, SourceLocation{1, 1});
    }
    bool terminates = CheckBlock(p_.body);
    if (!terminates) {
      SourceLocation loc = p_.body.empty() ? SourceLocation{1, 1}
                                           : p_.body.back().loc;
      throw CheckError("missing return: function '" + p_.name +
                           "' can reach its end without return or fail",
                       loc);
    }
    p_.statement_count = next_stmt_;
    p_.decision_count = next_decision_;
    p_.slot_count = next_slot_;
  }

 private:
  int Declare(const std::string& name, Type type, SourceLocation loc) {
    if (Lookup(name) != nullptr) {
      throw CheckError("redeclaration of '" + name + "'", loc);
    }
    int slot = next_slot_++;
    scopes_.back()[name] = Binding{type, slot};
    return slot;
  }

  const Binding* Lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return &found->second;
    }
    return nullptr;
  }

  static std::string TypeMismatch(std::string_view what, Type want, Type got) {
    return std::string(what) + ": expected " + std::string(ToString(want)) +
           ", found " + std::string(ToString(got));
  }

  void Require(const Expr& e, Type want, std::string_view what) {
    if (e.type != want) throw CheckError(TypeMismatch(what, want, e.type), e.loc);
  }

  void CheckExpr(Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kIntLit:
        e.type = Type::kInt;
        return;
      case Expr::Kind::kBoolLit:
        e.type = Type::kBool;
        return;
      case Expr::Kind::kVar: {
        const Binding* b = Lookup(e.name);
        if (b == nullptr) {
          throw CheckError("undeclared variable '" + e.name + "'", e.loc);
        }
        e.type = b->type;
        e.slot = b->slot;
        return;
      }
      case Expr::Kind::kUnary: {
        CheckExpr(e.operands[0]);
        Type want = e.op == Op::kNeg ? Type::kInt : Type::kBool;
        Require(e.operands[0], want,
                "operand of '" + std::string(Spelling(e.op)) + "'");
        e.type = want;
        return;
      }
      case Expr::Kind::kBinary: {
        CheckExpr(e.operands[0]);
        CheckExpr(e.operands[1]);
        const std::string what =
            "operand of '" + std::string(Spelling(e.op)) + "'";
        if (IsArithmetic(e.op)) {
          Require(e.operands[0], Type::kInt, what);
          Require(e.operands[1], Type::kInt, what);
          e.type = Type::kInt;
        } else if (e.op == Op::kEq || e.op == Op::kNe) {
          Require(e.operands[1], e.operands[0].type, what);
          e.type = Type::kBool;
        } else if (IsComparison(e.op)) {
          Require(e.operands[0], Type::kInt, what);
          Require(e.operands[1], Type::kInt, what);
          e.type = Type::kBool;
        } else {
          Require(e.operands[0], Type::kBool, what);
          Require(e.operands[1], Type::kBool, what);
          e.type = Type::kBool;
        }
        return;
      }
    }
  }

  bool CheckScopedBlock(std::vector<Stmt>& block) {
    scopes_.emplace_back();
    bool terminates = CheckBlock(block);
    scopes_.pop_back();
    return terminates;
  }

  // Returns true when every path through the block ends in return or fail.
  bool CheckBlock(std::vector<Stmt>& block) {
    bool terminated = false;
    for (Stmt& s : block) {
      if (terminated) throw CheckError("unreachable statement", s.loc);
      terminated = CheckStmt(s);
    }
    return terminated;
  }

  bool CheckStmt(Stmt& s) {
    s.id = StatementId{next_stmt_++};
    switch (s.kind) {
      case Stmt::Kind::kDecl:
        CheckExpr(s.expr);
        Require(s.expr, s.decl_type, "initializer of '" + s.name + "'");
        s.slot = Declare(s.name, s.decl_type, s.loc);
        return false;
      case Stmt::Kind::kAssign: {
        const Binding* b = Lookup(s.name);
        if (b == nullptr) {
          throw CheckError("undeclared variable '" + s.name + "'", s.loc);
        }
        CheckExpr(s.expr);
        Require(s.expr, b->type, "assignment to '" + s.name + "'");
        s.slot = b->slot;
        return false;
      }
      case Stmt::Kind::kIf: {
        s.decision = DecisionId{next_decision_++};
        CheckExpr(s.expr);
        Require(s.expr, Type::kBool, "if condition");
        bool then_ends = CheckScopedBlock(s.then_body);
        bool else_ends = CheckScopedBlock(s.else_body);
        return s.has_else && then_ends && else_ends;
      }
      case Stmt::Kind::kWhile:
        s.decision = DecisionId{next_decision_++};
        CheckExpr(s.expr);
        Require(s.expr, Type::kBool, "while condition");
        CheckScopedBlock(s.then_body);
        return false;
      case Stmt::Kind::kReturn:
        CheckExpr(s.expr);
        Require(s.expr, p_.return_type, "return value");
        return true;
      case Stmt::Kind::kFail:
        return true;
    }
    return false;
  }

  Program& p_;
  std::vector<std::map<std::string, Binding>> scopes_;
  std::uint32_t next_stmt_ = 0;
  std::uint32_t next_decision_ = 0;
  int next_slot_ = 0;
};

}  // namespace

void CheckAndNumber(Program& p) { Checker(p).Run(); }

}  // namespace crosscov
