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

#include <string>

#include "crosscov/minilang.h"

namespace crosscov {
namespace {

// Binding strength, loosest = 1.
int Precedence(const Expr& e) {
  if (e.kind == Expr::Kind::kUnary) return 6;
  if (e.kind != Expr::Kind::kBinary) return 7;
  switch (e.op) {
    case Op::kOr: return 1;
    case Op::kAnd: return 2;
    case Op::kMul:
    case Op::kDiv:
    case Op::kMod: return 5;
    case Op::kAdd:
    case Op::kSub: return 4;
    default: return 3;  // comparison
  }
}

void Print(const Expr& e, std::string& out);

void PrintOperand(const Expr& e, int min_prec, std::string& out) {
  if (Precedence(e) < min_prec) {
    out += '(';
    Print(e, out);
    out += ')';
  } else {
    Print(e, out);
  }
}

void Print(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::kIntLit:
      out += std::to_string(e.int_value);
      return;
    case Expr::Kind::kBoolLit:
      out += e.bool_value ? "true" : "false";
      return;
    case Expr::Kind::kVar:
      out += e.name;
      return;
    case Expr::Kind::kUnary:
      out += Spelling(e.op);
      PrintOperand(e.operands[0], 6, out);
      return;
    case Expr::Kind::kBinary: {
      int prec = Precedence(e);
      // Left-associative: the right operand needs parentheses at equal
      // precedence. Comparisons never chain, so both sides need them.
      PrintOperand(e.operands[0], prec == 3 ? prec + 1 : prec, out);
      out += ' ';
      out += Spelling(e.op);
      out += ' ';
      PrintOperand(e.operands[1], prec + 1, out);
      return;
    }
  }
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void Indent(int depth, std::string& out) { out.append(2 * depth, ' '); }

void PrintBlock(const std::vector<Stmt>& block, int depth, std::string& out);

void PrintIf(const Stmt& s, int depth, std::string& out) {
  out += "if (";
  Print(s.expr, out);
  out += ") {\n";
  PrintBlock(s.then_body, depth + 1, out);
  Indent(depth, out);
  out += '}';
  if (!s.has_else) return;
  if (s.else_body.size() == 1 && s.else_body[0].kind == Stmt::Kind::kIf) {
    out += " else ";
    PrintIf(s.else_body[0], depth, out);
    return;
  }
  out += " else {\n";
  PrintBlock(s.else_body, depth + 1, out);
  Indent(depth, out);
  out += '}';
}

void PrintStmt(const Stmt& s, int depth, std::string& out) {
  Indent(depth, out);
  switch (s.kind) {
    case Stmt::Kind::kDecl:
      out += "var " + s.name + ": " + std::string(ToString(s.decl_type)) +
             " = ";
      Print(s.expr, out);
      out += ';';
      break;
    case Stmt::Kind::kAssign:
      out += s.name + " = ";
      Print(s.expr, out);
      out += ';';
      break;
    case Stmt::Kind::kIf:
      PrintIf(s, depth, out);
      break;
    case Stmt::Kind::kWhile:
      out += "while (";
      Print(s.expr, out);
      out += ") {\n";
      PrintBlock(s.then_body, depth + 1, out);
      Indent(depth, out);
      out += '}';
      break;
    case Stmt::Kind::kReturn:
      out += "return ";
      Print(s.expr, out);
      out += ';';
      break;
    case Stmt::Kind::kFail:
      out += "fail(\"" + Escape(s.message) + "\");";
      break;
  }
  out += '\n';
}

void PrintBlock(const std::vector<Stmt>& block, int depth, std::string& out) {
  for (const Stmt& s : block) PrintStmt(s, depth, out);
}

}  // namespace

std::string PrettyPrint(const Expr& e) {
  std::string out;
  Print(e, out);
  return out;
}

std::string PrettyPrint(const Program& p) {
  std::string out = "fn " + p.name + "(";
  for (std::size_t i = 0; i < p.params.size(); ++i) {
    if (i) out += ", ";
    out += p.params[i].name + ": " + std::string(ToString(p.params[i].type));
  }
  out += ") -> " + std::string(ToString(p.return_type)) + " {\n";
  PrintBlock(p.body, 1, out);
  out += "}\n";
  return out;
}

}  // namespace crosscov
