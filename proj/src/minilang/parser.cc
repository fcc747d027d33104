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

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "crosscov/minilang.h"

namespace crosscov {
namespace {

enum class Tok {
  kEnd,
  kIdent,
  kInt,
  kString,
  // keywords
  kFn,
  kIntType,
  kBoolType,
  kVar,
  kIf,
  kElse,
  kWhile,
  kReturn,
  kFail,
  kTrue,
  kFalse,
  // punctuation
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kComma,
  kColon,
  kSemi,
  kArrow,
  kAssign,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kPercent,
  kLt,
  kLe,
  kGt,
  kGe,
  kEqEq,
  kNe,
  kAndAnd,
  kOrOr,
  kBang,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourceLocation loc;
};

Tok Keyword(std::string_view word) {
  if (word == "fn") return Tok::kFn;
  if (word == "int") return Tok::kIntType;
  if (word == "bool") return Tok::kBoolType;
  if (word == "var") return Tok::kVar;
  if (word == "if") return Tok::kIf;
  if (word == "else") return Tok::kElse;
  if (word == "while") return Tok::kWhile;
  if (word == "return") return Tok::kReturn;
  if (word == "fail") return Tok::kFail;
  if (word == "true") return Tok::kTrue;
  if (word == "false") return Tok::kFalse;
  return Tok::kIdent;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipSpaceAndComments();
      Token t;
      t.loc = {line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          Advance();
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        t.kind = Keyword(t.text);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          Advance();
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        t.kind = Tok::kInt;
      } else if (c == '"') {
        Advance();
        while (pos_ < src_.size() && src_[pos_] != '"') {
          if (src_[pos_] == '\\') {
            Advance();
            if (pos_ >= src_.size()) break;
            char e = src_[pos_];
            if (e != '"' && e != '\\') {
              throw SyntaxError("unsupported escape sequence", {line_, col_});
            }
          }
          if (src_[pos_] == '\n') {
            throw SyntaxError("unterminated string literal", t.loc);
          }
          t.text.push_back(src_[pos_]);
          Advance();
        }
        if (pos_ >= src_.size()) {
          throw SyntaxError("unterminated string literal", t.loc);
        }
        Advance();
        t.kind = Tok::kString;
      } else {
        t.kind = Punct(t.loc);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool Peek(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void SkipSpaceAndComments() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        Advance();
      } else if (Peek("//")) {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
      } else {
        return;
      }
    }
  }

  Tok Punct(SourceLocation loc) {
    struct Entry {
      std::string_view text;
      Tok kind;
    };
    // Longest spellings first.
    static constexpr Entry kTable[] = {
        {"->", Tok::kArrow}, {"<=", Tok::kLe},     {">=", Tok::kGe},
        {"==", Tok::kEqEq},  {"!=", Tok::kNe},     {"&&", Tok::kAndAnd},
        {"||", Tok::kOrOr},  {"(", Tok::kLParen},  {")", Tok::kRParen},
        {"{", Tok::kLBrace}, {"}", Tok::kRBrace},  {",", Tok::kComma},
        {":", Tok::kColon},  {";", Tok::kSemi},    {"=", Tok::kAssign},
        {"+", Tok::kPlus},   {"-", Tok::kMinus},   {"*", Tok::kStar},
        {"/", Tok::kSlash},  {"%", Tok::kPercent}, {"<", Tok::kLt},
        {">", Tok::kGt},     {"!", Tok::kBang},
    };
    for (const Entry& e : kTable) {
      if (Peek(e.text)) {
        for (std::size_t i = 0; i < e.text.size(); ++i) Advance();
        return e.kind;
      }
    }
    throw SyntaxError(std::string("unexpected character '") + src_[pos_] + "'",
                      loc);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string Describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  if (t.kind == Tok::kString) return "string literal";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {
    // Punctuation tokens carry no text from the lexer; recover it for
    // diagnostics.
    for (Token& t : toks_) {
      if (t.text.empty() && t.kind != Tok::kEnd && t.kind != Tok::kString) {
        t.text = PunctText(t.kind);
      }
    }
  }

  Program ParseProgram() {
    Program p;
    Expect(Tok::kFn, "'fn'");
    p.name = Expect(Tok::kIdent, "function name").text;
    Expect(Tok::kLParen, "'('");
    if (!At(Tok::kRParen)) {
      do {
        Param param;
        param.name = Expect(Tok::kIdent, "parameter name").text;
        Expect(Tok::kColon, "':'");
        param.type = ParseType();
        p.params.push_back(std::move(param));
      } while (Accept(Tok::kComma));
    }
    Expect(Tok::kRParen, "')'");
    Expect(Tok::kArrow, "'->'");
    p.return_type = ParseType();
    p.body = ParseBlock();
    Expect(Tok::kEnd, "end of input");
    return p;
  }

 private:
  static std::string PunctText(Tok k) {
    switch (k) {
      case Tok::kLParen: return "(";
      case Tok::kRParen: return ")";
      case Tok::kLBrace: return "{";
      case Tok::kRBrace: return "}";
      case Tok::kComma: return ",";
      case Tok::kColon: return ":";
      case Tok::kSemi: return ";";
      case Tok::kArrow: return "->";
      case Tok::kAssign: return "=";
      case Tok::kPlus: return "+";
      case Tok::kMinus: return "-";
      case Tok::kStar: return "*";
      case Tok::kSlash: return "/";
      case Tok::kPercent: return "%";
      case Tok::kLt: return "<";
      case Tok::kLe: return "<=";
      case Tok::kGt: return ">";
      case Tok::kGe: return ">=";
      case Tok::kEqEq: return "==";
      case Tok::kNe: return "!=";
      case Tok::kAndAnd: return "&&";
      case Tok::kOrOr: return "||";
      case Tok::kBang: return "!";
      default: return "";
    }
  }

  const Token& Cur() const { return toks_[pos_]; }
  bool At(Tok k) const { return Cur().kind == k; }

  bool Accept(Tok k) {
    if (!At(k)) return false;
    ++pos_;
    return true;
  }

  const Token& Expect(Tok k, std::string_view what) {
    if (!At(k)) {
      throw SyntaxError(
          "expected " + std::string(what) + ", found " + Describe(Cur()),
          Cur().loc);
    }
    return toks_[pos_++];
  }

  Type ParseType() {
    if (Accept(Tok::kIntType)) return Type::kInt;
    if (Accept(Tok::kBoolType)) return Type::kBool;
    throw SyntaxError("expected type, found " + Describe(Cur()), Cur().loc);
  }

  std::vector<Stmt> ParseBlock() {
    Expect(Tok::kLBrace, "'{'");
    std::vector<Stmt> body;
    while (!At(Tok::kRBrace)) {
      if (At(Tok::kEnd)) {
        throw SyntaxError("expected '}', found end of input", Cur().loc);
      }
      body.push_back(ParseStmt());
    }
    Expect(Tok::kRBrace, "'}'");
    return body;
  }

  Stmt ParseIf() {
    Stmt s;
    s.kind = Stmt::Kind::kIf;
    s.loc = Expect(Tok::kIf, "'if'").loc;
    Expect(Tok::kLParen, "'('");
    s.expr = ParseExpr();
    Expect(Tok::kRParen, "')'");
    s.then_body = ParseBlock();
    if (Accept(Tok::kElse)) {
      s.has_else = true;
      if (At(Tok::kIf)) {
        s.else_body.push_back(ParseIf());
      } else {
        s.else_body = ParseBlock();
      }
    }
    return s;
  }

  Stmt ParseStmt() {
    Stmt s;
    s.loc = Cur().loc;
    switch (Cur().kind) {
      case Tok::kVar:
        ++pos_;
        s.kind = Stmt::Kind::kDecl;
        s.name = Expect(Tok::kIdent, "variable name").text;
        Expect(Tok::kColon, "':'");
        s.decl_type = ParseType();
        Expect(Tok::kAssign, "'='");
        s.expr = ParseExpr();
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kIf:
        return ParseIf();
      case Tok::kWhile:
        ++pos_;
        s.kind = Stmt::Kind::kWhile;
        Expect(Tok::kLParen, "'('");
        s.expr = ParseExpr();
        Expect(Tok::kRParen, "')'");
        s.then_body = ParseBlock();
        return s;
      case Tok::kReturn:
        ++pos_;
        s.kind = Stmt::Kind::kReturn;
        s.expr = ParseExpr();
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kFail:
        ++pos_;
        s.kind = Stmt::Kind::kFail;
        Expect(Tok::kLParen, "'('");
        s.message = Expect(Tok::kString, "string literal").text;
        Expect(Tok::kRParen, "')'");
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kIdent:
        s.kind = Stmt::Kind::kAssign;
        s.name = Cur().text;
        ++pos_;
        Expect(Tok::kAssign, "'='");
        s.expr = ParseExpr();
        Expect(Tok::kSemi, "';'");
        return s;
      default:
        throw SyntaxError("expected statement, found " + Describe(Cur()),
                          Cur().loc);
    }
  }

  // Precedence climbing, loosest first: || , && , comparison, + -, * / %.
  Expr ParseExpr() { return ParseOr(); }

  // After a binary operator has been consumed, the next token must be able
  // to start an operand; otherwise the operator itself is the error site.
  void RequireOperand(const Token& op) {
    switch (Cur().kind) {
      case Tok::kIdent:
      case Tok::kInt:
      case Tok::kTrue:
      case Tok::kFalse:
      case Tok::kLParen:
      case Tok::kMinus:
      case Tok::kBang:
        return;
      default:
        throw SyntaxError("missing right operand for '" + op.text + "'",
                          op.loc);
    }
  }

  Expr ParseOr() {
    Expr lhs = ParseAnd();
    while (At(Tok::kOrOr)) {
      const Token& op = toks_[pos_++];
      RequireOperand(op);
      lhs = Expr::Binary(Op::kOr, std::move(lhs), ParseAnd(), op.loc);
    }
    return lhs;
  }

  Expr ParseAnd() {
    Expr lhs = ParseComparison();
    while (At(Tok::kAndAnd)) {
      const Token& op = toks_[pos_++];
      RequireOperand(op);
      lhs = Expr::Binary(Op::kAnd, std::move(lhs), ParseComparison(), op.loc);
    }
    return lhs;
  }

  static Op ComparisonOp(Tok k) {
    switch (k) {
      case Tok::kLt: return Op::kLt;
      case Tok::kLe: return Op::kLe;
      case Tok::kGt: return Op::kGt;
      case Tok::kGe: return Op::kGe;
      case Tok::kEqEq: return Op::kEq;
      case Tok::kNe: return Op::kNe;
      default: return Op::kNone;
    }
  }

  // Comparisons do not chain: `a < b < c` is rejected.
  Expr ParseComparison() {
    Expr lhs = ParseAdditive();
    Op op = ComparisonOp(Cur().kind);
    if (op == Op::kNone) return lhs;
    const Token& tok = toks_[pos_++];
    RequireOperand(tok);
    Expr rhs = ParseAdditive();
    if (ComparisonOp(Cur().kind) != Op::kNone) {
      throw SyntaxError("comparison operators do not chain", Cur().loc);
    }
    return Expr::Binary(op, std::move(lhs), std::move(rhs), tok.loc);
  }

  Expr ParseAdditive() {
    Expr lhs = ParseMultiplicative();
    while (At(Tok::kPlus) || At(Tok::kMinus)) {
      const Token& tok = toks_[pos_++];
      RequireOperand(tok);
      Op op = tok.kind == Tok::kPlus ? Op::kAdd : Op::kSub;
      lhs = Expr::Binary(op, std::move(lhs), ParseMultiplicative(), tok.loc);
    }
    return lhs;
  }

  Expr ParseMultiplicative() {
    Expr lhs = ParseUnary();
    while (At(Tok::kStar) || At(Tok::kSlash) || At(Tok::kPercent)) {
      const Token& tok = toks_[pos_++];
      RequireOperand(tok);
      Op op = tok.kind == Tok::kStar    ? Op::kMul
              : tok.kind == Tok::kSlash ? Op::kDiv
                                        : Op::kMod;
      lhs = Expr::Binary(op, std::move(lhs), ParseUnary(), tok.loc);
    }
    return lhs;
  }

  Expr ParseUnary() {
    if (At(Tok::kMinus) || At(Tok::kBang)) {
      const Token& tok = toks_[pos_++];
      RequireOperand(tok);
      Op op = tok.kind == Tok::kMinus ? Op::kNeg : Op::kNot;
      return Expr::Unary(op, ParseUnary(), tok.loc);
    }
    return ParsePrimary();
  }

  Expr ParsePrimary() {
    const Token& t = Cur();
    switch (t.kind) {
      case Tok::kInt: {
        std::int64_t v = 0;
        auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc()) {
          throw SyntaxError("integer literal out of range", t.loc);
        }
        ++pos_;
        return Expr::IntLit(v, t.loc);
      }
      case Tok::kTrue:
        ++pos_;
        return Expr::BoolLit(true, t.loc);
      case Tok::kFalse:
        ++pos_;
        return Expr::BoolLit(false, t.loc);
      case Tok::kIdent:
        ++pos_;
        return Expr::Var(t.text, t.loc);
      case Tok::kLParen: {
        ++pos_;
        Expr e = ParseExpr();
        Expect(Tok::kRParen, "')'");
        return e;
      }
      default:
        throw SyntaxError("expected expression, found " + Describe(t), t.loc);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program Parse(std::string_view source) {
  Parser parser(Lexer(source).Run());
  Program p = parser.ParseProgram();
  p.source = std::string(source);
  CheckAndNumber(p);
  return p;
}

}  // namespace crosscov
