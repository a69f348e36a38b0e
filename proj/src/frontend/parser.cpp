// Copyright 2026 The QHC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qhc/frontend/parser.hpp"

#include <charconv>
#include <sstream>

#include "qhc/ir/gate.hpp"

namespace qhc::frontend {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token> &tokens) : toks_(tokens) {}

  AstProgram program() {
    if (toks_.empty() || toks_.back().kind != TokenKind::End) {
      throw Error(ErrorCode::ParseError, "token stream is not terminated");
    }
    AstProgram prog;
    while (peek().kind != TokenKind::End) prog.decls.push_back(decl());
    return prog;
  }

 private:
  const Token &peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token &advance() {
    const Token &t = peek();
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }
  static SourceLocation at(const Token &t) { return {t.line, t.column}; }

  [[noreturn]] void fail(const std::string &expected) const {
    const Token &t = peek();
    const std::string found = t.kind == TokenKind::End
                                  ? std::string("end of input")
                                  : "'" + t.text + "'";
    throw Error(ErrorCode::ParseError, "expected " + expected + ", found " + found,
                at(t));
  }

  const Token &expect_punct(std::string_view p) {
    if (!peek().is_punct(p)) fail("'" + std::string(p) + "'");
    return advance();
  }
  const Token &expect_keyword(std::string_view k) {
    if (!peek().is_keyword(k)) fail("'" + std::string(k) + "'");
    return advance();
  }
  std::string expect_ident(const char *what) {
    if (peek().kind != TokenKind::Identifier) fail(what);
    return advance().text;
  }

  Decl decl() {
    const Token &t = peek();
    const SourceLocation loc = at(t);
    if (t.is_keyword("qbit") || t.is_keyword("cbit")) {
      const ir::RegisterKind kind =
          t.text == "qbit" ? ir::RegisterKind::Qubit : ir::RegisterKind::Cbit;
      advance();
      return register_decl(kind, loc);
    }
    if (t.is_keyword("shared")) {
      advance();
      expect_keyword("double");
      return register_decl(ir::RegisterKind::Shared, loc);
    }
    if (t.is_keyword("const")) {
      advance();
      expect_keyword("int");
      ConstDecl c;
      c.loc = loc;
      c.name = expect_ident("constant name");
      expect_punct("=");
      c.value = expr();
      expect_punct(";");
      return c;
    }
    if (t.is_keyword("kernel")) {
      advance();
      KernelDecl k;
      k.loc = loc;
      k.name = expect_ident("kernel name");
      expect_punct("(");
      expect_punct(")");
      k.body = block();
      return k;
    }
    fail("a declaration");
  }

  RegisterDeclNode register_decl(ir::RegisterKind kind, SourceLocation loc) {
    RegisterDeclNode d;
    d.kind = kind;
    d.loc = loc;
    d.name = expect_ident("array name");
    expect_punct("[");
    d.length = expr();
    expect_punct("]");
    expect_punct(";");
    return d;
  }

  std::vector<Stmt> block() {
    expect_punct("{");
    std::vector<Stmt> body;
    while (!peek().is_punct("}")) {
      if (peek().kind == TokenKind::End) fail("'}'");
      body.push_back(stmt());
    }
    advance();
    return body;
  }

  Stmt stmt() {
    const Token &t = peek();
    const SourceLocation loc = at(t);
    if (t.is_keyword("for")) {
      advance();
      ForLoop loop;
      loop.loc = loc;
      loop.var = expect_ident("loop variable");
      expect_keyword("in");
      loop.from = expr();
      expect_punct("..");
      loop.to = expr();
      loop.body = block();
      return Stmt{std::move(loop)};
    }
    if (t.kind != TokenKind::Identifier) fail("a statement");
    const std::string name = advance().text;
    expect_punct("(");
    std::vector<Arg> args;
    if (!peek().is_punct(")")) {
      args.push_back(arg());
      while (peek().is_punct(",")) {
        advance();
        args.push_back(arg());
      }
    }
    expect_punct(")");
    expect_punct(";");
    if (ir::find_gate(name) == nullptr && args.empty()) {
      return Stmt{KernelCallStmt{name, loc}};
    }
    return Stmt{GateCall{name, std::move(args), loc}};
  }

  Arg arg() {
    if (peek().kind == TokenKind::Identifier && peek(1).is_punct("[")) {
      ElementRef ref;
      ref.loc = at(peek());
      ref.array = advance().text;
      advance();
      ref.index = expr();
      expect_punct("]");
      if (!peek().is_punct(",") && !peek().is_punct(")")) {
        fail("',' or ')' after an array element (elements cannot be used inside "
             "expressions)");
      }
      return ref;
    }
    return expr();
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().is_punct("+") || peek().is_punct("-")) {
      const Token &op = advance();
      const Expr::Kind kind = op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = Expr::binary(kind, std::move(lhs), term(), at(op));
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().is_punct("*") || peek().is_punct("/") || peek().is_punct("%")) {
      const Token &op = advance();
      const Expr::Kind kind = op.text == "*"   ? Expr::Kind::Mul
                              : op.text == "/" ? Expr::Kind::Div
                                               : Expr::Kind::Mod;
      lhs = Expr::binary(kind, std::move(lhs), unary(), at(op));
    }
    return lhs;
  }

  Expr unary() {
    if (peek().is_punct("-")) {
      const SourceLocation loc = at(advance());
      return Expr::unary_minus(unary(), loc);
    }
    return primary();
  }

  Expr primary() {
    const Token &t = peek();
    const SourceLocation loc = at(t);
    switch (t.kind) {
      case TokenKind::Integer: {
        std::int64_t v = 0;
        const auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          throw Error(ErrorCode::ParseError,
                      "integer literal '" + t.text + "' out of range", loc);
        }
        advance();
        return Expr::integer(v, loc);
      }
      case TokenKind::Float: {
        double v = 0;
        const auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          throw Error(ErrorCode::ParseError,
                      "float literal '" + t.text + "' out of range", loc);
        }
        advance();
        return Expr::floating(v, loc);
      }
      case TokenKind::Keyword:
        if (t.text == "pi") {
          advance();
          return Expr::pi(loc);
        }
        break;
      case TokenKind::Identifier:
        if (peek(1).is_punct("[")) {
          fail("an expression (array elements are only allowed as whole "
               "arguments)");
        }
        return Expr::named(advance().text, loc);
      case TokenKind::Punct:
        if (t.text == "(") {
          advance();
          Expr inner = expr();
          expect_punct(")");
          return inner;
        }
        break;
      case TokenKind::End:
        break;
    }
    fail("an expression");
  }

  const std::vector<Token> &toks_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
    case Expr::Kind::Mod:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    default:
      return 4;
  }
}

std::string_view op_text(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add: return " + ";
    case Expr::Kind::Sub: return " - ";
    case Expr::Kind::Mul: return " * ";
    case Expr::Kind::Div: return " / ";
    case Expr::Kind::Mod: return " % ";
    default: return "?";
  }
}

void print_expr_to(std::ostream &out, const Expr &e, int parent, bool right) {
  const int p = precedence(e.kind);
  switch (e.kind) {
    case Expr::Kind::Int:
      out << e.int_value;
      return;
    case Expr::Kind::Float:
      out << ir::format_double(e.float_value);
      return;
    case Expr::Kind::Pi:
      out << "pi";
      return;
    case Expr::Kind::Name:
      out << e.name;
      return;
    case Expr::Kind::Neg:
      out << '-';
      print_expr_to(out, e.operands[0], p, false);
      return;
    default: {
      const bool paren = p < parent || (p == parent && right);
      if (paren) out << '(';
      print_expr_to(out, e.operands[0], p, false);
      out << op_text(e.kind);
      print_expr_to(out, e.operands[1], p, true);
      if (paren) out << ')';
    }
  }
}

void print_stmts(std::ostream &out, const std::vector<Stmt> &body, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const Stmt &s : body) {
    if (const auto *g = std::get_if<GateCall>(&s.node)) {
      out << pad << g->gate << '(';
      for (std::size_t i = 0; i < g->args.size(); ++i) {
        if (i > 0) out << ", ";
        if (const auto *ref = std::get_if<ElementRef>(&g->args[i])) {
          out << ref->array << '[';
          print_expr_to(out, ref->index, 0, false);
          out << ']';
        } else {
          print_expr_to(out, std::get<Expr>(g->args[i]), 0, false);
        }
      }
      out << ");\n";
    } else if (const auto *c = std::get_if<KernelCallStmt>(&s.node)) {
      out << pad << c->kernel << "();\n";
    } else {
      const auto &loop = std::get<ForLoop>(s.node);
      out << pad << "for " << loop.var << " in ";
      print_expr_to(out, loop.from, 0, false);
      out << " .. ";
      print_expr_to(out, loop.to, 0, false);
      out << " {\n";
      print_stmts(out, loop.body, indent + 1);
      out << pad << "}\n";
    }
  }
}

}  // namespace

AstProgram parse(const std::vector<Token> &tokens) {
  return Parser(tokens).program();
}

AstProgram parse_source(std::string_view source) {
  return parse(tokenize(source));
}

std::string print_expr(const Expr &expr) {
  std::ostringstream out;
  print_expr_to(out, expr, 0, false);
  return out.str();
}

std::string print_program(const AstProgram &program) {
  std::ostringstream out;
  for (const Decl &d : program.decls) {
    if (const auto *r = std::get_if<RegisterDeclNode>(&d)) {
      switch (r->kind) {
        case ir::RegisterKind::Qubit: out << "qbit "; break;
        case ir::RegisterKind::Cbit: out << "cbit "; break;
        case ir::RegisterKind::Shared: out << "shared double "; break;
      }
      out << r->name << '[' << print_expr(r->length) << "];\n";
    } else if (const auto *c = std::get_if<ConstDecl>(&d)) {
      out << "const int " << c->name << " = " << print_expr(c->value) << ";\n";
    } else {
      const auto &k = std::get<KernelDecl>(d);
      out << "kernel " << k.name << "() {\n";
      print_stmts(out, k.body, 1);
      out << "}\n";
    }
  }
  return out.str();
}

}  // namespace qhc::frontend
