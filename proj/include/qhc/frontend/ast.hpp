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

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qhc/error.hpp"
#include "qhc/ir/module.hpp"

namespace qhc::frontend {

// Structural equality on every node ignores source locations, so a program
// re-parsed from its printed form compares equal to the original.

struct Expr {
  enum class Kind { Int, Float, Pi, Name, Neg, Add, Sub, Mul, Div, Mod };

  Kind kind = Kind::Int;
  std::int64_t int_value = 0;
  double float_value = 0.0;
  std::string name;
  std::vector<Expr> operands;
  SourceLocation loc;

  static Expr integer(std::int64_t v, SourceLocation at = {});
  static Expr floating(double v, SourceLocation at = {});
  static Expr pi(SourceLocation at = {});
  static Expr named(std::string n, SourceLocation at = {});
  static Expr unary_minus(Expr e, SourceLocation at = {});
  static Expr binary(Kind op, Expr lhs, Expr rhs, SourceLocation at = {});

  bool is_binary() const { return kind >= Kind::Add; }
  friend bool operator==(const Expr &a, const Expr &b);
};

/// `name[index]`: an element of a qbit, cbit, or shared-parameter array.
struct ElementRef {
  std::string array;
  Expr index;
  SourceLocation loc;

  friend bool operator==(const ElementRef &a, const ElementRef &b);
};

using Arg = std::variant<ElementRef, Expr>;

struct GateCall {
  std::string gate;
  std::vector<Arg> args;
  SourceLocation loc;

  friend bool operator==(const GateCall &a, const GateCall &b);
};

struct KernelCallStmt {
  std::string kernel;
  SourceLocation loc;

  friend bool operator==(const KernelCallStmt &a, const KernelCallStmt &b);
};

struct Stmt;

/// `for var in from..to { ... }` over the half-open range [from, to).
struct ForLoop {
  std::string var;
  Expr from;
  Expr to;
  std::vector<Stmt> body;
  SourceLocation loc;

  friend bool operator==(const ForLoop &a, const ForLoop &b);
};

struct Stmt {
  std::variant<GateCall, KernelCallStmt, ForLoop> node;

  friend bool operator==(const Stmt &a, const Stmt &b) { return a.node == b.node; }
};

struct RegisterDeclNode {
  ir::RegisterKind kind = ir::RegisterKind::Qubit;
  std::string name;
  Expr length;
  SourceLocation loc;

  friend bool operator==(const RegisterDeclNode &a, const RegisterDeclNode &b);
};

struct ConstDecl {
  std::string name;
  Expr value;
  SourceLocation loc;

  friend bool operator==(const ConstDecl &a, const ConstDecl &b);
};

struct KernelDecl {
  std::string name;
  std::vector<Stmt> body;
  SourceLocation loc;

  friend bool operator==(const KernelDecl &a, const KernelDecl &b);
};

using Decl = std::variant<RegisterDeclNode, ConstDecl, KernelDecl>;

struct AstProgram {
  std::vector<Decl> decls;

  friend bool operator==(const AstProgram &a, const AstProgram &b) {
    return a.decls == b.decls;
  }
};

}  // namespace qhc::frontend
