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

#include "qhc/frontend/ast.hpp"

namespace qhc::frontend {

Expr Expr::integer(std::int64_t v, SourceLocation at) {
  Expr e;
  e.kind = Kind::Int;
  e.int_value = v;
  e.loc = at;
  return e;
}

Expr Expr::floating(double v, SourceLocation at) {
  Expr e;
  e.kind = Kind::Float;
  e.float_value = v;
  e.loc = at;
  return e;
}

Expr Expr::pi(SourceLocation at) {
  Expr e;
  e.kind = Kind::Pi;
  e.loc = at;
  return e;
}

Expr Expr::named(std::string n, SourceLocation at) {
  Expr e;
  e.kind = Kind::Name;
  e.name = std::move(n);
  e.loc = at;
  return e;
}

Expr Expr::unary_minus(Expr operand, SourceLocation at) {
  Expr e;
  e.kind = Kind::Neg;
  e.operands.push_back(std::move(operand));
  e.loc = at;
  return e;
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs, SourceLocation at) {
  Expr e;
  e.kind = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  e.loc = at;
  return e;
}

bool operator==(const Expr &a, const Expr &b) {
  return a.kind == b.kind && a.int_value == b.int_value &&
         a.float_value == b.float_value && a.name == b.name &&
         a.operands == b.operands;
}

bool operator==(const ElementRef &a, const ElementRef &b) {
  return a.array == b.array && a.index == b.index;
}

bool operator==(const GateCall &a, const GateCall &b) {
  return a.gate == b.gate && a.args == b.args;
}

bool operator==(const KernelCallStmt &a, const KernelCallStmt &b) {
  return a.kernel == b.kernel;
}

bool operator==(const ForLoop &a, const ForLoop &b) {
  return a.var == b.var && a.from == b.from && a.to == b.to && a.body == b.body;
}

bool operator==(const RegisterDeclNode &a, const RegisterDeclNode &b) {
  return a.kind == b.kind && a.name == b.name && a.length == b.length;
}

bool operator==(const ConstDecl &a, const ConstDecl &b) {
  return a.name == b.name && a.value == b.value;
}

bool operator==(const KernelDecl &a, const KernelDecl &b) {
  return a.name == b.name && a.body == b.body;
}

}  // namespace qhc::frontend
