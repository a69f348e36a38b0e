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

#include "eval.hpp"

#include <cmath>
#include <numbers>

namespace qhc::frontend::detail {

const LoopVar *Scope::find_loop(std::string_view name) const {
  for (auto it = loops.rbegin(); it != loops.rend(); ++it) {
    if (it->name == name) return &*it;
  }
  return nullptr;
}

namespace {

Value int_value(std::int64_t v) { return Value{true, true, v, 0.0}; }
Value real_value(double v) { return Value{false, true, 0, v}; }

[[noreturn]] void overflow(const Expr &e) {
  throw Error(ErrorCode::InvalidExpression, "integer overflow", e.loc);
}

Value resolve_name(const Expr &e, const Scope &scope, ExprContext ctx) {
  if (const LoopVar *v = scope.find_loop(e.name)) {
    if (ctx == ExprContext::Constant) {
      throw Error(ErrorCode::NonConstantLoopBound,
                  "loop variable '" + e.name + "' used in a constant expression",
                  e.loc);
    }
    Value out = int_value(v->value.value_or(0));
    out.known = v->value.has_value();
    return out;
  }
  const SymbolTable &sym = *scope.symbols;
  if (auto it = sym.constants.find(e.name); it != sym.constants.end()) {
    return int_value(it->second);
  }
  if (sym.find_register(e.name) != nullptr) {
    throw Error(ErrorCode::TypeMismatch,
                "array '" + e.name + "' used as a scalar; index it instead",
                e.loc);
  }
  throw Error(ErrorCode::UndefinedSymbol, "undefined symbol '" + e.name + "'",
              e.loc);
}

Value arith(const Expr &e, const Value &a, const Value &b) {
  Value out;
  out.known = a.known && b.known;
  if (a.is_int && b.is_int) {
    std::int64_t r = 0;
    switch (e.kind) {
      case Expr::Kind::Add:
        if (__builtin_add_overflow(a.i, b.i, &r)) overflow(e);
        break;
      case Expr::Kind::Sub:
        if (__builtin_sub_overflow(a.i, b.i, &r)) overflow(e);
        break;
      case Expr::Kind::Mul:
        if (__builtin_mul_overflow(a.i, b.i, &r)) overflow(e);
        break;
      case Expr::Kind::Div:
      case Expr::Kind::Mod:
        if (out.known && b.i == 0) {
          throw Error(ErrorCode::InvalidExpression, "division by zero", e.loc);
        }
        if (!out.known) break;
        if (a.i == INT64_MIN && b.i == -1) overflow(e);
        r = e.kind == Expr::Kind::Div ? a.i / b.i : a.i % b.i;
        break;
      default:
        break;
    }
    out.is_int = true;
    out.i = out.known ? r : 0;
    return out;
  }
  if (e.kind == Expr::Kind::Mod) {
    throw Error(ErrorCode::TypeMismatch, "'%' needs integer operands", e.loc);
  }
  const double x = a.as_double(), y = b.as_double();
  double r = 0.0;
  switch (e.kind) {
    case Expr::Kind::Add: r = x + y; break;
    case Expr::Kind::Sub: r = x - y; break;
    case Expr::Kind::Mul: r = x * y; break;
    case Expr::Kind::Div:
      if (out.known && y == 0.0) {
        throw Error(ErrorCode::InvalidExpression, "division by zero", e.loc);
      }
      r = x / y;
      break;
    default: break;
  }
  out.is_int = false;
  out.d = out.known ? r : 0.0;
  if (out.known && !std::isfinite(out.d)) {
    throw Error(ErrorCode::InvalidExpression, "non-finite value", e.loc);
  }
  return out;
}

}  // namespace

Value evaluate(const Expr &e, const Scope &scope, ExprContext ctx) {
  switch (e.kind) {
    case Expr::Kind::Int:
      return int_value(e.int_value);
    case Expr::Kind::Float:
    case Expr::Kind::Pi:
      if (ctx != ExprContext::Angle) {
        throw Error(ErrorCode::TypeMismatch,
                    "floating-point value in an integer expression", e.loc);
      }
      return real_value(e.kind == Expr::Kind::Pi ? std::numbers::pi
                                                 : e.float_value);
    case Expr::Kind::Name:
      return resolve_name(e, scope, ctx);
    case Expr::Kind::Neg: {
      Value v = evaluate(e.operands.at(0), scope, ctx);
      if (v.is_int) {
        if (v.i == INT64_MIN) overflow(e);
        v.i = -v.i;
      } else {
        v.d = -v.d;
      }
      return v;
    }
    default:
      return arith(e, evaluate(e.operands.at(0), scope, ctx),
                   evaluate(e.operands.at(1), scope, ctx));
  }
}

Value evaluate_int(const Expr &e, const Scope &scope, ExprContext ctx) {
  Value v = evaluate(e, scope, ctx);
  if (!v.is_int) {
    throw Error(ErrorCode::TypeMismatch, "expected an integer expression", e.loc);
  }
  return v;
}

}  // namespace qhc::frontend::detail
