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

// Expression evaluation shared by analysis and lowering.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhc/frontend/ast.hpp"
#include "qhc/frontend/semantic.hpp"

namespace qhc::frontend::detail {

enum class ExprContext {
  Constant,  // array lengths, const values, loop bounds
  Index,     // element indices; loop variables allowed
  Angle,     // gate parameters; floats and pi allowed
};

struct LoopVar {
  std::string name;
  std::optional<std::int64_t> value;  // unknown during analysis
};

struct Scope {
  const SymbolTable *symbols = nullptr;
  std::vector<LoopVar> loops;

  const LoopVar *find_loop(std::string_view name) const;
};

/// Result of evaluating an expression. `known` is false when the value
/// depends on a loop variable whose value is not bound yet.
struct Value {
  bool is_int = true;
  bool known = true;
  std::int64_t i = 0;
  double d = 0.0;

  double as_double() const { return is_int ? static_cast<double>(i) : d; }
};

Value evaluate(const Expr &e, const Scope &scope, ExprContext ctx);

/// Evaluates and requires an integer result.
Value evaluate_int(const Expr &e, const Scope &scope, ExprContext ctx);

}  // namespace qhc::frontend::detail
