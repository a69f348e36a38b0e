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

#include <string>
#include <string_view>
#include <vector>

#include "qhc/frontend/ast.hpp"
#include "qhc/frontend/lexer.hpp"

namespace qhc::frontend {

/// Recursive-descent parser for the .qk grammar. Throws ParseError carrying
/// the location of the offending token.
AstProgram parse(const std::vector<Token> &tokens);

AstProgram parse_source(std::string_view source);

/// Pretty-prints a program back to .qk source.
std::string print_program(const AstProgram &program);
std::string print_expr(const Expr &expr);

}  // namespace qhc::frontend
