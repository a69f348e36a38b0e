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

#include <string_view>

#include "qhc/frontend/ast.hpp"
#include "qhc/frontend/semantic.hpp"
#include "qhc/ir/module.hpp"

namespace qhc::frontend {

/// Unrolls loops and folds constant arithmetic. Kernel calls are kept as call
/// markers for the inliner.
ir::QModule lower(const AstProgram &program, const SymbolTable &symbols);

/// tokenize + parse + analyze + lower.
ir::QModule compile_to_ir(std::string_view source);

}  // namespace qhc::frontend
