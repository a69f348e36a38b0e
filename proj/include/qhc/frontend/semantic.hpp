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
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qhc/frontend/ast.hpp"
#include "qhc/ir/module.hpp"

namespace qhc::frontend {

/// Largest accepted array length and unrolled kernel size.
inline constexpr std::int64_t kMaxArrayLength = std::int64_t{1} << 20;
inline constexpr std::size_t kMaxKernelInstructions = std::size_t{1} << 20;

struct SymbolTable {
  /// Registers in declaration order. Flat qubit and cbit indices follow this
  /// order.
  std::vector<ir::RegisterDecl> registers;
  std::map<std::string, std::int64_t, std::less<>> constants;
  /// Kernel name to its index in AstProgram::decls.
  std::map<std::string, std::size_t, std::less<>> kernels;
  std::vector<std::string> kernel_order;

  const ir::RegisterDecl *find_register(std::string_view name) const;
};

/// Resolves names, evaluates constants and array lengths, checks gate arity
/// and operand kinds, and rejects recursive kernel calls.
SymbolTable analyze(const AstProgram &program);

}  // namespace qhc::frontend
