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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhc/ir/gate.hpp"

namespace qhc::ir {

/// Reference to one element of a shared parameter array.
struct SymbolRef {
  std::string array;
  std::uint32_t index = 0;

  auto operator<=>(const SymbolRef &) const = default;
};

/// None, an immediate angle in radians, or a shared-parameter symbol that the
/// runtime resolves at dispatch time.
using ParamOperand = std::variant<std::monostate, double, SymbolRef>;

inline bool has_symbol(const ParamOperand &p) {
  return std::holds_alternative<SymbolRef>(p);
}
inline bool has_immediate(const ParamOperand &p) {
  return std::holds_alternative<double>(p);
}

/// One quantum operation. Qubit operands are flat program indices (registers
/// laid out in declaration order) until the kernel is mapped, and physical
/// indices afterwards. The cbit operand is a flat classical-bit index.
struct Instr {
  GateId gate = GateId::X;
  std::vector<std::uint32_t> qubits;
  std::optional<std::uint32_t> cbit;
  ParamOperand param;

  bool operator==(const Instr &) const = default;
};

struct KernelCall {
  std::string callee;

  bool operator==(const KernelCall &) const = default;
};

using KernelOp = std::variant<Instr, KernelCall>;

struct QKernel {
  std::string name;
  std::vector<KernelOp> body;
  bool inlined = false;
  bool mapped = false;
  bool scheduled = false;
  /// Start cycle per body entry, filled by scheduling.
  std::vector<std::uint64_t> start_cycles;
  std::uint64_t depth = 0;
  /// Final program-to-physical placement, filled by mapping.
  std::vector<std::uint32_t> placement;

  std::size_t instruction_count() const;
  bool operator==(const QKernel &) const = default;
};

enum class RegisterKind { Qubit, Cbit, Shared };

std::string_view register_kind_name(RegisterKind kind);

struct RegisterDecl {
  RegisterKind kind = RegisterKind::Qubit;
  std::string name;
  std::uint32_t length = 1;

  bool operator==(const RegisterDecl &) const = default;
};

struct QModule {
  std::vector<RegisterDecl> declarations;
  std::vector<QKernel> kernels;

  const RegisterDecl *find_register(std::string_view name) const;
  /// Flat index of element 0 of the named register among registers of the
  /// same kind, or nullopt if no such register exists.
  std::optional<std::uint32_t> register_offset(RegisterKind kind,
                                               std::string_view name) const;
  /// Inverse of register_offset: the register and element for a flat index.
  std::optional<std::pair<const RegisterDecl *, std::uint32_t>> locate(
      RegisterKind kind, std::uint32_t flat) const;
  std::uint32_t register_total(RegisterKind kind) const;
  std::uint32_t num_qubits() const { return register_total(RegisterKind::Qubit); }
  std::uint32_t num_cbits() const { return register_total(RegisterKind::Cbit); }

  QKernel *find_kernel(std::string_view name);
  const QKernel *find_kernel(std::string_view name) const;

  bool operator==(const QModule &) const = default;
};

/// Line-oriented textual form. parse_ir(print_ir(m)) == m for valid modules.
std::string print_ir(const QModule &module);
QModule parse_ir(std::string_view text);

/// Checks every structural invariant and returns the list of violations;
/// an empty list means the module is valid.
std::vector<std::string> validate(const QModule &module);

/// Formats a double so that it parses back to the same value and always
/// reads as a floating-point literal.
std::string format_double(double value);

}  // namespace qhc::ir
