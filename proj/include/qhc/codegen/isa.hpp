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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qhc/ir/gate.hpp"
#include "qhc/ir/module.hpp"

namespace qhc::codegen {

// Word 0 layout, little-endian:
//   [0,8) opcode  [8,16) q0  [16,24) q1  [24,32) q2  [32,40) cbit
//   [40,48) param mode  [48,64) reserved, zero
// A second word carries the parameter when mode != 0: the double's bit
// pattern for immediates, or a .qsym entry index for symbols.

enum class ParamMode : std::uint8_t { None = 0, Immediate = 1, Symbol = 2 };

inline constexpr std::uint8_t kNoOperand = 0xFF;

struct MachineInstr {
  std::uint8_t opcode = 0;
  std::array<std::uint8_t, 3> qubits = {kNoOperand, kNoOperand, kNoOperand};
  std::uint8_t cbit = kNoOperand;
  ParamMode mode = ParamMode::None;
  std::uint64_t payload = 0;

  double immediate() const;
  std::size_t word_count() const { return mode == ParamMode::None ? 1 : 2; }
  bool operator==(const MachineInstr &) const = default;
};

const std::map<ir::GateId, std::uint8_t> &opcode_table();
std::optional<std::uint8_t> opcode_for(ir::GateId gate);
std::optional<ir::GateId> gate_for_opcode(std::uint8_t opcode);

std::uint64_t pack_word0(const MachineInstr &mi);
void encode(const MachineInstr &mi, std::vector<std::uint64_t> &words);

/// Decodes raw words. Throws BadOpcode, TruncatedParamWord,
/// NonzeroReservedBits, or MalformedInstruction (operand slots or parameter
/// mode inconsistent with the gate).
std::vector<MachineInstr> decode_words(std::span<const std::uint64_t> words);

std::vector<std::uint8_t> to_bytes(std::span<const std::uint64_t> words);
/// Throws MalformedInstruction if the length is not a multiple of 8.
std::vector<std::uint64_t> to_words(std::span<const std::uint8_t> bytes);

/// Maps a symbol reference to its .qsym entry index.
std::uint64_t symbol_index(const ir::QModule &module, const ir::SymbolRef &ref);

struct EncodedKernel {
  std::vector<std::uint8_t> bytes;
  std::vector<std::uint64_t> symbols_used;  // .qsym indices, in first-use order
};

/// Encodes an inlined kernel. Qubit and cbit operands must fit in a byte.
/// Throws UnencodableGate.
EncodedKernel encode_kernel(const ir::QKernel &kernel, const ir::QModule &module);

/// Inverse of encode_kernel. `symbols` is the .qsym table in index order.
std::vector<ir::Instr> decode_kernel(std::span<const std::uint8_t> bytes,
                                     std::span<const ir::SymbolRef> symbols);

MachineInstr to_machine(const ir::Instr &instr, const ir::QModule &module);
ir::Instr from_machine(const MachineInstr &mi,
                       std::span<const ir::SymbolRef> symbols);

}  // namespace qhc::codegen
