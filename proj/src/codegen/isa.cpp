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

#include "qhc/codegen/isa.hpp"

#include <bit>
#include <algorithm>
#include <cstdio>

#include "qhc/error.hpp"

namespace qhc::codegen {

namespace {

constexpr std::uint64_t kReservedMask = 0xFFFF000000000000ull;

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

[[noreturn]] void malformed(const std::string &what) {
  throw Error(ErrorCode::MalformedInstruction, what);
}

}  // namespace

double MachineInstr::immediate() const { return std::bit_cast<double>(payload); }

const std::map<ir::GateId, std::uint8_t> &opcode_table() {
  static const std::map<ir::GateId, std::uint8_t> table = [] {
    std::map<ir::GateId, std::uint8_t> t;
    for (std::size_t i = 0; i < ir::kGateCount; ++i) {
      t.emplace(static_cast<ir::GateId>(i), static_cast<std::uint8_t>(i + 1));
    }
    return t;
  }();
  return table;
}

std::optional<std::uint8_t> opcode_for(ir::GateId gate) {
  const auto &t = opcode_table();
  if (auto it = t.find(gate); it != t.end()) return it->second;
  return std::nullopt;
}

std::optional<ir::GateId> gate_for_opcode(std::uint8_t opcode) {
  if (opcode == 0 || opcode > ir::kGateCount) return std::nullopt;
  return static_cast<ir::GateId>(opcode - 1);
}

std::uint64_t pack_word0(const MachineInstr &mi) {
  return std::uint64_t{mi.opcode} | std::uint64_t{mi.qubits[0]} << 8 |
         std::uint64_t{mi.qubits[1]} << 16 | std::uint64_t{mi.qubits[2]} << 24 |
         std::uint64_t{mi.cbit} << 32 |
         std::uint64_t{static_cast<std::uint8_t>(mi.mode)} << 40;
}

void encode(const MachineInstr &mi, std::vector<std::uint64_t> &words) {
  words.push_back(pack_word0(mi));
  if (mi.mode != ParamMode::None) words.push_back(mi.payload);
}

std::vector<MachineInstr> decode_words(std::span<const std::uint64_t> words) {
  std::vector<MachineInstr> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::uint64_t w = words[i];
    if ((w & kReservedMask) != 0) {
      throw Error(ErrorCode::NonzeroReservedBits,
                  "word " + std::to_string(i) + " (" + hex(w) +
                      ") has reserved bits set");
    }
    MachineInstr mi;
    mi.opcode = static_cast<std::uint8_t>(w);
    const auto gate = gate_for_opcode(mi.opcode);
    if (!gate) {
      throw Error(ErrorCode::BadOpcode, "word " + std::to_string(i) +
                                            ": unknown opcode " +
                                            std::to_string(mi.opcode));
    }
    mi.qubits = {static_cast<std::uint8_t>(w >> 8),
                 static_cast<std::uint8_t>(w >> 16),
                 static_cast<std::uint8_t>(w >> 24)};
    mi.cbit = static_cast<std::uint8_t>(w >> 32);
    const auto mode = static_cast<std::uint8_t>(w >> 40);
    if (mode > 2) malformed("word " + std::to_string(i) + ": bad parameter mode");
    mi.mode = static_cast<ParamMode>(mode);

    const ir::GateDef &def = ir::gate_def(*gate);
    for (std::size_t s = 0; s < 3; ++s) {
      const bool used = s < def.num_qubits();
      if (used == (mi.qubits[s] == kNoOperand)) {
        malformed("word " + std::to_string(i) + ": operand slots do not match " +
                  def.name);
      }
    }
    for (std::size_t a = 0; a < def.num_qubits(); ++a) {
      for (std::size_t b = a + 1; b < def.num_qubits(); ++b) {
        if (mi.qubits[a] == mi.qubits[b]) {
          malformed("word " + std::to_string(i) + ": repeated qubit operand");
        }
      }
    }
    const bool meas = *gate == ir::GateId::MeasZ;
    if (meas == (mi.cbit == kNoOperand)) {
      malformed("word " + std::to_string(i) + ": cbit slot does not match " +
                def.name);
    }
    if (def.is_parametric() == (mi.mode == ParamMode::None)) {
      malformed("word " + std::to_string(i) + ": parameter mode does not match " +
                def.name);
    }
    if (mi.mode != ParamMode::None) {
      if (i + 1 >= words.size()) {
        throw Error(ErrorCode::TruncatedParamWord,
                    "word " + std::to_string(i) + " expects a parameter word");
      }
      mi.payload = words[++i];
    }
    out.push_back(mi);
  }
  return out;
}

std::vector<std::uint8_t> to_bytes(std::span<const std::uint64_t> words) {
  std::vector<std::uint8_t> out;
  out.reserve(words.size() * 8);
  for (std::uint64_t w : words) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(w >> (8 * b)));
  }
  return out;
}

std::vector<std::uint64_t> to_words(std::span<const std::uint8_t> bytes) {
  if (bytes.size() % 8 != 0) {
    malformed("instruction stream length " + std::to_string(bytes.size()) +
              " is not a multiple of 8");
  }
  std::vector<std::uint64_t> out(bytes.size() / 8, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    out[i / 8] |= std::uint64_t{bytes[i]} << (8 * (i % 8));
  }
  return out;
}

std::uint64_t symbol_index(const ir::QModule &module, const ir::SymbolRef &ref) {
  const auto base = module.register_offset(ir::RegisterKind::Shared, ref.array);
  const ir::RegisterDecl *reg = module.find_register(ref.array);
  if (!base || reg == nullptr || ref.index >= reg->length) {
    throw Error(ErrorCode::DanglingSymbolIndex,
                "unresolved parameter " + ref.array + "[" +
                    std::to_string(ref.index) + "]");
  }
  return *base + ref.index;
}

MachineInstr to_machine(const ir::Instr &instr, const ir::QModule &module) {
  const auto op = opcode_for(instr.gate);
  if (!op) {
    throw Error(ErrorCode::UnencodableGate,
                "no opcode for " + std::string(ir::gate_name(instr.gate)));
  }
  MachineInstr mi;
  mi.opcode = *op;
  if (instr.qubits.size() > 3) {
    throw Error(ErrorCode::UnencodableGate, "more than three qubit operands");
  }
  for (std::size_t s = 0; s < instr.qubits.size(); ++s) {
    if (instr.qubits[s] >= kNoOperand) {
      throw Error(ErrorCode::UnencodableGate,
                  "qubit " + std::to_string(instr.qubits[s]) +
                      " does not fit the operand field");
    }
    mi.qubits[s] = static_cast<std::uint8_t>(instr.qubits[s]);
  }
  if (instr.cbit) {
    if (*instr.cbit >= kNoOperand) {
      throw Error(ErrorCode::UnencodableGate,
                  "cbit " + std::to_string(*instr.cbit) +
                      " does not fit the operand field");
    }
    mi.cbit = static_cast<std::uint8_t>(*instr.cbit);
  }
  if (const auto *v = std::get_if<double>(&instr.param)) {
    mi.mode = ParamMode::Immediate;
    mi.payload = std::bit_cast<std::uint64_t>(*v);
  } else if (const auto *s = std::get_if<ir::SymbolRef>(&instr.param)) {
    mi.mode = ParamMode::Symbol;
    mi.payload = symbol_index(module, *s);
  }
  return mi;
}

ir::Instr from_machine(const MachineInstr &mi,
                       std::span<const ir::SymbolRef> symbols) {
  const auto gate = gate_for_opcode(mi.opcode);
  if (!gate) throw Error(ErrorCode::BadOpcode, "unknown opcode " + std::to_string(mi.opcode));
  ir::Instr in;
  in.gate = *gate;
  for (std::size_t s = 0; s < ir::gate_def(*gate).num_qubits(); ++s) {
    in.qubits.push_back(mi.qubits[s]);
  }
  if (mi.cbit != kNoOperand) in.cbit = mi.cbit;
  if (mi.mode == ParamMode::Immediate) {
    in.param = mi.immediate();
  } else if (mi.mode == ParamMode::Symbol) {
    if (mi.payload >= symbols.size()) {
      throw Error(ErrorCode::DanglingSymbolIndex,
                  "symbol index " + std::to_string(mi.payload) +
                      " outside a table of " + std::to_string(symbols.size()));
    }
    in.param = symbols[mi.payload];
  }
  return in;
}

EncodedKernel encode_kernel(const ir::QKernel &kernel, const ir::QModule &module) {
  std::vector<std::uint64_t> words;
  EncodedKernel out;
  for (const ir::KernelOp &op : kernel.body) {
    const auto *in = std::get_if<ir::Instr>(&op);
    if (in == nullptr) {
      throw Error(ErrorCode::UnencodableGate,
                  "kernel '" + kernel.name + "' still contains a call marker");
    }
    const MachineInstr mi = to_machine(*in, module);
    if (mi.mode == ParamMode::Symbol &&
        std::find(out.symbols_used.begin(), out.symbols_used.end(), mi.payload) ==
            out.symbols_used.end()) {
      out.symbols_used.push_back(mi.payload);
    }
    encode(mi, words);
  }
  out.bytes = to_bytes(words);
  return out;
}

std::vector<ir::Instr> decode_kernel(std::span<const std::uint8_t> bytes,
                                     std::span<const ir::SymbolRef> symbols) {
  std::vector<ir::Instr> out;
  for (const MachineInstr &mi : decode_words(to_words(bytes))) {
    out.push_back(from_machine(mi, symbols));
  }
  return out;
}

}  // namespace qhc::codegen
