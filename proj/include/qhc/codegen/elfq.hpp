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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhc/ir/module.hpp"

namespace qhc::codegen {

// ELFQ container, little-endian throughout.
//
//   [0,4)    magic 7F 'E' 'L' 'Q'
//   [4,6)    version (1)
//   [6,8)    section count
//   [8,10)   declared qubit count
//   [10,12)  declared cbit count
//   [12,24)  reserved, zero
//   [24,..)  section table, 32 bytes per entry:
//            type u32, pad u32, offset u64, size u64, align u64
//   payloads, each at a multiple of its alignment, zero padding between.

inline constexpr std::uint8_t kElfqMagic[4] = {0x7F, 'E', 'L', 'Q'};
inline constexpr std::uint16_t kElfqVersion = 1;
inline constexpr std::size_t kPreambleSize = 24;
inline constexpr std::size_t kSectionEntrySize = 32;
inline constexpr std::size_t kQbbRecordSize = 32;
inline constexpr std::size_t kSymbolEntrySize = 8;
inline constexpr std::size_t kRegisterEntrySize = 16;
inline constexpr std::uint64_t kQbbAlign = 64;

enum class SectionType : std::uint32_t {
  Qbbs = 1,      // .qbbs      kernel records
  QbbsText = 2,  // .qbbs_text instruction words
  Qsym = 3,      // .qsym      parameter symbols
  Qstrtab = 4,   // .qstrtab   NUL-terminated names
  Qregs = 5,     // .qregs     register declarations
};

std::string_view section_name(SectionType type);

struct QbbRecord {
  std::uint32_t kernel_id = 0;
  std::uint32_t name_offset = 0;
  std::uint64_t size = 0;
  std::uint64_t align = kQbbAlign;
  std::uint64_t offset = 0;

  bool operator==(const QbbRecord &) const = default;
};

/// One element of a shared parameter array.
struct SymbolEntry {
  std::uint32_t name_offset = 0;
  std::uint32_t element_index = 0;

  bool operator==(const SymbolEntry &) const = default;
};

struct RegisterEntry {
  std::uint32_t kind = 0;  // ir::RegisterKind
  std::uint32_t name_offset = 0;
  std::uint32_t length = 0;

  bool operator==(const RegisterEntry &) const = default;
};

struct ElfqImage {
  std::uint16_t num_qubits = 0;
  std::uint16_t num_cbits = 0;
  std::vector<QbbRecord> qbbs;
  std::vector<std::uint8_t> text;
  std::vector<SymbolEntry> symbols;
  std::vector<RegisterEntry> registers;
  std::string strtab = std::string(1, '\0');

  std::string_view string_at(std::uint32_t offset) const;
  std::string_view kernel_name(const QbbRecord &rec) const {
    return string_at(rec.name_offset);
  }
  const QbbRecord *find_kernel(std::string_view name) const;
  std::span<const std::uint8_t> kernel_text(const QbbRecord &rec) const;
  /// The symbol table as references, in .qsym index order.
  std::vector<ir::SymbolRef> symbol_refs() const;
  std::vector<ir::RegisterDecl> register_decls() const;

  bool operator==(const ElfqImage &) const = default;
};

/// Encodes every kernel of an inlined module into an image. Kernel ids follow
/// declaration order.
ElfqImage build_image(const ir::QModule &module);

std::vector<std::uint8_t> serialize(const ElfqImage &image);

/// Parses and fully validates an image. Throws BadMagic, BadVersion,
/// SectionOutOfBounds, MalformedSection, DanglingSymbolIndex, or any decode
/// error from the instruction stream.
ElfqImage parse_image(std::span<const std::uint8_t> bytes);

ElfqImage write_elfq(const ir::QModule &module, const std::filesystem::path &path);
void write_elfq(const ElfqImage &image, const std::filesystem::path &path);
ElfqImage read_elfq(const std::filesystem::path &path);

/// Stable, line-oriented dump of the header, kernel table, and symbols.
std::string inspect(const ElfqImage &image);
std::string inspect_json(const ElfqImage &image);

/// Assembly listing for one kernel: a header line and one line per
/// instruction.
std::string emit_asm(const ir::QKernel &kernel, std::uint32_t id,
                     std::uint64_t align = kQbbAlign);
/// Listing for every kernel in an image, decoded from its instruction words.
std::string emit_asm(const ElfqImage &image);

}  // namespace qhc::codegen
