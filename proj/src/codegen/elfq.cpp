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

#include "qhc/codegen/elfq.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qhc/codegen/isa.hpp"
#include "qhc/error.hpp"

namespace qhc::codegen {

namespace {

struct SectionEntry {
  SectionType type;
  std::uint64_t offset = 0;
  std::uint64_t size = 0;
  std::uint64_t align = 1;
};

constexpr SectionType kSectionOrder[] = {SectionType::Qbbs, SectionType::QbbsText,
                                         SectionType::Qsym, SectionType::Qregs,
                                         SectionType::Qstrtab};

std::uint64_t section_align(SectionType t) {
  switch (t) {
    case SectionType::QbbsText: return kQbbAlign;
    case SectionType::Qstrtab: return 1;
    default: return 8;
  }
}

std::uint64_t align_up(std::uint64_t v, std::uint64_t a) { return (v + a - 1) / a * a; }

bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::uint64_t payload_size(const ElfqImage &img, SectionType t) {
  switch (t) {
    case SectionType::Qbbs: return img.qbbs.size() * kQbbRecordSize;
    case SectionType::QbbsText: return img.text.size();
    case SectionType::Qsym: return img.symbols.size() * kSymbolEntrySize;
    case SectionType::Qregs: return img.registers.size() * kRegisterEntrySize;
    case SectionType::Qstrtab: return img.strtab.size();
  }
  return 0;
}

std::vector<SectionEntry> layout(const ElfqImage &img) {
  std::vector<SectionEntry> out;
  std::uint64_t cur = kPreambleSize + std::size(kSectionOrder) * kSectionEntrySize;
  for (SectionType t : kSectionOrder) {
    SectionEntry e{t, 0, payload_size(img, t), section_align(t)};
    e.offset = align_up(cur, e.align);
    cur = e.offset + e.size;
    out.push_back(e);
  }
  return out;
}

class Writer {
 public:
  void u8(std::uint8_t v) { buf.push_back(v); }
  void u16(std::uint16_t v) { put(v, 2); }
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void pad_to(std::uint64_t offset) { buf.resize(offset, 0); }
  std::vector<std::uint8_t> buf;

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
};

std::uint64_t read_le(std::span<const std::uint8_t> b, std::size_t at, int n) {
  std::uint64_t v = 0;
  for (int i = 0; i < n; ++i) v |= std::uint64_t{b[at + i]} << (8 * i);
  return v;
}

[[noreturn]] void bad_section(const std::string &msg) {
  throw Error(ErrorCode::MalformedSection, msg);
}
[[noreturn]] void out_of_bounds(const std::string &msg) {
  throw Error(ErrorCode::SectionOutOfBounds, msg);
}

class StringTable {
 public:
  std::uint32_t intern(std::string_view s) {
    if (auto it = index_.find(std::string(s)); it != index_.end()) return it->second;
    const auto off = static_cast<std::uint32_t>(data_.size());
    data_.append(s);
    data_.push_back('\0');
    index_.emplace(std::string(s), off);
    return off;
  }
  std::string take() { return std::move(data_); }

 private:
  std::string data_ = std::string(1, '\0');
  std::map<std::string, std::uint32_t> index_;
};

}  // namespace

std::string_view section_name(SectionType type) {
  switch (type) {
    case SectionType::Qbbs: return ".qbbs";
    case SectionType::QbbsText: return ".qbbs_text";
    case SectionType::Qsym: return ".qsym";
    case SectionType::Qstrtab: return ".qstrtab";
    case SectionType::Qregs: return ".qregs";
  }
  return "?";
}

std::string_view ElfqImage::string_at(std::uint32_t offset) const {
  if (offset >= strtab.size()) {
    throw Error(ErrorCode::SectionOutOfBounds,
                "string offset " + std::to_string(offset) + " past .qstrtab");
  }
  const auto end = strtab.find('\0', offset);
  if (end == std::string::npos) {
    throw Error(ErrorCode::MalformedSection,
                "string at " + std::to_string(offset) + " is not NUL-terminated");
  }
  return std::string_view(strtab).substr(offset, end - offset);
}

const QbbRecord *ElfqImage::find_kernel(std::string_view name) const {
  for (const QbbRecord &r : qbbs) {
    if (kernel_name(r) == name) return &r;
  }
  return nullptr;
}

std::span<const std::uint8_t> ElfqImage::kernel_text(const QbbRecord &rec) const {
  return std::span<const std::uint8_t>(text).subspan(rec.offset, rec.size);
}

std::vector<ir::SymbolRef> ElfqImage::symbol_refs() const {
  std::vector<ir::SymbolRef> out;
  out.reserve(symbols.size());
  for (const SymbolEntry &s : symbols) {
    out.push_back(ir::SymbolRef{std::string(string_at(s.name_offset)), s.element_index});
  }
  return out;
}

std::vector<ir::RegisterDecl> ElfqImage::register_decls() const {
  std::vector<ir::RegisterDecl> out;
  for (const RegisterEntry &r : registers) {
    out.push_back(ir::RegisterDecl{static_cast<ir::RegisterKind>(r.kind),
                                   std::string(string_at(r.name_offset)), r.length});
  }
  return out;
}

// ---------------------------------------------------------------------------
// building and writing

ElfqImage build_image(const ir::QModule &module) {
  ElfqImage img;
  StringTable strings;

  std::uint32_t qubits = module.num_qubits();
  for (const ir::QKernel &k : module.kernels) {
    for (const ir::KernelOp &op : k.body) {
      if (const auto *in = std::get_if<ir::Instr>(&op)) {
        for (std::uint32_t q : in->qubits) qubits = std::max(qubits, q + 1);
      }
    }
  }
  if (qubits > 0xFFFF || module.num_cbits() > 0xFFFF) {
    throw Error(ErrorCode::UnencodableGate, "register totals exceed the header fields");
  }
  img.num_qubits = static_cast<std::uint16_t>(qubits);
  img.num_cbits = static_cast<std::uint16_t>(module.num_cbits());

  for (std::size_t i = 0; i < module.kernels.size(); ++i) {
    const ir::QKernel &k = module.kernels[i];
    const EncodedKernel enc = encode_kernel(k, module);
    QbbRecord rec;
    rec.kernel_id = static_cast<std::uint32_t>(i);
    rec.name_offset = strings.intern(k.name);
    rec.offset = align_up(img.text.size(), kQbbAlign);
    rec.size = enc.bytes.size();
    img.text.resize(rec.offset, 0);
    img.text.insert(img.text.end(), enc.bytes.begin(), enc.bytes.end());
    img.qbbs.push_back(rec);
  }
  img.text.resize(align_up(img.text.size(), kQbbAlign), 0);

  for (const ir::RegisterDecl &d : module.declarations) {
    const std::uint32_t name = strings.intern(d.name);
    img.registers.push_back(
        RegisterEntry{static_cast<std::uint32_t>(d.kind), name, d.length});
    if (d.kind == ir::RegisterKind::Shared) {
      for (std::uint32_t e = 0; e < d.length; ++e) {
        img.symbols.push_back(SymbolEntry{name, e});
      }
    }
  }
  img.strtab = strings.take();
  return img;
}

std::vector<std::uint8_t> serialize(const ElfqImage &img) {
  const auto sections = layout(img);
  Writer w;
  for (std::uint8_t b : kElfqMagic) w.u8(b);
  w.u16(kElfqVersion);
  w.u16(static_cast<std::uint16_t>(sections.size()));
  w.u16(img.num_qubits);
  w.u16(img.num_cbits);
  w.pad_to(kPreambleSize);
  for (const SectionEntry &s : sections) {
    w.u32(static_cast<std::uint32_t>(s.type));
    w.u32(0);
    w.u64(s.offset);
    w.u64(s.size);
    w.u64(s.align);
  }
  for (const SectionEntry &s : sections) {
    w.pad_to(s.offset);
    switch (s.type) {
      case SectionType::Qbbs:
        for (const QbbRecord &r : img.qbbs) {
          w.u32(r.kernel_id);
          w.u32(r.name_offset);
          w.u64(r.size);
          w.u64(r.align);
          w.u64(r.offset);
        }
        break;
      case SectionType::QbbsText:
        w.buf.insert(w.buf.end(), img.text.begin(), img.text.end());
        break;
      case SectionType::Qsym:
        for (const SymbolEntry &e : img.symbols) {
          w.u32(e.name_offset);
          w.u32(e.element_index);
        }
        break;
      case SectionType::Qregs:
        for (const RegisterEntry &r : img.registers) {
          w.u32(r.kind);
          w.u32(r.name_offset);
          w.u32(r.length);
          w.u32(0);
        }
        break;
      case SectionType::Qstrtab:
        w.buf.insert(w.buf.end(), img.strtab.begin(), img.strtab.end());
        break;
    }
  }
  return std::move(w.buf);
}

// ---------------------------------------------------------------------------
// reading

namespace {

void validate_contents(const ElfqImage &img) {
  if (img.strtab.empty() || img.strtab.front() != '\0' || img.strtab.back() != '\0') {
    bad_section(".qstrtab must start and end with NUL");
  }

  std::set<std::string, std::less<>> names;
  std::map<std::string, std::uint32_t, std::less<>> shared;
  std::uint64_t qubit_total = 0, cbit_total = 0;
  for (const RegisterEntry &r : img.registers) {
    if (r.kind > 2) bad_section(".qregs entry with unknown kind");
    const std::string_view name = img.string_at(r.name_offset);
    if (name.empty() || !names.emplace(name).second) {
      bad_section(".qregs entry with empty or repeated name");
    }
    if (r.length == 0) bad_section(".qregs entry '" + std::string(name) + "' has length 0");
    const auto kind = static_cast<ir::RegisterKind>(r.kind);
    if (kind == ir::RegisterKind::Qubit) qubit_total += r.length;
    if (kind == ir::RegisterKind::Cbit) cbit_total += r.length;
    if (kind == ir::RegisterKind::Shared) shared.emplace(name, r.length);
  }
  if (qubit_total > img.num_qubits || cbit_total != img.num_cbits) {
    bad_section("header register counts disagree with .qregs");
  }

  for (std::size_t i = 0; i < img.symbols.size(); ++i) {
    const SymbolEntry &s = img.symbols[i];
    const std::string_view name = img.string_at(s.name_offset);
    auto it = shared.find(name);
    if (it == shared.end() || s.element_index >= it->second) {
      throw Error(ErrorCode::DanglingSymbolIndex,
                  ".qsym entry " + std::to_string(i) + " names no shared element");
    }
  }

  const auto symbols = img.symbol_refs();
  std::set<std::string, std::less<>> kernel_names;
  std::uint64_t prev_end = 0;
  for (std::size_t i = 0; i < img.qbbs.size(); ++i) {
    const QbbRecord &r = img.qbbs[i];
    if (r.kernel_id != i) bad_section(".qbbs kernel ids must be dense and ordered");
    const std::string_view name = img.string_at(r.name_offset);
    if (name.empty() || !kernel_names.emplace(name).second) {
      bad_section(".qbbs entry with empty or repeated name");
    }
    if (!is_pow2(r.align) || r.offset % r.align != 0) {
      bad_section("QBB '" + std::string(name) + "' is misaligned");
    }
    if (r.size % 8 != 0) bad_section("QBB '" + std::string(name) + "' size is not whole words");
    if (r.offset > img.text.size() || r.size > img.text.size() - r.offset) {
      out_of_bounds("QBB '" + std::string(name) + "' extends past .qbbs_text");
    }
    if (r.offset < prev_end) bad_section("QBB '" + std::string(name) + "' overlaps its predecessor");
    prev_end = r.offset + r.size;

    for (const MachineInstr &mi : decode_words(to_words(img.kernel_text(r)))) {
      if (mi.mode == ParamMode::Symbol && mi.payload >= symbols.size()) {
        throw Error(ErrorCode::DanglingSymbolIndex,
                    "QBB '" + std::string(name) + "' references symbol " +
                        std::to_string(mi.payload) + " of " +
                        std::to_string(symbols.size()));
      }
      for (std::uint8_t q : mi.qubits) {
        if (q != kNoOperand && q >= img.num_qubits) {
          throw Error(ErrorCode::MalformedInstruction,
                      "QBB '" + std::string(name) + "' uses qubit " +
                          std::to_string(q) + " beyond the declared count");
        }
      }
      if (mi.cbit != kNoOperand && mi.cbit >= img.num_cbits) {
        throw Error(ErrorCode::MalformedInstruction,
                    "QBB '" + std::string(name) + "' uses cbit " +
                        std::to_string(mi.cbit) + " beyond the declared count");
      }
    }
  }
}

}  // namespace

ElfqImage parse_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(std::begin(kElfqMagic), std::end(kElfqMagic),
                                      bytes.begin())) {
    throw Error(ErrorCode::BadMagic, "not an ELFQ image");
  }
  if (bytes.size() < kPreambleSize) out_of_bounds("file ends inside the preamble");
  const auto version = read_le(bytes, 4, 2);
  if (version != kElfqVersion) {
    throw Error(ErrorCode::BadVersion, "unsupported ELFQ version " + std::to_string(version));
  }
  const auto count = read_le(bytes, 6, 2);
  for (std::size_t i = 12; i < kPreambleSize; ++i) {
    if (bytes[i] != 0) bad_section("reserved preamble bytes must be zero");
  }
  const std::uint64_t table_end = kPreambleSize + count * kSectionEntrySize;
  if (table_end > bytes.size()) out_of_bounds("section table extends past end of file");

  ElfqImage img;
  img.num_qubits = static_cast<std::uint16_t>(read_le(bytes, 8, 2));
  img.num_cbits = static_cast<std::uint16_t>(read_le(bytes, 10, 2));

  std::map<SectionType, SectionEntry> found;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> spans;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::size_t at = kPreambleSize + i * kSectionEntrySize;
    const auto type = static_cast<std::uint32_t>(read_le(bytes, at, 4));
    SectionEntry e{static_cast<SectionType>(type), read_le(bytes, at + 8, 8),
                   read_le(bytes, at + 16, 8), read_le(bytes, at + 24, 8)};
    if (type < 1 || type > 5) bad_section("unknown section type " + std::to_string(type));
    if (read_le(bytes, at + 4, 4) != 0) bad_section("section entry padding must be zero");
    const std::string name(section_name(e.type));
    if (e.offset > bytes.size() || e.size > bytes.size() - e.offset) {
      out_of_bounds(name + " extends past end of file");
    }
    if (e.offset < table_end) out_of_bounds(name + " overlaps the header");
    if (e.align != section_align(e.type) || e.offset % e.align != 0) {
      bad_section(name + " has the wrong alignment");
    }
    if (!found.emplace(e.type, e).second) bad_section("duplicate " + name + " section");
    spans.emplace_back(e.offset, e.offset + e.size);
  }
  for (SectionType t : kSectionOrder) {
    if (found.count(t) == 0) bad_section("missing " + std::string(section_name(t)) + " section");
  }
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].first < spans[i - 1].second) bad_section("sections overlap");
  }

  auto payload = [&](SectionType t, std::size_t record) {
    const SectionEntry &e = found.at(t);
    if (record != 0 && e.size % record != 0) {
      bad_section(std::string(section_name(t)) + " size is not a whole number of records");
    }
    return bytes.subspan(e.offset, e.size);
  };

  const auto qbbs = payload(SectionType::Qbbs, kQbbRecordSize);
  for (std::size_t at = 0; at < qbbs.size(); at += kQbbRecordSize) {
    img.qbbs.push_back(QbbRecord{static_cast<std::uint32_t>(read_le(qbbs, at, 4)),
                                 static_cast<std::uint32_t>(read_le(qbbs, at + 4, 4)),
                                 read_le(qbbs, at + 8, 8), read_le(qbbs, at + 16, 8),
                                 read_le(qbbs, at + 24, 8)});
  }
  const auto text = payload(SectionType::QbbsText, 0);
  img.text.assign(text.begin(), text.end());
  const auto sym = payload(SectionType::Qsym, kSymbolEntrySize);
  for (std::size_t at = 0; at < sym.size(); at += kSymbolEntrySize) {
    img.symbols.push_back(SymbolEntry{static_cast<std::uint32_t>(read_le(sym, at, 4)),
                                      static_cast<std::uint32_t>(read_le(sym, at + 4, 4))});
  }
  const auto regs = payload(SectionType::Qregs, kRegisterEntrySize);
  for (std::size_t at = 0; at < regs.size(); at += kRegisterEntrySize) {
    if (read_le(regs, at + 12, 4) != 0) bad_section(".qregs reserved field must be zero");
    img.registers.push_back(
        RegisterEntry{static_cast<std::uint32_t>(read_le(regs, at, 4)),
                      static_cast<std::uint32_t>(read_le(regs, at + 4, 4)),
                      static_cast<std::uint32_t>(read_le(regs, at + 8, 4))});
  }
  const auto strtab = payload(SectionType::Qstrtab, 0);
  img.strtab.assign(strtab.begin(), strtab.end());

  validate_contents(img);

  // Anything the structures above cannot represent (stray padding bytes,
  // trailing data, a different section order) would be lost on rewrite.
  const auto canonical = serialize(img);
  if (!std::equal(canonical.begin(), canonical.end(), bytes.begin(), bytes.end())) {
    bad_section("image is not in canonical layout (stray padding or trailing bytes)");
  }
  return img;
}

void write_elfq(const ElfqImage &image, const std::filesystem::path &path) {
  const auto bytes = serialize(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path.string());
}

ElfqImage write_elfq(const ir::QModule &module, const std::filesystem::path &path) {
  ElfqImage image = build_image(module);
  write_elfq(image, path);
  return image;
}

ElfqImage read_elfq(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return parse_image(bytes);
}

// ---------------------------------------------------------------------------
// inspection and assembly

namespace {

std::size_t instruction_count(const ElfqImage &img, const QbbRecord &r) {
  return decode_words(to_words(img.kernel_text(r))).size();
}

std::string asm_line(const ir::Instr &in) {
  std::ostringstream line;
  line << ir::gate_name(in.gate);
  for (std::size_t i = 0; i < in.qubits.size(); ++i) {
    line << (i == 0 ? " q" : ", q") << in.qubits[i];
  }
  if (in.cbit) line << " -> c" << *in.cbit;
  if (const auto *v = std::get_if<double>(&in.param)) {
    line << ", " << ir::format_double(*v);
  } else if (const auto *s = std::get_if<ir::SymbolRef>(&in.param)) {
    line << ", $" << s->array << '[' << s->index << ']';
  }
  return line.str();
}

}  // namespace

std::string inspect(const ElfqImage &img) {
  std::ostringstream out;
  out << "ELFQ version " << kElfqVersion << '\n';
  out << "qubits " << img.num_qubits << '\n';
  out << "cbits " << img.num_cbits << '\n';
  const auto sections = layout(img);
  out << "sections " << sections.size() << '\n';
  for (const SectionEntry &s : sections) {
    out << "  " << section_name(s.type) << " offset=" << s.offset << " size=" << s.size
        << " align=" << s.align << '\n';
  }
  out << "kernels " << img.qbbs.size() << '\n';
  for (const QbbRecord &r : img.qbbs) {
    out << "  id=" << r.kernel_id << " name=" << img.kernel_name(r) << " size=" << r.size
        << " align=" << r.align << " offset=" << r.offset
        << " instructions=" << instruction_count(img, r) << '\n';
  }
  out << "registers " << img.registers.size() << '\n';
  for (const auto &d : img.register_decls()) {
    out << "  " << ir::register_kind_name(d.kind) << ' ' << d.name << '[' << d.length
        << "]\n";
  }
  out << "symbols " << img.symbols.size() << '\n';
  const auto refs = img.symbol_refs();
  for (std::size_t i = 0; i < refs.size(); ++i) {
    out << "  " << i << ' ' << refs[i].array << '[' << refs[i].index << "]\n";
  }
  return out.str();
}

std::string inspect_json(const ElfqImage &img) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["version"] = kElfqVersion;
  j["qubits"] = img.num_qubits;
  j["cbits"] = img.num_cbits;
  j["sections"] = ordered_json::array();
  for (const SectionEntry &s : layout(img)) {
    j["sections"].push_back({{"name", section_name(s.type)},
                             {"type", static_cast<std::uint32_t>(s.type)},
                             {"offset", s.offset},
                             {"size", s.size},
                             {"align", s.align}});
  }
  j["kernels"] = ordered_json::array();
  for (const QbbRecord &r : img.qbbs) {
    j["kernels"].push_back({{"id", r.kernel_id},
                            {"name", img.kernel_name(r)},
                            {"size", r.size},
                            {"align", r.align},
                            {"offset", r.offset},
                            {"instructions", instruction_count(img, r)}});
  }
  j["registers"] = ordered_json::array();
  for (const auto &d : img.register_decls()) {
    j["registers"].push_back(
        {{"kind", ir::register_kind_name(d.kind)}, {"name", d.name}, {"length", d.length}});
  }
  j["symbols"] = ordered_json::array();
  for (const auto &s : img.symbol_refs()) {
    j["symbols"].push_back({{"array", s.array}, {"index", s.index}});
  }
  return j.dump(2);
}

std::string emit_asm(const ir::QKernel &kernel, std::uint32_t id, std::uint64_t align) {
  std::ostringstream out;
  out << "@kernel " << kernel.name << " id=" << id << " align=" << align << '\n';
  for (const ir::KernelOp &op : kernel.body) {
    const auto *in = std::get_if<ir::Instr>(&op);
    if (in == nullptr) {
      throw Error(ErrorCode::UnencodableGate,
                  "kernel '" + kernel.name + "' still contains a call marker");
    }
    if (!opcode_for(in->gate)) {
      throw Error(ErrorCode::UnencodableGate,
                  "no opcode for " + std::string(ir::gate_name(in->gate)));
    }
    out << asm_line(*in) << '\n';
  }
  return out.str();
}

std::string emit_asm(const ElfqImage &image) {
  const auto symbols = image.symbol_refs();
  std::string out;
  for (const QbbRecord &r : image.qbbs) {
    ir::QKernel k;
    k.name = std::string(image.kernel_name(r));
    for (ir::Instr &in : decode_kernel(image.kernel_text(r), symbols)) {
      k.body.push_back(std::move(in));
    }
    out += emit_asm(k, r.kernel_id, r.align);
  }
  return out;
}

}  // namespace qhc::codegen
