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

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "qhc/error.hpp"
#include "qhc/ir/module.hpp"

namespace qhc::ir {

std::size_t QKernel::instruction_count() const {
  return static_cast<std::size_t>(std::count_if(
      body.begin(), body.end(),
      [](const KernelOp &op) { return std::holds_alternative<Instr>(op); }));
}

std::string_view register_kind_name(RegisterKind kind) {
  switch (kind) {
    case RegisterKind::Qubit: return "qbit";
    case RegisterKind::Cbit: return "cbit";
    case RegisterKind::Shared: return "shared";
  }
  return "?";
}

const RegisterDecl *QModule::find_register(std::string_view name) const {
  for (const RegisterDecl &d : declarations) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

std::optional<std::uint32_t> QModule::register_offset(
    RegisterKind kind, std::string_view name) const {
  std::uint32_t offset = 0;
  for (const RegisterDecl &d : declarations) {
    if (d.kind != kind) continue;
    if (d.name == name) return offset;
    offset += d.length;
  }
  return std::nullopt;
}

std::optional<std::pair<const RegisterDecl *, std::uint32_t>> QModule::locate(
    RegisterKind kind, std::uint32_t flat) const {
  std::uint32_t offset = 0;
  for (const RegisterDecl &d : declarations) {
    if (d.kind != kind) continue;
    if (flat < offset + d.length) return std::make_pair(&d, flat - offset);
    offset += d.length;
  }
  return std::nullopt;
}

std::uint32_t QModule::register_total(RegisterKind kind) const {
  std::uint32_t total = 0;
  for (const RegisterDecl &d : declarations) {
    if (d.kind == kind) total += d.length;
  }
  return total;
}

QKernel *QModule::find_kernel(std::string_view name) {
  for (QKernel &k : kernels) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

const QKernel *QModule::find_kernel(std::string_view name) const {
  for (const QKernel &k : kernels) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string s(buf, ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string operand_text(const QModule &m, RegisterKind kind, std::uint32_t flat,
                         bool physical) {
  if (!physical) {
    if (auto loc = m.locate(kind, flat)) {
      return loc->first->name + "[" + std::to_string(loc->second) + "]";
    }
  }
  return "$" + std::to_string(flat);
}

}  // namespace

std::string print_ir(const QModule &module) {
  std::ostringstream out;
  out << "qir 1\n";
  for (const RegisterDecl &d : module.declarations) {
    out << "decl " << register_kind_name(d.kind) << ' ' << d.name << ' '
        << d.length << '\n';
  }
  for (const QKernel &k : module.kernels) {
    out << "kernel " << k.name << ":\n";
    if (k.inlined || k.mapped || k.scheduled) {
      out << "  .flags";
      if (k.inlined) out << " inlined";
      if (k.mapped) out << " mapped";
      if (k.scheduled) out << " scheduled";
      out << '\n';
    }
    if (k.scheduled || k.depth != 0) out << "  .depth " << k.depth << '\n';
    if (k.mapped || !k.placement.empty()) {
      out << "  .placement";
      for (std::uint32_t p : k.placement) out << ' ' << p;
      out << '\n';
    }
    for (std::size_t i = 0; i < k.body.size(); ++i) {
      out << "  ";
      if (const auto *call = std::get_if<KernelCall>(&k.body[i])) {
        out << "call " << call->callee;
      } else {
        const Instr &in = std::get<Instr>(k.body[i]);
        out << gate_name(in.gate);
        for (std::uint32_t q : in.qubits) {
          out << ' ' << operand_text(module, RegisterKind::Qubit, q, k.mapped);
        }
        if (in.cbit) {
          out << " -> " << operand_text(module, RegisterKind::Cbit, *in.cbit, false);
        }
        if (const double *imm = std::get_if<double>(&in.param)) {
          out << " imm " << format_double(*imm);
        } else if (const auto *sym = std::get_if<SymbolRef>(&in.param)) {
          out << " sym " << sym->array << ' ' << sym->index;
        }
      }
      if (i < k.start_cycles.size()) out << " @" << k.start_cycles[i];
      out << '\n';
    }
  }
  return out.str();
}

namespace {

class IrReader {
 public:
  explicit IrReader(std::string_view text) : text_(text) {}

  QModule read() {
    QModule m;
    bool header = false;
    QKernel *kernel = nullptr;
    std::string line;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      const std::size_t end = nl == std::string_view::npos ? text_.size() : nl;
      line_text_ = text_.substr(pos, end - pos);
      ++line_no_;
      pos = end + 1;
      words_ = split(line_text_);
      if (words_.empty()) {
        if (nl == std::string_view::npos) break;
        continue;
      }
      if (!header) {
        if (words_.size() != 2 || words_[0] != "qir" || words_[1] != "1") {
          fail("expected 'qir 1' header");
        }
        header = true;
      } else if (words_[0] == "decl") {
        if (kernel != nullptr) fail("declarations must precede kernels");
        if (words_.size() != 4) fail("malformed declaration");
        RegisterDecl d;
        if (words_[1] == "qbit") {
          d.kind = RegisterKind::Qubit;
        } else if (words_[1] == "cbit") {
          d.kind = RegisterKind::Cbit;
        } else if (words_[1] == "shared") {
          d.kind = RegisterKind::Shared;
        } else {
          fail("unknown declaration kind '" + std::string(words_[1]) + "'");
        }
        d.name = std::string(words_[2]);
        d.length = number<std::uint32_t>(words_[3]);
        m.declarations.push_back(std::move(d));
      } else if (words_[0] == "kernel") {
        if (words_.size() != 2 || words_[1].size() < 2 || words_[1].back() != ':') {
          fail("malformed kernel header");
        }
        QKernel k;
        k.name = std::string(words_[1].substr(0, words_[1].size() - 1));
        m.kernels.push_back(std::move(k));
        kernel = &m.kernels.back();
      } else {
        if (kernel == nullptr) fail("instruction outside of a kernel");
        read_kernel_line(m, *kernel);
      }
      if (nl == std::string_view::npos) break;
    }
    if (!header) fail("empty input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string &what) const {
    throw Error(ErrorCode::ParseError,
                "IR line " + std::to_string(line_no_) + ": " + what,
                SourceLocation{line_no_, 1});
  }

  static std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
      if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
  }

  template <typename T>
  T number(std::string_view word) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      fail("bad number '" + std::string(word) + "'");
    }
    return value;
  }

  std::uint32_t operand(const QModule &m, RegisterKind kind,
                        std::string_view word) const {
    if (!word.empty() && word[0] == '$') {
      return number<std::uint32_t>(word.substr(1));
    }
    const std::size_t open = word.find('[');
    if (open == std::string_view::npos || word.back() != ']') {
      fail("bad operand '" + std::string(word) + "'");
    }
    const std::string_view name = word.substr(0, open);
    const std::uint32_t index =
        number<std::uint32_t>(word.substr(open + 1, word.size() - open - 2));
    const auto base = m.register_offset(kind, name);
    if (!base) fail("unknown register '" + std::string(name) + "'");
    return *base + index;
  }

  void read_kernel_line(const QModule &m, QKernel &k) {
    std::vector<std::string_view> w = words_;
    if (w[0] == ".flags") {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == "inlined") {
          k.inlined = true;
        } else if (w[i] == "mapped") {
          k.mapped = true;
        } else if (w[i] == "scheduled") {
          k.scheduled = true;
        } else {
          fail("unknown flag '" + std::string(w[i]) + "'");
        }
      }
      return;
    }
    if (w[0] == ".depth") {
      if (w.size() != 2) fail("malformed .depth");
      k.depth = number<std::uint64_t>(w[1]);
      return;
    }
    if (w[0] == ".placement") {
      for (std::size_t i = 1; i < w.size(); ++i) {
        k.placement.push_back(number<std::uint32_t>(w[i]));
      }
      return;
    }
    if (w.back().front() == '@') {
      k.start_cycles.push_back(number<std::uint64_t>(w.back().substr(1)));
      w.pop_back();
    }
    if (w[0] == "call") {
      if (w.size() != 2) fail("malformed call");
      k.body.emplace_back(KernelCall{std::string(w[1])});
      return;
    }
    const GateDef *def = find_gate(w[0]);
    if (def == nullptr) fail("unknown gate '" + std::string(w[0]) + "'");
    Instr in;
    in.gate = def->identifier;
    std::size_t i = 1;
    while (i < w.size() && w[i] != "->" && w[i] != "imm" && w[i] != "sym") {
      in.qubits.push_back(operand(m, RegisterKind::Qubit, w[i]));
      ++i;
    }
    if (i < w.size() && w[i] == "->") {
      if (i + 1 >= w.size()) fail("missing cbit operand");
      in.cbit = operand(m, RegisterKind::Cbit, w[i + 1]);
      i += 2;
    }
    if (i < w.size() && w[i] == "imm") {
      if (i + 1 >= w.size()) fail("missing immediate");
      in.param = number<double>(w[i + 1]);
      i += 2;
    } else if (i < w.size() && w[i] == "sym") {
      if (i + 2 >= w.size()) fail("malformed symbol operand");
      in.param = SymbolRef{std::string(w[i + 1]), number<std::uint32_t>(w[i + 2])};
      i += 3;
    }
    if (i != w.size()) fail("unexpected trailing operands");
    k.body.emplace_back(std::move(in));
  }

  std::string_view text_;
  std::string_view line_text_;
  std::vector<std::string_view> words_;
  std::uint32_t line_no_ = 0;
};

}  // namespace

QModule parse_ir(std::string_view text) { return IrReader(text).read(); }

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate(const QModule &module) {
  std::vector<std::string> errors;
  std::set<std::string> names;
  for (const RegisterDecl &d : module.declarations) {
    if (!names.insert(d.name).second) {
      errors.push_back("duplicate declaration '" + d.name + "'");
    }
    if (d.length == 0) errors.push_back("register '" + d.name + "' has length 0");
  }
  std::set<std::string> kernel_names;
  for (const QKernel &k : module.kernels) {
    if (!kernel_names.insert(k.name).second) {
      errors.push_back("duplicate kernel '" + k.name + "'");
    }
  }

  const std::uint32_t program_qubits = module.num_qubits();
  const std::uint32_t cbits = module.num_cbits();
  for (const QKernel &k : module.kernels) {
    const std::string where = "kernel " + k.name + ": ";
    const std::uint32_t qubit_limit =
        k.mapped ? static_cast<std::uint32_t>(k.placement.size()) : program_qubits;
    if (k.scheduled && k.start_cycles.size() != k.body.size()) {
      errors.push_back(where + "schedule does not cover every instruction");
    }
    for (std::size_t idx = 0; idx < k.body.size(); ++idx) {
      const std::string at = where + "#" + std::to_string(idx) + ": ";
      if (const auto *call = std::get_if<KernelCall>(&k.body[idx])) {
        if (k.inlined) errors.push_back(at + "call marker in inlined kernel");
        if (module.find_kernel(call->callee) == nullptr) {
          errors.push_back(at + "call to unknown kernel '" + call->callee + "'");
        }
        continue;
      }
      const Instr &in = std::get<Instr>(k.body[idx]);
      if (static_cast<std::size_t>(in.gate) >= kGateCount) {
        errors.push_back(at + "unknown gate identifier");
        continue;
      }
      const GateDef &def = gate_def(in.gate);
      if (in.qubits.size() != def.num_qubits()) {
        errors.push_back(at + def.name + " expects " +
                         std::to_string(def.num_qubits()) + " qubit operand(s), found " +
                         std::to_string(in.qubits.size()));
      }
      for (std::size_t a = 0; a < in.qubits.size(); ++a) {
        if (in.qubits[a] >= qubit_limit) {
          errors.push_back(at + "qubit operand " + std::to_string(in.qubits[a]) +
                           " out of range");
        }
        for (std::size_t b = a + 1; b < in.qubits.size(); ++b) {
          if (in.qubits[a] == in.qubits[b]) {
            errors.push_back(at + "duplicate qubit operand");
          }
        }
      }
      if (in.gate == GateId::MeasZ) {
        if (!in.cbit) {
          errors.push_back(at + "MEASZ requires a cbit operand");
        } else if (*in.cbit >= cbits) {
          errors.push_back(at + "cbit operand out of range");
        }
      } else if (in.cbit) {
        errors.push_back(at + def.name + " cannot write a cbit");
      }
      if (def.is_parametric()) {
        if (std::holds_alternative<std::monostate>(in.param)) {
          errors.push_back(at + "missing parameter");
        }
      } else if (!std::holds_alternative<std::monostate>(in.param)) {
        errors.push_back(at + def.name + " takes no parameter");
      }
      if (const auto *sym = std::get_if<SymbolRef>(&in.param)) {
        const RegisterDecl *d = module.find_register(sym->array);
        if (d == nullptr || d->kind != RegisterKind::Shared) {
          errors.push_back(at + "unresolved parameter symbol '" + sym->array + "'");
        } else if (sym->index >= d->length) {
          errors.push_back(at + "parameter index out of range");
        }
      }
    }
  }
  return errors;
}

}  // namespace qhc::ir
