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

#include "qhc/qrt/session.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "qhc/error.hpp"

namespace qhc::qrt {

namespace {

constexpr std::uint64_t kModeMask = std::uint64_t{0xFF} << 40;

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char *env = std::getenv("QRT_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  std::uint64_t v = 0;
  const char *end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidConfig,
                std::string("QRT_SEED must be an unsigned integer, got '") + env + "'");
  }
  return v;
}

}  // namespace

ParamStore::ParamStore(const codegen::ElfqImage &image) {
  for (const ir::RegisterDecl &d : image.register_decls()) {
    if (d.kind == ir::RegisterKind::Shared) values_[d.name].assign(d.length, 0.0);
  }
}

void ParamStore::set(std::string_view array, std::uint32_t index, double value) {
  auto it = values_.find(array);
  if (it == values_.end()) {
    throw Error(ErrorCode::UnknownParam, "no shared array '" + std::string(array) + "'");
  }
  if (index >= it->second.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(array) + "[" + std::to_string(index) + "] out of range");
  }
  it->second[index] = value;
}

double ParamStore::get(std::string_view array, std::uint32_t index) const {
  auto it = values_.find(array);
  if (it == values_.end()) {
    throw Error(ErrorCode::UnknownParam, "no shared array '" + std::string(array) + "'");
  }
  if (index >= it->second.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(array) + "[" + std::to_string(index) + "] out of range");
  }
  return it->second[index];
}

std::vector<std::uint8_t> patch_qbb(std::span<const std::uint8_t> qbb,
                                    const ParamStore &params,
                                    std::span<const ir::SymbolRef> symbols,
                                    std::size_t *patched) {
  std::vector<std::uint64_t> words = codegen::to_words(qbb);
  std::size_t count = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto mode = static_cast<codegen::ParamMode>((words[i] >> 40) & 0xFF);
    if (mode == codegen::ParamMode::None) continue;
    if (i + 1 >= words.size()) {
      throw Error(ErrorCode::TruncatedParamWord,
                  "word " + std::to_string(i) + " expects a parameter word");
    }
    if (mode == codegen::ParamMode::Symbol) {
      const std::uint64_t idx = words[i + 1];
      if (idx >= symbols.size()) {
        throw Error(ErrorCode::DanglingSymbolIndex,
                    "symbol index " + std::to_string(idx) + " outside a table of " +
                        std::to_string(symbols.size()));
      }
      const ir::SymbolRef &ref = symbols[idx];
      words[i] = (words[i] & ~kModeMask) |
                 std::uint64_t{static_cast<std::uint8_t>(codegen::ParamMode::Immediate)}
                     << 40;
      words[i + 1] = std::bit_cast<std::uint64_t>(params.get(ref.array, ref.index));
      ++count;
    }
    ++i;
  }
  if (patched != nullptr) *patched = count;
  return codegen::to_bytes(words);
}

Session::Session(codegen::ElfqImage image, const DeviceConfig &cfg)
    : image_(std::move(image)),
      symbols_(image_.symbol_refs()),
      registers_(image_.register_decls()),
      params_(image_) {
  const std::uint32_t needed = std::max<std::uint32_t>(image_.num_qubits, 1);
  const std::uint32_t qubits = cfg.qubits == 0 ? needed : cfg.qubits;
  if (qubits < image_.num_qubits) {
    throw Error(ErrorCode::QubitCountTooSmall,
                "image needs " + std::to_string(image_.num_qubits) +
                    " qubits, device configured with " + std::to_string(qubits));
  }
  device_ = make_device(cfg.backend);
  seed_ = seed_from_env(cfg.seed);
  device_->init(qubits, seed_);
  cbits_.assign(image_.num_cbits, 0);
  register_.assign(std::size_t{1} << qubits, 0.0);
  register_[0] = 1.0;
}

void Session::set_param(std::string_view array, std::uint32_t index, double value) {
  params_.set(array, index, value);
}

double Session::get_param(std::string_view array, std::uint32_t index) const {
  return params_.get(array, index);
}

void Session::call_kernel(std::string_view name) {
  const codegen::QbbRecord *rec = image_.find_kernel(name);
  if (rec == nullptr) {
    throw Error(ErrorCode::UnknownKernel, "no kernel named '" + std::string(name) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  std::size_t patched = 0;
  const auto bytes = patch_qbb(image_.kernel_text(*rec), params_, symbols_, &patched);
  const auto program = codegen::decode_words(codegen::to_words(bytes));
  ExecResult result = device_->execute(program);
  for (const auto &[cbit, value] : result.cbits) {
    if (cbit >= cbits_.size()) {
      throw Error(ErrorCode::BadOperands, "cbit " + std::to_string(cbit) + " out of range");
    }
    cbits_[cbit] = value;
  }
  if (result.probabilities) register_ = std::move(*result.probabilities);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  stats_.dispatches += 1;
  stats_.patched_words += patched;
  stats_.last_dispatch_seconds = elapsed.count();
  stats_.exec_seconds += elapsed.count();
}

int Session::get_cbit(std::string_view array, std::uint32_t index) const {
  std::uint32_t offset = 0;
  for (const ir::RegisterDecl &d : registers_) {
    if (d.kind != ir::RegisterKind::Cbit) continue;
    if (d.name == array) {
      if (index >= d.length) {
        throw Error(ErrorCode::IndexOutOfRange,
                    std::string(array) + "[" + std::to_string(index) + "] out of range");
      }
      return cbits_[offset + index];
    }
    offset += d.length;
  }
  throw Error(ErrorCode::IndexOutOfRange, "no cbit array '" + std::string(array) + "'");
}

void Session::reset_device() { device_->reset(); }

std::vector<std::string> Session::kernel_names() const {
  std::vector<std::string> out;
  for (const codegen::QbbRecord &r : image_.qbbs) out.emplace_back(image_.kernel_name(r));
  return out;
}

Session open_session(codegen::ElfqImage image, const DeviceConfig &cfg) {
  return Session(std::move(image), cfg);
}

}  // namespace qhc::qrt
