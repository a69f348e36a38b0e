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

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhc/codegen/elfq.hpp"
#include "qhc/qrt/device.hpp"

namespace qhc::qrt {

struct DeviceConfig {
  std::string backend = "statevector";
  /// Device size; 0 uses the image's declared qubit count.
  std::uint32_t qubits = 0;
  std::uint64_t seed = 0;
};

/// Values for every shared parameter array in an image, zero-initialised.
class ParamStore {
 public:
  ParamStore() = default;
  explicit ParamStore(const codegen::ElfqImage &image);

  /// Throws UnknownParam or IndexOutOfRange.
  void set(std::string_view array, std::uint32_t index, double value);
  double get(std::string_view array, std::uint32_t index) const;
  const std::map<std::string, std::vector<double>, std::less<>> &arrays() const {
    return values_;
  }

 private:
  std::map<std::string, std::vector<double>, std::less<>> values_;
};

/// Copies a QBB and rewrites every symbolic parameter word pair into an
/// immediate carrying the parameter's current value. Other words are copied
/// unchanged. `patched` receives the number of pairs rewritten.
std::vector<std::uint8_t> patch_qbb(std::span<const std::uint8_t> qbb,
                                    const ParamStore &params,
                                    std::span<const ir::SymbolRef> symbols,
                                    std::size_t *patched = nullptr);

struct SessionStats {
  std::uint64_t dispatches = 0;
  std::uint64_t patched_words = 0;
  /// Kernels compiled by this session. Sessions only load images, so this
  /// stays 0.
  std::uint64_t compile_count = 0;
  double exec_seconds = 0.0;
  double last_dispatch_seconds = 0.0;
};

class Session {
 public:
  /// QRT_SEED, when set, overrides cfg.seed. Throws QubitCountTooSmall or
  /// BackendUnavailable.
  Session(codegen::ElfqImage image, const DeviceConfig &cfg = {});

  void set_param(std::string_view array, std::uint32_t index, double value);
  double get_param(std::string_view array, std::uint32_t index) const;

  /// Blocking dispatch of one QBB. Throws UnknownKernel.
  void call_kernel(std::string_view name);

  int get_cbit(std::string_view array, std::uint32_t index) const;
  std::vector<double> probability_register() const { return register_; }

  /// Device back to |0...0>; parameters and cbits are kept.
  void reset_device();

  const SessionStats &stats() const { return stats_; }
  const codegen::ElfqImage &image() const { return image_; }
  std::uint32_t num_qubits() const { return device_->num_qubits(); }
  std::uint64_t seed() const { return seed_; }
  std::vector<std::string> kernel_names() const;

 private:
  codegen::ElfqImage image_;
  std::vector<ir::SymbolRef> symbols_;
  std::vector<ir::RegisterDecl> registers_;
  std::unique_ptr<Device> device_;
  ParamStore params_;
  std::vector<int> cbits_;
  std::vector<double> register_;
  SessionStats stats_;
  std::uint64_t seed_ = 0;
};

Session open_session(codegen::ElfqImage image, const DeviceConfig &cfg = {});

}  // namespace qhc::qrt
