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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qhc/codegen/isa.hpp"

namespace qhc::qrt {

struct ExecResult {
  /// (flat cbit index, value) in the order the measurements happened.
  std::vector<std::pair<std::uint32_t, int>> cbits;
  /// Full distribution just before the first MEASZ, if there was one.
  std::optional<std::vector<double>> probabilities;
};

/// What the runtime needs from a quantum target. Instructions arrive fully
/// patched: parameters are immediates.
class Device {
 public:
  virtual ~Device() = default;
  virtual void init(std::uint32_t num_qubits, std::uint64_t seed) = 0;
  virtual ExecResult execute(std::span<const codegen::MachineInstr> program) = 0;
  /// Back to |0...0>; the RNG stream continues.
  virtual void reset() = 0;
  virtual std::uint32_t num_qubits() const = 0;
  virtual std::vector<double> probabilities() const = 0;
};

/// Backends by name. Only "statevector" exists; anything else throws
/// BackendUnavailable.
std::unique_ptr<Device> make_device(const std::string &backend);

}  // namespace qhc::qrt
