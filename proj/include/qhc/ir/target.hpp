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
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "qhc/ir/gate.hpp"

namespace qhc::ir {

enum class Topology { AllToAll, Linear, Explicit };

/// Description of the device the pipeline compiles for.
struct TargetConfig {
  std::uint32_t num_qubits = 0;
  Topology topology = Topology::AllToAll;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<GateId> native_gates = {GateId::PrepZ, GateId::MeasZ, GateId::RX,
                                      GateId::RY,    GateId::RZ,    GateId::CZ};
  std::map<GateId, std::uint32_t> durations;

  bool is_native(GateId id) const;
  bool adjacent(std::uint32_t a, std::uint32_t b) const;
  /// Cycle count for a gate. Gates without an explicit entry fall back to
  /// PREPZ 4, MEASZ 10, and otherwise one cycle per operand qubit.
  std::uint32_t duration(GateId id) const;
  std::vector<std::vector<std::uint32_t>> adjacency() const;

  /// Throws InvalidTarget when the graph is disconnected or the native set
  /// lacks PREPZ, MEASZ, or an entangling gate.
  void validate() const;

  bool operator==(const TargetConfig &) const = default;
};

TargetConfig default_target(std::uint32_t num_qubits);

/// Reads the small TOML subset used for target files:
///
///   qubits = 6
///   connectivity = "all"          # or "linear", or [[0,1],[1,2]]
///   native = ["PREPZ", "MEASZ", "RX", "RY", "RZ", "CZ"]
///   [durations]
///   CZ = 2
TargetConfig parse_target_config(std::string_view text);

}  // namespace qhc::ir
