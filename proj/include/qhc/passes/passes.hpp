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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qhc/ir/module.hpp"
#include "qhc/ir/target.hpp"

namespace qhc::passes {

/// Flattens every kernel so none contains call markers. Helper kernels stay in
/// the module as QBBs of their own.
ir::QModule inline_kernels(const ir::QModule &module);

/// Cancels adjacent hermitian pairs, merges adjacent immediate rotations about
/// the same axis, and drops identity rotations. Symbolic rotations are left
/// alone and block merging across them.
ir::QKernel peephole_optimize(const ir::QKernel &kernel);

/// Rewrites every instruction into the target's native gate set, up to global
/// phase.
ir::QKernel decompose_to_native(const ir::QKernel &kernel,
                                const ir::TargetConfig &target);

struct MapOptions {
  /// Program qubits to place; 0 means one past the highest operand.
  std::uint32_t program_qubits = 0;
  /// Undo the routing SWAPs at the end of the kernel so the final placement
  /// is the identity again.
  bool restore_placement = false;
};

/// Places program qubits on physical qubits (identity placement) and routes
/// non-adjacent two-qubit gates with SWAPs along shortest paths. The SWAPs are
/// emitted in native form. `swaps` receives the number of SWAPs inserted.
ir::QKernel map_qubits(const ir::QKernel &kernel, const ir::TargetConfig &target,
                       const MapOptions &options = {},
                       std::size_t *swaps = nullptr);

/// ASAP list scheduling with the target's gate durations.
ir::QKernel schedule_asap(const ir::QKernel &kernel,
                          const ir::TargetConfig &target);

std::size_t two_qubit_count(const ir::QKernel &kernel);

}  // namespace qhc::passes
