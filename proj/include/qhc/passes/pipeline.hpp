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

/// Totals over all kernels after one pass.
struct PassStats {
  std::string pass;
  std::size_t instructions = 0;
  std::size_t two_qubit = 0;
  std::uint64_t depth = 0;  // max kernel depth; set once scheduled
  std::size_t swaps = 0;
};

struct KernelMetrics {
  std::string name;
  std::size_t instructions = 0;
  std::size_t two_qubit = 0;
  std::uint64_t depth = 0;
  std::size_t swaps = 0;
};

struct PassReport {
  std::vector<PassStats> passes;
  std::vector<KernelMetrics> kernels;

  std::string to_json() const;
};

struct PipelineOptions {
  int opt_level = 1;
  /// See MapOptions::restore_placement. On by default so that every QBB
  /// starts and ends in the program's qubit order and QBBs compose.
  bool restore_placement = true;
};

struct PipelineResult {
  ir::QModule module;
  PassReport report;
};

/// inline -> [peephole] -> decompose -> [peephole] -> map -> schedule.
PipelineResult run_pipeline(const ir::QModule &module,
                            const ir::TargetConfig &target,
                            const PipelineOptions &options = {});

}  // namespace qhc::passes
