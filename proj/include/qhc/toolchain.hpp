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
#include <optional>
#include <string_view>

#include "qhc/codegen/elfq.hpp"
#include "qhc/ir/module.hpp"
#include "qhc/ir/target.hpp"
#include "qhc/passes/pipeline.hpp"

namespace qhc {

struct CompileOptions {
  int opt_level = 1;
  /// Defaults to an all-to-all device sized to the program.
  std::optional<ir::TargetConfig> target;
  bool restore_placement = true;
};

struct CompileResult {
  ir::QModule module;  // after the pass pipeline
  passes::PassReport report;
  codegen::ElfqImage image;
  double seconds = 0.0;
};

/// Source text to ELFQ image. Counts compilations and their wall-clock time.
class Toolchain {
 public:
  CompileResult compile(std::string_view source, const CompileOptions &options = {});

  std::uint64_t compile_count() const { return count_; }
  double compile_seconds() const { return seconds_; }

 private:
  std::uint64_t count_ = 0;
  double seconds_ = 0.0;
};

}  // namespace qhc
