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

#include "qhc/toolchain.hpp"

#include <algorithm>
#include <chrono>

#include "qhc/frontend/lower.hpp"

namespace qhc {

CompileResult Toolchain::compile(std::string_view source, const CompileOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  CompileResult out;
  const ir::QModule lowered = frontend::compile_to_ir(source);
  const ir::TargetConfig target =
      options.target ? *options.target
                     : ir::default_target(std::max<std::uint32_t>(lowered.num_qubits(), 1));
  passes::PipelineOptions popts;
  popts.opt_level = options.opt_level;
  popts.restore_placement = options.restore_placement;
  passes::PipelineResult piped = passes::run_pipeline(lowered, target, popts);
  out.image = codegen::build_image(piped.module);
  out.module = std::move(piped.module);
  out.report = std::move(piped.report);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  out.seconds = elapsed.count();
  ++count_;
  seconds_ += out.seconds;
  return out;
}

}  // namespace qhc
