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

#include "qhc/passes/pipeline.hpp"

#include <algorithm>

#include "json.hpp"
#include "qhc/error.hpp"
#include "qhc/passes/passes.hpp"

namespace qhc::passes {

namespace {

PassStats collect(const std::string &name, const ir::QModule &m,
                  std::size_t swaps = 0) {
  PassStats s;
  s.pass = name;
  s.swaps = swaps;
  for (const ir::QKernel &k : m.kernels) {
    s.instructions += k.instruction_count();
    s.two_qubit += two_qubit_count(k);
    if (k.scheduled) s.depth = std::max(s.depth, k.depth);
  }
  return s;
}

template <typename Fn>
ir::QModule each_kernel(const ir::QModule &m, Fn &&fn) {
  ir::QModule out;
  out.declarations = m.declarations;
  for (std::size_t i = 0; i < m.kernels.size(); ++i) {
    out.kernels.push_back(fn(m.kernels[i], i));
  }
  return out;
}

}  // namespace

std::string PassReport::to_json() const {
  nlohmann::ordered_json j;
  j["passes"] = nlohmann::ordered_json::array();
  for (const PassStats &p : passes) {
    j["passes"].push_back({{"pass", p.pass},
                           {"instructions", p.instructions},
                           {"two_qubit", p.two_qubit},
                           {"depth", p.depth},
                           {"swaps", p.swaps}});
  }
  j["kernels"] = nlohmann::ordered_json::array();
  for (const KernelMetrics &k : kernels) {
    j["kernels"].push_back({{"name", k.name},
                            {"instructions", k.instructions},
                            {"two_qubit", k.two_qubit},
                            {"depth", k.depth},
                            {"swaps", k.swaps}});
  }
  return j.dump(2);
}

PipelineResult run_pipeline(const ir::QModule &module,
                            const ir::TargetConfig &target,
                            const PipelineOptions &options) {
  if (options.opt_level != 0 && options.opt_level != 1) {
    throw Error(ErrorCode::InvalidConfig, "optimisation level must be 0 or 1");
  }
  target.validate();
  if (const auto problems = ir::validate(module); !problems.empty()) {
    throw Error(ErrorCode::InvalidModule, problems.front());
  }

  PipelineResult result;
  PassReport &report = result.report;
  report.passes.push_back(collect("input", module));

  ir::QModule m = inline_kernels(module);
  report.passes.push_back(collect("inline", m));
  auto peephole = [&](const char *name) {
    m = each_kernel(m, [](const ir::QKernel &k, std::size_t) {
      return peephole_optimize(k);
    });
    report.passes.push_back(collect(name, m));
  };
  if (options.opt_level >= 1) peephole("peephole");
  m = each_kernel(m, [&](const ir::QKernel &k, std::size_t) {
    return decompose_to_native(k, target);
  });
  report.passes.push_back(collect("decompose", m));
  if (options.opt_level >= 1) peephole("peephole-post");

  std::vector<std::size_t> swaps(m.kernels.size(), 0);
  MapOptions map_opts;
  map_opts.program_qubits = m.num_qubits();
  map_opts.restore_placement = options.restore_placement;
  m = each_kernel(m, [&](const ir::QKernel &k, std::size_t i) {
    return map_qubits(k, target, map_opts, &swaps[i]);
  });
  std::size_t total_swaps = 0;
  for (std::size_t s : swaps) total_swaps += s;
  report.passes.push_back(collect("map", m, total_swaps));

  m = each_kernel(m, [&](const ir::QKernel &k, std::size_t) {
    return schedule_asap(k, target);
  });
  report.passes.push_back(collect("schedule", m, total_swaps));

  for (std::size_t i = 0; i < m.kernels.size(); ++i) {
    const ir::QKernel &k = m.kernels[i];
    report.kernels.push_back(KernelMetrics{
        k.name, k.instruction_count(), two_qubit_count(k), k.depth, swaps[i]});
  }
  result.module = std::move(m);
  return result;
}

}  // namespace qhc::passes
