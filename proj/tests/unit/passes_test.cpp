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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numbers>
#include <random>

#include "dense_oracle.hpp"
#include "qhc/error.hpp"
#include "qhc/frontend/lower.hpp"
#include "qhc/ir/target.hpp"
#include "qhc/passes/passes.hpp"
#include "qhc/passes/pipeline.hpp"
#include "qhc/tfd/ansatz.hpp"

namespace qhc::passes {
namespace {

using ir::GateId;
using ir::Instr;
using ir::QKernel;
using ir::SymbolRef;

QKernel kernel_of(std::initializer_list<Instr> instrs) {
  QKernel k;
  k.name = "k";
  for (const Instr &i : instrs) k.body.emplace_back(i);
  return k;
}

Instr g1(GateId g, std::uint32_t q, ir::ParamOperand p = {}) {
  return Instr{g, {q}, std::nullopt, p};
}
Instr g2(GateId g, std::uint32_t a, std::uint32_t b) { return Instr{g, {a, b}, std::nullopt, {}}; }

const Instr &at(const QKernel &k, std::size_t i) { return std::get<Instr>(k.body.at(i)); }

std::multiset<SymbolRef> symbols(const QKernel &k) {
  std::multiset<SymbolRef> s;
  for (const auto &op : k.body) {
    if (const auto *in = std::get_if<Instr>(&op)) {
      if (const auto *r = std::get_if<SymbolRef>(&in->param)) s.insert(*r);
    }
  }
  return s;
}

TEST(Inline, TfdZIsSumOfParts) {
  const auto m = frontend::compile_to_ir(tfd::generate_source(3));
  const auto flat = inline_kernels(m);
  std::size_t parts = 0;
  for (const char *name : {"PrepZAll", "BellPrep", "TFD_terms", "MeasZAll"}) {
    parts += flat.find_kernel(name)->instruction_count();
  }
  const auto *z = flat.find_kernel("tfd_Z");
  EXPECT_EQ(z->instruction_count(), parts);
  EXPECT_EQ(z->body.size(), parts);
  EXPECT_TRUE(z->inlined);
  EXPECT_EQ(flat.kernels.size(), m.kernels.size());
}

TEST(Inline, NestedAndFixedPoint) {
  const auto m = frontend::compile_to_ir(
      "qbit q[2]; kernel c() { X(q[0]); Y(q[1]); } kernel b() { c(); Z(q[0]); }"
      "kernel a() { b(); H(q[1]); } kernel lone() { S(q[0]); }");
  const auto flat = inline_kernels(m);
  const auto *a = flat.find_kernel("a");
  ASSERT_EQ(a->body.size(), 4u);
  EXPECT_EQ(at(*a, 0).gate, GateId::X);
  EXPECT_EQ(at(*a, 3).gate, GateId::H);
  EXPECT_EQ(flat.find_kernel("lone")->body, m.find_kernel("lone")->body);
}

TEST(Peephole, Examples) {
  EXPECT_TRUE(peephole_optimize(kernel_of({g1(GateId::H, 0), g1(GateId::H, 0)})).body.empty());

  const auto merged =
      peephole_optimize(kernel_of({g1(GateId::RZ, 0, 0.3), g1(GateId::RZ, 0, 0.4)}));
  ASSERT_EQ(merged.body.size(), 1u);
  EXPECT_NEAR(std::get<double>(at(merged, 0).param), 0.7, 1e-15);

  const auto sym = kernel_of({g1(GateId::RZ, 0, SymbolRef{"P", 0}),
                              g1(GateId::RZ, 0, SymbolRef{"P", 0})});
  EXPECT_EQ(peephole_optimize(sym).body, sym.body);
}

TEST(Peephole, CancellationRespectsInterveningGates) {
  const auto k = kernel_of({g1(GateId::H, 0), g2(GateId::CZ, 0, 1), g1(GateId::H, 0)});
  EXPECT_EQ(peephole_optimize(k).body.size(), 3u);
  const auto cnot = kernel_of({g2(GateId::CNOT, 0, 1), g1(GateId::X, 2), g2(GateId::CNOT, 0, 1)});
  EXPECT_EQ(peephole_optimize(cnot).body.size(), 1u);
  const auto flipped = kernel_of({g2(GateId::CNOT, 0, 1), g2(GateId::CNOT, 1, 0)});
  EXPECT_EQ(peephole_optimize(flipped).body.size(), 2u);
  const auto zero = kernel_of({g1(GateId::RX, 0, 4 * std::numbers::pi)});
  EXPECT_TRUE(peephole_optimize(zero).body.empty());
}

TEST(Peephole, MeasurementBlocksCancellation) {
  QKernel k = kernel_of({g1(GateId::X, 0)});
  k.body.emplace_back(Instr{GateId::MeasZ, {0}, 0u, {}});
  k.body.emplace_back(g1(GateId::X, 0));
  EXPECT_EQ(peephole_optimize(k).body.size(), 3u);
}

TEST(Decompose, FixedRulesMatchOracle) {
  const auto target = ir::default_target(3);
  std::mt19937_64 rng(2);
  for (GateId g : testing::unitary_gates()) {
    const auto &def = ir::gate_def(g);
    std::vector<std::uint32_t> qs = {2, 0, 1};
    qs.resize(def.num_qubits());
    Instr in{g, qs, std::nullopt, {}};
    if (def.is_parametric()) in.param = 0.7;
    const QKernel k = kernel_of({in});
    const QKernel out = decompose_to_native(k, target);
    for (const auto &op : out.body) EXPECT_TRUE(target.is_native(std::get<Instr>(op).gate));
    EXPECT_LT(testing::phase_distance(testing::kernel_unitary(out, 3),
                                      testing::kernel_unitary(k, 3)),
              1e-12)
        << def.name;
  }
}

TEST(Decompose, SymbolicRotationsUntouched) {
  const QKernel k = kernel_of({g1(GateId::RX, 0, SymbolRef{"P", 0})});
  EXPECT_EQ(decompose_to_native(k, ir::default_target(1)).body, k.body);
}

TEST(Decompose, ReducedNativeSetUsesFallbacks) {
  auto t = ir::default_target(2);
  t.native_gates = {GateId::PrepZ, GateId::MeasZ, GateId::RZ, GateId::H, GateId::CNOT};
  const testing::Bindings bind{{SymbolRef{"P", 0}, 0.9}};
  const QKernel k = kernel_of({g1(GateId::RY, 0, SymbolRef{"P", 0}), g2(GateId::CZ, 0, 1),
                               g1(GateId::RX, 1, 0.3)});
  const QKernel out = decompose_to_native(k, t);
  for (const auto &op : out.body) EXPECT_TRUE(t.is_native(std::get<Instr>(op).gate));
  EXPECT_EQ(symbols(out), symbols(k));
  EXPECT_LT(testing::phase_distance(testing::kernel_unitary(out, 2, bind),
                                    testing::kernel_unitary(k, 2, bind)),
            1e-12);
}

TEST(Decompose, ImpossibleTargetFails) {
  auto t = ir::default_target(2);
  t.native_gates = {GateId::PrepZ, GateId::MeasZ, GateId::RZ, GateId::CZ};
  EXPECT_THROW(decompose_to_native(kernel_of({g1(GateId::H, 0)}), t), Error);
}

TEST(Map, AllToAllIsIdentity) {
  const auto k = kernel_of({g2(GateId::CZ, 0, 2), g1(GateId::RX, 1, 0.1)});
  std::size_t swaps = 99;
  const auto out = map_qubits(k, ir::default_target(3), {}, &swaps);
  EXPECT_EQ(swaps, 0u);
  EXPECT_EQ(out.body, k.body);
  EXPECT_EQ(out.placement, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_TRUE(out.mapped);
}

TEST(Map, LinearChainInsertsOneSwap) {
  auto t = ir::default_target(3);
  t.topology = ir::Topology::Linear;
  const auto k = kernel_of({g2(GateId::CZ, 0, 2)});
  std::size_t swaps = 0;
  const auto out = map_qubits(k, t, {}, &swaps);
  EXPECT_EQ(swaps, 1u);
  for (const auto &op : out.body) {
    const Instr &in = std::get<Instr>(op);
    if (in.qubits.size() == 2) EXPECT_TRUE(t.adjacent(in.qubits[0], in.qubits[1]));
  }
  // Same operator once the final placement is accounted for.
  const auto restored = map_qubits(k, t, {0, true}, &swaps);
  EXPECT_EQ(swaps, 2u);
  EXPECT_EQ(restored.placement, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_LT(testing::phase_distance(testing::kernel_unitary(restored, 3),
                                    testing::kernel_unitary(k, 3)),
            1e-12);
}

TEST(Map, TooManyQubits) {
  const auto k = kernel_of({g1(GateId::RX, 4, 0.1)});
  EXPECT_THROW(map_qubits(k, ir::default_target(3)), Error);
}

TEST(Schedule, Examples) {
  const auto t = ir::default_target(2);
  const auto a = schedule_asap(kernel_of({g1(GateId::RX, 0, 0.1), g1(GateId::RX, 1, 0.2)}), t);
  EXPECT_EQ(a.start_cycles, (std::vector<std::uint64_t>{0, 0}));
  EXPECT_EQ(a.depth, 1u);
  const auto b = schedule_asap(kernel_of({g1(GateId::RY, 0, 0.1), g2(GateId::CZ, 0, 1)}), t);
  EXPECT_EQ(b.start_cycles, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(b.depth, 3u);
  EXPECT_TRUE(b.scheduled);
}

TEST(Schedule, NoOverlapOnSharedQubits) {
  std::mt19937_64 rng(4);
  const auto t = ir::default_target(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testing::random_unitary_module(rng, {4, 30, 2});
    const auto native = decompose_to_native(m.kernels[0], t);
    const auto s = schedule_asap(native, t);
    std::map<std::uint32_t, std::uint64_t> busy_until;
    for (std::size_t i = 0; i < s.body.size(); ++i) {
      const Instr &in = at(s, i);
      for (std::uint32_t q : in.qubits) {
        EXPECT_GE(s.start_cycles[i], busy_until[q]);
        busy_until[q] = s.start_cycles[i] + t.duration(in.gate);
      }
    }
  }
}

TEST(Pipeline, EmptyKernel) {
  ir::QModule m;
  m.declarations.push_back({ir::RegisterKind::Qubit, "q", 1});
  m.kernels.push_back(QKernel{.name = "empty"});
  const auto r = run_pipeline(m, ir::default_target(1));
  EXPECT_TRUE(r.module.kernels[0].body.empty());
  EXPECT_EQ(r.report.kernels.at(0).instructions, 0u);
  EXPECT_EQ(r.report.kernels.at(0).depth, 0u);
}

TEST(Pipeline, XBecomesRxPi) {
  const auto m = frontend::compile_to_ir("qbit q[1]; kernel k() { X(q[0]); }");
  const auto r = run_pipeline(m, ir::default_target(1));
  const auto &k = r.module.kernels[0];
  ASSERT_EQ(k.body.size(), 1u);
  EXPECT_EQ(at(k, 0).gate, GateId::RX);
  EXPECT_EQ(std::get<double>(at(k, 0).param), std::numbers::pi);
  EXPECT_EQ(k.depth, 1u);
}

TEST(Pipeline, OptimisationNeverAddsInstructions) {
  const auto m = frontend::compile_to_ir(tfd::generate_source(3));
  const auto t = ir::default_target(6);
  const auto o0 = run_pipeline(m, t, {0, true});
  const auto o1 = run_pipeline(m, t, {1, true});
  for (std::size_t i = 0; i < m.kernels.size(); ++i) {
    EXPECT_LE(o1.module.kernels[i].instruction_count(), o0.module.kernels[i].instruction_count());
  }
  EXPECT_EQ(o1.report.passes.back().swaps, 0u);
  EXPECT_NE(o1.report.to_json().find("\"peephole\""), std::string::npos);
}

TEST(Pipeline, SymbolsPreservedThroughEveryPass) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_unitary_module(rng, {4, 30, 3});
    auto t = ir::default_target(4);
    t.topology = ir::Topology::Linear;
    const auto r = run_pipeline(m, t);
    EXPECT_EQ(symbols(r.module.kernels[0]), symbols(m.kernels[0]));
    for (const auto &op : r.module.kernels[0].body) {
      const Instr &in = std::get<Instr>(op);
      if (in.qubits.size() == 2) EXPECT_TRUE(t.adjacent(in.qubits[0], in.qubits[1]));
    }
  }
}

TEST(Pipeline, RejectsInvalidModule) {
  ir::QModule m;
  m.kernels.push_back(kernel_of({g1(GateId::X, 0)}));
  EXPECT_THROW(run_pipeline(m, ir::default_target(1)), Error);
}

}  // namespace
}  // namespace qhc::passes
