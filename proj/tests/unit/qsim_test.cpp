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

#include <cmath>
#include <numbers>
#include <random>

#include "dense_oracle.hpp"
#include "qhc/error.hpp"
#include "qhc/ir/gate.hpp"
#include "qhc/qsim/statevector.hpp"

namespace qhc::qsim {
namespace {

using ir::GateId;

void apply(StateVector &sv, GateId g, std::vector<std::uint32_t> qubits, double theta = 0.0) {
  const auto m = ir::gate_matrix(ir::gate_def(g), {&theta, ir::gate_def(g).num_params()});
  sv.apply_unitary(m, qubits);
}

TEST(StateVector, Init) {
  StateVector one(1);
  EXPECT_EQ(one.amplitudes()[0], Complex(1.0));
  EXPECT_EQ(one.amplitudes()[1], Complex(0.0));
  StateVector three(3);
  EXPECT_EQ(three.dimension(), 8u);
  EXPECT_EQ(three.amplitudes()[0], Complex(1.0));
  try {
    StateVector big(25);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyQubits);
  }
}

TEST(StateVector, SingleQubitExamples) {
  StateVector sv(1);
  apply(sv, GateId::H, {0});
  EXPECT_NEAR(sv.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(sv.amplitudes()[1].real(), 1 / std::sqrt(2.0), 1e-15);
  for (double theta : {0.0, 0.3, 1.7, std::numbers::pi, 5.0}) {
    StateVector r(1);
    apply(r, GateId::RX, {0}, theta);
    EXPECT_NEAR(r.probability_one(0), std::pow(std::sin(theta / 2), 2), 1e-14);
  }
}

TEST(StateVector, ProbabilityExamples) {
  StateVector bell(2);
  apply(bell, GateId::H, {0});
  apply(bell, GateId::CNOT, {0, 1});
  const auto p = bell.probabilities();
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.0, 1e-15);
  EXPECT_NEAR(p[2], 0.0, 1e-15);
  EXPECT_NEAR(p[3], 0.5, 1e-15);

  StateVector msb(2);
  apply(msb, GateId::X, {0});
  EXPECT_EQ(msb.probabilities(), (std::vector<double>{0, 0, 1, 0}));

  StateVector uniform(2);
  apply(uniform, GateId::H, {0});
  apply(uniform, GateId::H, {1});
  for (double v : uniform.probabilities()) EXPECT_NEAR(v, 0.25, 1e-15);
}

TEST(StateVector, RandomCircuitMatchesDenseProduct) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_unitary_module(rng, {3, 30, 0});
    StateVector sv(3);
    for (const auto &op : m.kernels[0].body) {
      const auto &in = std::get<ir::Instr>(op);
      const double theta = ir::has_immediate(in.param) ? std::get<double>(in.param) : 0.0;
      apply(sv, in.gate, in.qubits, theta);
    }
    const testing::Vec expected = testing::kernel_unitary(m.kernels[0], 3).col(0);
    for (std::size_t i = 0; i < 8; ++i) {
      EXPECT_LT(std::abs(sv.amplitudes()[i] - expected(static_cast<Eigen::Index>(i))), 1e-10);
    }
  }
}

TEST(StateVector, SingleQubitEmbeddingMatchesKronecker) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t q = 0; q < n; ++q) {
      std::vector<Complex> amps(std::size_t{1} << n);
      for (auto &a : amps) a = {u(rng), u(rng)};
      double norm = 0;
      for (const auto &a : amps) norm += std::norm(a);
      for (auto &a : amps) a /= std::sqrt(norm);
      StateVector sv(n);
      sv.set_amplitudes(amps);
      const double theta = u(rng) * 3;
      apply(sv, GateId::RY, {q}, theta);
      testing::Vec v(static_cast<Eigen::Index>(amps.size()));
      for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
      const testing::Vec expected =
          testing::embed_1q(testing::textbook_gate(GateId::RY, theta), q, n) * v;
      for (std::size_t i = 0; i < amps.size(); ++i) {
        EXPECT_LT(std::abs(sv.amplitudes()[i] - expected(static_cast<Eigen::Index>(i))), 1e-12);
      }
    }
  }
}

TEST(StateVector, MeasurementDeterministicCases) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    StateVector zero(1);
    EXPECT_EQ(zero.measure_z(0, rng), 0);
    StateVector one(1);
    apply(one, GateId::X, {0});
    EXPECT_EQ(one.measure_z(0, rng), 1);
  }
}

TEST(StateVector, CollapseRenormalises) {
  Rng rng(4);
  StateVector sv(3);
  apply(sv, GateId::H, {0});
  apply(sv, GateId::RY, {1}, 0.7);
  apply(sv, GateId::CNOT, {1, 2});
  const int bit = sv.measure_z(1, rng);
  double total = 0;
  for (double p : sv.probabilities()) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(sv.probability_one(1), bit, 1e-12);
  EXPECT_NEAR(sv.probability_one(2), bit, 1e-12);
}

TEST(StateVector, PrepareZeroResetsQubit) {
  Rng rng(6);
  StateVector sv(2);
  apply(sv, GateId::H, {0});
  apply(sv, GateId::CNOT, {0, 1});
  sv.prepare_zero(0, rng);
  EXPECT_NEAR(sv.probability_one(0), 0.0, 1e-15);
  // A qubit already in |0> does not consume randomness.
  Rng a(9), b(9);
  StateVector clean(1);
  clean.prepare_zero(0, a);
  EXPECT_EQ(a(), b());
}

TEST(StateVector, BadOperands) {
  StateVector sv(2);
  const auto h = ir::gate_matrix(ir::gate_def(GateId::H));
  EXPECT_THROW(sv.apply_unitary(h, std::vector<std::uint32_t>{2}), Error);
  const auto cz = ir::gate_matrix(ir::gate_def(GateId::CZ));
  EXPECT_THROW(sv.apply_unitary(cz, std::vector<std::uint32_t>{1, 1}), Error);
  EXPECT_THROW(sv.apply_unitary(cz, std::vector<std::uint32_t>{1}), Error);
  EXPECT_THROW(sv.set_amplitudes(std::vector<Complex>(3)), Error);
}

TEST(StateVector, NormPreservedPerGate) {
  std::mt19937_64 rng(12);
  const auto m = testing::random_unitary_module(rng, {5, 200, 0});
  StateVector sv(5);
  for (const auto &op : m.kernels[0].body) {
    const auto &in = std::get<ir::Instr>(op);
    apply(sv, in.gate, in.qubits, ir::has_immediate(in.param) ? std::get<double>(in.param) : 0.0);
    double total = 0;
    for (double p : sv.probabilities()) total += p;
    ASSERT_NEAR(total, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace qhc::qsim
