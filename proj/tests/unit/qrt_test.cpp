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

#include <cstdlib>
#include <numbers>
#include <random>

#include "qhc/codegen/elfq.hpp"
#include "qhc/codegen/isa.hpp"
#include "qhc/error.hpp"
#include "qhc/qrt/session.hpp"
#include "qhc/tfd/ansatz.hpp"
#include "qhc/tfd/reference.hpp"
#include "qhc/toolchain.hpp"

namespace qhc::qrt {
namespace {

codegen::ElfqImage image_of(const std::string &src) { return Toolchain().compile(src).image; }

const char *kProgram = R"(
qbit q[2];
cbit c[2];
shared double QVarParams[2];
kernel prep() { PREPZ(q[0]); PREPZ(q[1]); }
kernel had() { PREPZ(q[0]); H(q[0]); MEASZ(q[0], c[0]); }
kernel bell() { PREPZ(q[0]); PREPZ(q[1]); H(q[0]); CNOT(q[0], q[1]); MEASZ(q[0], c[0]); MEASZ(q[1], c[1]); }
kernel flip() { PREPZ(q[0]); X(q[0]); MEASZ(q[0], c[0]); }
kernel zero() { PREPZ(q[0]); MEASZ(q[0], c[0]); }
kernel rot() { PREPZ(q[0]); RX(q[0], QVarParams[0]); RZ(q[1], QVarParams[0]); MEASZ(q[0], c[0]); }
kernel rot_folded() { PREPZ(q[0]); RX(q[0], 1.25); RZ(q[1], 1.25); MEASZ(q[0], c[0]); }
)";

class SessionTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("QRT_SEED"); }
  codegen::ElfqImage image = image_of(kProgram);
};

TEST_F(SessionTest, OpenAndInitialRegister) {
  Session s(image, {"statevector", 2, 0});
  EXPECT_EQ(s.probability_register(), (std::vector<double>{1, 0, 0, 0}));
  s.call_kernel("prep");
  EXPECT_EQ(s.probability_register(), (std::vector<double>{1, 0, 0, 0}));
  EXPECT_EQ(s.stats().compile_count, 0u);
}

TEST_F(SessionTest, ConfigErrors) {
  try {
    Session s(image, {"statevector", 1, 0});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::QubitCountTooSmall);
  }
  try {
    Session s(image, {"hardware", 0, 0});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::BackendUnavailable);
  }
}

TEST_F(SessionTest, DispatchExamples) {
  Session s(image, {"statevector", 0, 3});
  s.call_kernel("had");
  const auto p = s.probability_register();
  ASSERT_EQ(p.size(), 4u);
  // q1 untouched; q0 = |+>.
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[2], 0.5, 1e-12);
  const int c0 = s.get_cbit("c", 0);
  EXPECT_TRUE(c0 == 0 || c0 == 1);

  s.call_kernel("bell");
  const auto b = s.probability_register();
  EXPECT_NEAR(b[0], 0.5, 1e-12);
  EXPECT_NEAR(b[1], 0.0, 1e-12);
  EXPECT_NEAR(b[2], 0.0, 1e-12);
  EXPECT_NEAR(b[3], 0.5, 1e-12);
  EXPECT_EQ(s.get_cbit("c", 0), s.get_cbit("c", 1));

  s.call_kernel("zero");
  EXPECT_EQ(s.get_cbit("c", 0), 0);
  s.call_kernel("flip");
  EXPECT_EQ(s.get_cbit("c", 0), 1);
  EXPECT_EQ(s.stats().dispatches, 4u);
}

TEST_F(SessionTest, Errors) {
  Session s(image);
  EXPECT_THROW(s.call_kernel("missing"), Error);
  EXPECT_THROW(s.set_param("nope", 0, 1.0), Error);
  EXPECT_THROW(s.set_param("QVarParams", 2, 1.0), Error);
  EXPECT_THROW(s.get_cbit("c", 5), Error);
}

TEST_F(SessionTest, ParamsLastWriteWins) {
  Session s(image);
  s.set_param("QVarParams", 0, 0.5);
  s.set_param("QVarParams", 0, 1.25);
  EXPECT_EQ(s.get_param("QVarParams", 0), 1.25);
}

TEST_F(SessionTest, PatchEqualsFoldedEncoding) {
  Session s(image);
  s.set_param("QVarParams", 0, 1.25);
  s.call_kernel("rot");
  const auto patched = s.probability_register();
  s.call_kernel("rot_folded");
  const auto folded = s.probability_register();
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(patched[i], folded[i], 1e-12);
  EXPECT_NEAR(patched[2] + patched[3], std::pow(std::sin(0.625), 2), 1e-12);
}

TEST_F(SessionTest, PatchQbbWordLevel) {
  ParamStore params(image);
  params.set("QVarParams", 0, 1.25);
  const auto symbols = image.symbol_refs();
  const auto *rot = image.find_kernel("rot");
  const auto *folded = image.find_kernel("rot_folded");
  std::size_t count = 0;
  const auto out = patch_qbb(image.kernel_text(*rot), params, symbols, &count);
  EXPECT_EQ(count, 2u);
  const auto want = image.kernel_text(*folded);
  EXPECT_TRUE(std::equal(out.begin(), out.end(), want.begin(), want.end()));

  const auto *bell = image.find_kernel("bell");
  const auto same = patch_qbb(image.kernel_text(*bell), params, symbols, &count);
  EXPECT_EQ(count, 0u);
  const auto orig = image.kernel_text(*bell);
  EXPECT_TRUE(std::equal(same.begin(), same.end(), orig.begin(), orig.end()));
}

TEST_F(SessionTest, ImageUnchangedByDispatch) {
  const auto before = codegen::serialize(image);
  Session s(image);
  for (int i = 0; i < 10; ++i) {
    s.set_param("QVarParams", 0, 0.1 * i);
    s.call_kernel("rot");
  }
  EXPECT_EQ(codegen::serialize(s.image()), before);
  EXPECT_EQ(s.stats().patched_words, 20u);
}

TEST_F(SessionTest, SeedDeterminism) {
  auto stream = [&](std::uint64_t seed) {
    Session s(image, {"statevector", 0, seed});
    std::vector<int> bits;
    for (int i = 0; i < 64; ++i) {
      s.call_kernel("had");
      bits.push_back(s.get_cbit("c", 0));
    }
    return bits;
  };
  EXPECT_EQ(stream(42), stream(42));
  EXPECT_NE(stream(42), stream(43));
}

TEST_F(SessionTest, EnvironmentSeedOverrides) {
  setenv("QRT_SEED", "77", 1);
  Session s(image, {"statevector", 0, 1});
  EXPECT_EQ(s.seed(), 77u);
  setenv("QRT_SEED", "x", 1);
  EXPECT_THROW(Session{image}, Error);
  unsetenv("QRT_SEED");
}

TEST_F(SessionTest, TfdMatchesReference) {
  Toolchain tc;
  Session s(tc.compile(tfd::generate_source(3)).image);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const tfd::AngleSet a{u(rng), u(rng), u(rng), u(rng)};
    const auto arr = a.to_array();
    for (std::uint32_t i = 0; i < 4; ++i) s.set_param("P", i, arr[i]);
    s.call_kernel("tfd_Z");
    const auto pz = s.probability_register();
    const auto ref = tfd::reference_pipeline(3, a);
    for (std::size_t i = 0; i < pz.size(); ++i) EXPECT_NEAR(pz[i], ref.P_Z[i], 1e-10);
  }
  EXPECT_EQ(tc.compile_count(), 1u);
}

TEST_F(SessionTest, DeviceRejectsUnpatchedSymbols) {
  auto dev = make_device("statevector");
  dev->init(1, 0);
  codegen::MachineInstr mi;
  mi.opcode = 15;
  mi.qubits[0] = 0;
  mi.mode = codegen::ParamMode::Symbol;
  EXPECT_THROW(dev->execute(std::span(&mi, 1)), Error);
}

}  // namespace
}  // namespace qhc::qrt
