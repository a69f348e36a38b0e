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
#include <bit>
#include <cstring>
#include <filesystem>
#include <numbers>
#include <random>

#include "dense_oracle.hpp"
#include "qhc/codegen/elfq.hpp"
#include "qhc/codegen/isa.hpp"
#include "qhc/error.hpp"
#include "qhc/frontend/lower.hpp"
#include "qhc/ir/target.hpp"
#include "qhc/passes/pipeline.hpp"
#include "qhc/tfd/ansatz.hpp"

namespace qhc::codegen {
namespace {

using ir::GateId;

ir::QModule small_module() {
  ir::QModule m;
  m.declarations = {{ir::RegisterKind::Qubit, "q", 4},
                    {ir::RegisterKind::Cbit, "c", 2},
                    {ir::RegisterKind::Shared, "P", 6}};
  return m;
}

ErrorCode parse_code(const std::vector<std::uint8_t> &bytes) {
  try {
    parse_image(bytes);
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::Io;
}

ir::QModule compiled_tfd(std::uint32_t L) {
  const auto m = frontend::compile_to_ir(tfd::generate_source(L));
  return passes::run_pipeline(m, ir::default_target(2 * L)).module;
}

TEST(Opcodes, FixedTable) {
  EXPECT_EQ(opcode_for(GateId::PrepZ), 1);
  EXPECT_EQ(opcode_for(GateId::MeasZ), 2);
  EXPECT_EQ(opcode_for(GateId::CZ), 11);
  EXPECT_EQ(opcode_for(GateId::RZ), 17);
  EXPECT_EQ(opcode_table().size(), 17u);
  EXPECT_FALSE(gate_for_opcode(0));
  EXPECT_FALSE(gate_for_opcode(18));
}

TEST(Encode, RzImmediate) {
  const auto m = small_module();
  const ir::Instr in{GateId::RZ, {3}, std::nullopt, std::numbers::pi / 2};
  std::vector<std::uint64_t> words;
  encode(to_machine(in, m), words);
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0], 0x000001FFFFFF0311ull);
  EXPECT_EQ(words[1], std::bit_cast<std::uint64_t>(1.5707963267948966));
  const auto back = decode_words(words);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(from_machine(back[0], {}), in);
}

TEST(Encode, MeasAndSymbol) {
  const auto m = small_module();
  std::vector<std::uint64_t> words;
  encode(to_machine(ir::Instr{GateId::MeasZ, {0}, 0u, {}}, m), words);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_EQ(words[0] & 0xFF, 2u);
  EXPECT_EQ((words[0] >> 8) & 0xFF, 0u);
  EXPECT_EQ((words[0] >> 32) & 0xFF, 0u);
  EXPECT_EQ((words[0] >> 40) & 0xFF, 0u);

  words.clear();
  encode(to_machine(ir::Instr{GateId::RX, {0}, std::nullopt, ir::SymbolRef{"P", 5}}, m), words);
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ((words[0] >> 40) & 0xFF, 2u);
  EXPECT_EQ(words[1], 5u);
}

TEST(Decode, Rejections) {
  auto code = [](std::vector<std::uint64_t> w) {
    try {
      decode_words(w);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code({0x000001FFFFFF0311ull}), ErrorCode::TruncatedParamWord);
  EXPECT_EQ(code({0x000000FFFFFF0300ull}), ErrorCode::BadOpcode);
  EXPECT_EQ(code({0x000000FFFFFF0303ull | (1ull << 48)}), ErrorCode::NonzeroReservedBits);
  EXPECT_EQ(code({0x000000FFFFFF0311ull}), ErrorCode::MalformedInstruction);  // RZ without param
  EXPECT_EQ(code({0x000000FFFF03030Bull}), ErrorCode::MalformedInstruction);  // CZ q3,q3
  EXPECT_EQ(code({0x000000FFFFFF0302ull}), ErrorCode::MalformedInstruction);  // MEASZ no cbit
}

TEST(Encode, RandomRoundtripIsBijective) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = testing::random_unitary_module(rng, {5, 40, 6});
    const auto &k = m.kernels[0];
    const EncodedKernel enc = encode_kernel(k, m);
    EXPECT_EQ(enc.bytes.size() % 8, 0u);
    std::vector<ir::SymbolRef> table;
    for (std::uint32_t i = 0; i < 6; ++i) table.push_back({"P", i});
    const auto back = decode_kernel(enc.bytes, table);
    ASSERT_EQ(back.size(), k.body.size());
    for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], std::get<ir::Instr>(k.body[i]));
  }
}

TEST(Asm, Listing) {
  ir::QKernel empty{.name = "e"};
  EXPECT_EQ(emit_asm(empty, 0), "@kernel e id=0 align=64\n");
  ir::QKernel cz{.name = "c"};
  cz.body.emplace_back(ir::Instr{GateId::CZ, {0, 1}, std::nullopt, {}});
  EXPECT_NE(emit_asm(cz, 1).find("\nCZ q0, q1\n"), std::string::npos);

  const auto m = compiled_tfd(3);
  const auto *z = m.find_kernel("tfd_Z");
  const std::string text = emit_asm(*z, 0);
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
            z->instruction_count() + 1);
  EXPECT_NE(text.find("$P[0]"), std::string::npos);
}

TEST(Elfq, EmptyModule) {
  ir::QModule m;
  const ElfqImage img = build_image(m);
  EXPECT_TRUE(img.qbbs.empty());
  const auto bytes = serialize(img);
  EXPECT_EQ(parse_image(bytes), img);
  const std::string report = inspect(img);
  EXPECT_NE(report.find("kernels 0"), std::string::npos);
  EXPECT_EQ(report.find("id="), std::string::npos);
}

TEST(Elfq, TfdImage) {
  const auto m = compiled_tfd(3);
  const ElfqImage img = build_image(m);
  EXPECT_EQ(img.qbbs.size(), m.kernels.size());
  EXPECT_EQ(img.qbbs.size(), 7u);
  for (std::size_t i = 0; i < img.qbbs.size(); ++i) {
    EXPECT_EQ(img.qbbs[i].kernel_id, i);
    EXPECT_EQ(img.qbbs[i].offset % img.qbbs[i].align, 0u);
    EXPECT_EQ(img.qbbs[i].align, 64u);
  }
  EXPECT_EQ(img.num_qubits, 6);
  EXPECT_NE(img.find_kernel("tfd_X"), nullptr);
  EXPECT_EQ(img.symbol_refs().size(), 4u);
  const auto bytes = serialize(img);
  EXPECT_EQ(serialize(parse_image(bytes)), bytes);
  EXPECT_NE(inspect_json(img).find("\"tfd_Z\""), std::string::npos);
}

TEST(Elfq, Corruptions) {
  const auto bytes = serialize(build_image(compiled_tfd(2)));
  auto truncated = bytes;
  truncated.pop_back();
  EXPECT_EQ(parse_code(truncated), ErrorCode::SectionOutOfBounds);
  auto magic = bytes;
  magic[1] = 'X';
  EXPECT_EQ(parse_code(magic), ErrorCode::BadMagic);
  auto version = bytes;
  version[4] = 9;
  EXPECT_EQ(parse_code(version), ErrorCode::BadVersion);
  EXPECT_EQ(parse_code({}), ErrorCode::BadMagic);
}

TEST(Elfq, FileRoundtrip) {
  const auto path = std::filesystem::temp_directory_path() / "qhc_codegen_test.elfq";
  const auto img = write_elfq(compiled_tfd(2), path);
  EXPECT_EQ(read_elfq(path), img);
  std::filesystem::remove(path);
  EXPECT_THROW(read_elfq(path), Error);
}

}  // namespace
}  // namespace qhc::codegen
