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

#include <numbers>
#include <random>
#include <string>

#include "qhc/error.hpp"
#include "qhc/frontend/lexer.hpp"
#include "qhc/frontend/lower.hpp"
#include "qhc/frontend/parser.hpp"
#include "qhc/frontend/semantic.hpp"
#include "qhc/tfd/ansatz.hpp"

namespace qhc::frontend {
namespace {

ErrorCode code_of(const std::string &src) {
  try {
    compile_to_ir(src);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << src;
  return ErrorCode::Io;
}

std::string message_of(const std::string &src) {
  try {
    compile_to_ir(src);
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

const ir::Instr &instr(const ir::QKernel &k, std::size_t i) {
  return std::get<ir::Instr>(k.body.at(i));
}

TEST(Lexer, EmptyInput) {
  const auto t = tokenize("");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].kind, TokenKind::End);
}

TEST(Lexer, Declaration) {
  const auto t = tokenize("qbit q[3];");
  ASSERT_EQ(t.size(), 7u);
  EXPECT_TRUE(t[0].is_keyword("qbit"));
  EXPECT_EQ(t[1].kind, TokenKind::Identifier);
  EXPECT_TRUE(t[2].is_punct("["));
  EXPECT_EQ(t[3].kind, TokenKind::Integer);
  EXPECT_EQ(t[3].text, "3");
  EXPECT_TRUE(t[4].is_punct("]"));
  EXPECT_TRUE(t[5].is_punct(";"));
  EXPECT_EQ(t[6].kind, TokenKind::End);
}

TEST(Lexer, GateCallTerminals) {
  // RX ( q [ 0 ] , P [ 0 ] ) ;  -> 13 grammar terminals before End.
  const auto t = tokenize("RX(q[0], P[0]);");
  ASSERT_EQ(t.size(), 14u);
  const char *texts[] = {"RX", "(", "q", "[", "0", "]", ",", "P", "[", "0", "]", ")", ";"};
  for (std::size_t i = 0; i < 13; ++i) EXPECT_EQ(t[i].text, texts[i]) << i;
  EXPECT_EQ(t[0].kind, TokenKind::Identifier);
  EXPECT_EQ(t[13].kind, TokenKind::End);
}

TEST(Lexer, NumbersRangeAndComments) {
  const auto t = tokenize("0..3 1.5 2e-3 // trailing\n0.25");
  ASSERT_GE(t.size(), 6u);
  EXPECT_EQ(t[0].kind, TokenKind::Integer);
  EXPECT_TRUE(t[1].is_punct(".."));
  EXPECT_EQ(t[2].kind, TokenKind::Integer);
  EXPECT_EQ(t[3].kind, TokenKind::Float);
  EXPECT_EQ(t[4].kind, TokenKind::Float);
  EXPECT_EQ(t[5].line, 2u);
}

TEST(Lexer, BadCharacterHasLocation) {
  try {
    tokenize("qbit q[1];\n  @");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::LexError);
    ASSERT_TRUE(e.location());
    EXPECT_EQ(e.location()->line, 2u);
    EXPECT_EQ(e.location()->column, 3u);
  }
}

TEST(Parser, MinimalProgram) {
  const AstProgram p = parse_source("qbit q[1]; kernel k() { X(q[0]); }");
  ASSERT_EQ(p.decls.size(), 2u);
  ASSERT_TRUE(std::holds_alternative<RegisterDeclNode>(p.decls[0]));
  const auto &k = std::get<KernelDecl>(p.decls[1]);
  ASSERT_EQ(k.body.size(), 1u);
  EXPECT_EQ(std::get<GateCall>(k.body[0].node).gate, "X");
}

TEST(Parser, ForLoopNode) {
  const AstProgram p = parse_source("kernel k() { for i in 0..3 { X(q[i]); } }");
  const auto &k = std::get<KernelDecl>(p.decls[0]);
  ASSERT_EQ(k.body.size(), 1u);
  const auto &loop = std::get<ForLoop>(k.body[0].node);
  EXPECT_EQ(loop.var, "i");
  EXPECT_EQ(loop.body.size(), 1u);
}

TEST(Parser, TfdSourceHasSevenKernels) {
  const AstProgram p = parse_source(tfd::generate_source(3));
  int kernels = 0;
  for (const Decl &d : p.decls) kernels += std::holds_alternative<KernelDecl>(d);
  EXPECT_EQ(kernels, 7);
  EXPECT_NO_THROW(compile_to_ir(tfd::generate_source(3)));
}

TEST(Parser, MissingSemicolon) {
  try {
    parse_source("qbit q[1];\nkernel k() {\n  X(q[0])\n}\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    ASSERT_TRUE(e.location());
    EXPECT_EQ(e.location()->line, 4u);
  }
}

TEST(Parser, PrintRoundtrip) {
  const std::string sources[] = {
      "qbit q[1]; kernel k() { X(q[0]); }",
      tfd::generate_source(2),
      tfd::generate_source(4, tfd::AngleSet{0.1, -0.2, 0.3, -1e-7}),
      "const int N = (2 + 3) * 4 - -1; qbit q[N % 7]; shared double P[2];"
      "kernel a() { RZ(q[0], -(pi / 2) * (1 - 2.5)); RX(q[N / 5 - 3], P[1]); }"
      "kernel b() { for j in 1..N { a(); } }",
  };
  for (const std::string &src : sources) {
    const AstProgram p = parse_source(src);
    const std::string printed = print_program(p);
    EXPECT_EQ(parse_source(printed), p) << printed;
    EXPECT_EQ(print_program(parse_source(printed)), printed);
  }
}

TEST(Parser, PrintKeepsNonAssociativeGrouping) {
  const AstProgram p = parse_source("const int a = 8 - (4 - 2); const int b = 8 / (4 / 2);");
  EXPECT_EQ(parse_source(print_program(p)), p);
  const auto m = analyze(p);
  EXPECT_EQ(m.constants.at("a"), 6);
  EXPECT_EQ(m.constants.at("b"), 4);
}

TEST(Semantic, UndefinedSymbol) {
  EXPECT_EQ(code_of("kernel k() { X(q[0]); }"), ErrorCode::UndefinedSymbol);
  EXPECT_NE(message_of("kernel k() { X(q[0]); }").find("q"), std::string::npos);
}

TEST(Semantic, RecursiveCall) {
  EXPECT_EQ(code_of("kernel a() { b(); } kernel b() { a(); }"),
            ErrorCode::RecursiveKernelCall);
  EXPECT_EQ(code_of("kernel a() { a(); }"), ErrorCode::RecursiveKernelCall);
}

TEST(Semantic, Arity) {
  const std::string src = "qbit q[2]; kernel k() { CNOT(q[0]); }";
  EXPECT_EQ(code_of(src), ErrorCode::ArityMismatch);
  EXPECT_NE(message_of(src).find("expected 2 qubits, found 1"), std::string::npos);
  EXPECT_EQ(code_of("qbit q[1]; kernel k() { RX(q[0]); }"), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of("qbit q[1]; kernel k() { X(q[0], 0.5); }"), ErrorCode::ArityMismatch);
}

TEST(Semantic, OtherErrors) {
  EXPECT_EQ(code_of("qbit q[1]; qbit q[2];"), ErrorCode::DuplicateDefinition);
  EXPECT_EQ(code_of("qbit H[1];"), ErrorCode::DuplicateDefinition);
  EXPECT_EQ(code_of("qbit q[0];"), ErrorCode::InvalidLength);
  EXPECT_EQ(code_of("qbit q[2]; kernel k() { X(q[2]); }"), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of("qbit q[2]; cbit c[1]; kernel k() { X(c[0]); }"),
            ErrorCode::TypeMismatch);
  EXPECT_EQ(code_of("qbit q[2]; kernel k() { RX(q[0], q[1]); }"), ErrorCode::TypeMismatch);
  EXPECT_EQ(code_of("qbit q[2]; kernel k() { for i in 0..2 { for i in 0..2 { X(q[i]); } } }"),
            ErrorCode::DuplicateDefinition);
  EXPECT_EQ(code_of("qbit q[2]; kernel k() { X(q[1 / 0]); }"), ErrorCode::InvalidExpression);
  EXPECT_EQ(code_of("qbit q[2]; kernel k() { for i in 0..2 { for j in 0..i { X(q[j]); } } }"),
            ErrorCode::NonConstantLoopBound);
  EXPECT_EQ(code_of("qbit q[2]; kernel k() { X(q[0.5]); }"), ErrorCode::TypeMismatch);
  EXPECT_EQ(code_of("qbit q[2]; kernel k() { CZ(q[0], q[0]); }"), ErrorCode::DuplicateOperand);
  EXPECT_EQ(code_of("qbit q[2]; kernel k() { for i in -1..1 { X(q[0]); } }"),
            ErrorCode::LoopBoundNegative);
  EXPECT_EQ(code_of("qbit q[1]; kernel k() { for i in 0..1048577 { X(q[0]); } }"),
            ErrorCode::KernelTooLarge);
}

TEST(Lower, Unroll) {
  const auto m = compile_to_ir("qbit q[3]; kernel k() { for i in 0..3 { X(q[i]); } }");
  const auto &k = m.kernels.at(0);
  ASSERT_EQ(k.body.size(), 3u);
  for (std::uint32_t i = 0; i < 3; ++i) {
    EXPECT_EQ(instr(k, i).gate, ir::GateId::X);
    EXPECT_EQ(instr(k, i).qubits, std::vector<std::uint32_t>{i});
  }
}

TEST(Lower, ConstantFoldNegativeHalfPi) {
  const auto m = compile_to_ir("qbit q[1]; kernel k() { RY(q[0], -pi/2); }");
  const auto &in = instr(m.kernels.at(0), 0);
  EXPECT_EQ(in.gate, ir::GateId::RY);
  EXPECT_EQ(std::get<double>(in.param), -1.5707963267948966);
}

TEST(Lower, SymbolWithFoldedIndex) {
  const auto m = compile_to_ir("qbit q[1]; shared double P[3]; kernel k() { RX(q[0], P[1+1]); }");
  const auto &in = instr(m.kernels.at(0), 0);
  EXPECT_EQ(std::get<ir::SymbolRef>(in.param), (ir::SymbolRef{"P", 2}));
}

TEST(Lower, SharedElementInsideArithmeticIsRejected) {
  // A shared element is only usable as a whole angle argument.
  EXPECT_EQ(code_of("qbit q[1]; shared double P[1]; kernel k() { RX(q[0], 2 * P[0]); }"),
            ErrorCode::ParseError);
}

TEST(Lower, EmptyAndReversedLoops) {
  const auto m = compile_to_ir(
      "qbit q[1]; kernel k() { for i in 3..3 { X(q[0]); } for i in 4..2 { X(q[0]); } Y(q[0]); }");
  EXPECT_EQ(m.kernels.at(0).body.size(), 1u);
}

TEST(Lower, UnrollCountProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int a = static_cast<int>(rng() % 65);
    const int b = a + static_cast<int>(rng() % (65 - a));
    const std::string src = "qbit q[2]; cbit c[1]; kernel k() { Z(q[1]); for i in " +
                            std::to_string(a) + ".." + std::to_string(b) +
                            " { H(q[0]); CNOT(q[0], q[1]); } MEASZ(q[0], c[0]); }";
    const auto m = compile_to_ir(src);
    EXPECT_EQ(m.kernels.at(0).body.size(), 2u + 2u * static_cast<std::size_t>(b - a));
  }
}

TEST(Lower, KernelCallsStayAsMarkers) {
  const auto m = compile_to_ir("qbit q[1]; kernel a() { X(q[0]); } kernel b() { a(); a(); }");
  const auto *b = m.find_kernel("b");
  ASSERT_NE(b, nullptr);
  ASSERT_EQ(b->body.size(), 2u);
  EXPECT_EQ(std::get<ir::KernelCall>(b->body[0]).callee, "a");
}

TEST(Lower, DeterministicAndSymbolsNeverFolded) {
  const std::string src = tfd::generate_source(3);
  const auto m1 = compile_to_ir(src);
  EXPECT_EQ(ir::print_ir(m1), ir::print_ir(compile_to_ir(src)));
  std::size_t symbols = 0;
  for (const auto &k : m1.kernels) {
    for (const auto &op : k.body) {
      if (const auto *in = std::get_if<ir::Instr>(&op)) symbols += ir::has_symbol(in->param);
    }
  }
  EXPECT_GT(symbols, 0u);
  EXPECT_EQ(ir::print_ir(m1).find("imm 0\n"), std::string::npos);
}

TEST(Lower, FlatIndicesFollowDeclarationOrder) {
  const auto m = compile_to_ir("qbit a[2]; qbit b[3]; kernel k() { X(b[1]); }");
  EXPECT_EQ(instr(m.kernels.at(0), 0).qubits, std::vector<std::uint32_t>{3});
}

}  // namespace
}  // namespace qhc::frontend
