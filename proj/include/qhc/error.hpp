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
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhc {

/// Every failure the toolchain can report. Each case maps to a distinct
/// integer so tools and bindings can branch on it.
enum class ErrorCode : int {
  // frontend
  LexError = 1,
  ParseError,
  UndefinedSymbol,
  ArityMismatch,
  RecursiveKernelCall,
  IndexOutOfRange,
  DuplicateDefinition,
  TypeMismatch,
  InvalidLength,
  InvalidExpression,
  LoopBoundNegative,
  NonConstantLoopBound,
  KernelTooLarge,
  DuplicateOperand,
  // ir
  ParamCountMismatch,
  InvalidModule,
  // passes
  NotDecomposable,
  TooManyQubits,
  RoutingFailed,
  InvalidTarget,
  // codegen
  UnencodableGate,
  BadOpcode,
  TruncatedParamWord,
  NonzeroReservedBits,
  MalformedInstruction,
  BadMagic,
  BadVersion,
  SectionOutOfBounds,
  MalformedSection,
  DanglingSymbolIndex,
  // runtime and simulator
  QubitCountTooSmall,
  BackendUnavailable,
  UnknownParam,
  UnknownKernel,
  BadOperands,
  // workload
  BadMask,
  LengthMismatch,
  NotDensityMatrix,
  InvalidConfig,
  Io,
};

std::string_view error_code_name(ErrorCode code);

struct SourceLocation {
  std::uint32_t line = 0;
  std::uint32_t column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message,
        std::optional<SourceLocation> where = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourceLocation> &location() const noexcept {
    return where_;
  }

 private:
  ErrorCode code_;
  std::optional<SourceLocation> where_;
};

}  // namespace qhc
