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

#include "qhc/error.hpp"

namespace qhc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LexError: return "LexError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndefinedSymbol: return "UndefinedSymbol";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::RecursiveKernelCall: return "RecursiveKernelCall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateDefinition: return "DuplicateDefinition";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::InvalidExpression: return "InvalidExpression";
    case ErrorCode::LoopBoundNegative: return "LoopBoundNegative";
    case ErrorCode::NonConstantLoopBound: return "NonConstantLoopBound";
    case ErrorCode::KernelTooLarge: return "KernelTooLarge";
    case ErrorCode::DuplicateOperand: return "DuplicateOperand";
    case ErrorCode::ParamCountMismatch: return "ParamCountMismatch";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::RoutingFailed: return "RoutingFailed";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::UnencodableGate: return "UnencodableGate";
    case ErrorCode::BadOpcode: return "BadOpcode";
    case ErrorCode::TruncatedParamWord: return "TruncatedParamWord";
    case ErrorCode::NonzeroReservedBits: return "NonzeroReservedBits";
    case ErrorCode::MalformedInstruction: return "MalformedInstruction";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::BadVersion: return "BadVersion";
    case ErrorCode::SectionOutOfBounds: return "SectionOutOfBounds";
    case ErrorCode::MalformedSection: return "MalformedSection";
    case ErrorCode::DanglingSymbolIndex: return "DanglingSymbolIndex";
    case ErrorCode::QubitCountTooSmall: return "QubitCountTooSmall";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::UnknownParam: return "UnknownParam";
    case ErrorCode::UnknownKernel: return "UnknownKernel";
    case ErrorCode::BadOperands: return "BadOperands";
    case ErrorCode::BadMask: return "BadMask";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message,
             std::optional<SourceLocation> where)
    : std::runtime_error(message), code_(code), where_(where) {}

}  // namespace qhc
