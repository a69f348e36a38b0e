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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qhc::ir {

using Complex = std::complex<double>;

/// Row-major 2^k x 2^k matrix. Operand 0 of the gate is the most significant
/// bit of the row/column index.
using GateMatrix = std::vector<Complex>;

/// Fixed gate identifiers. These values are part of the on-disk contract of
/// the textual IR and gate records and never change.
enum class GateId : std::uint8_t {
  PrepZ = 0,
  MeasZ = 1,
  X = 2,
  Y = 3,
  Z = 4,
  H = 5,
  S = 6,
  Sdg = 7,
  T = 8,
  Tdg = 9,
  CZ = 10,
  CNOT = 11,
  SWAP = 12,
  CCNOT = 13,
  RX = 14,
  RY = 15,
  RZ = 16,
};

inline constexpr std::size_t kGateCount = 17;

/// A quantum operation described by its matrix-attribute record. For fixed
/// gates the stored matrix is the operation. For rotations the stored matrix
/// is the Hermitian generator G, with U(theta) = exp(-i theta G / 2).
struct GateDef {
  using Generator = GateMatrix (*)(std::span<const double>);

  std::string name;
  std::vector<double> matrix_real;
  std::vector<double> matrix_imag;
  std::string matrix_order = "rm";
  bool is_hermitian = false;
  bool is_unitary = true;
  bool is_mutable = true;
  std::vector<int> qubit_list;
  std::vector<int> parametric_list;
  std::vector<int> control_qubit_list;
  std::vector<int> local_basis_list;
  GateId identifier = GateId::X;
  Generator generator = nullptr;

  std::size_t num_qubits() const { return qubit_list.size(); }
  std::size_t num_params() const { return parametric_list.size(); }
  bool is_parametric() const { return !parametric_list.empty(); }
  std::size_t dimension() const { return std::size_t{1} << num_qubits(); }
};

/// The 17 standard gates, indexed by GateId value.
const std::vector<GateDef> &gatedb();

const GateDef &gate_def(GateId id);

/// Lookup by canonical name ("X", "SDG", "CNOT", "RZ", "PREPZ", ...).
const GateDef *find_gate(std::string_view name);

std::string_view gate_name(GateId id);

/// Evaluates the gate's matrix. Throws ParamCountMismatch when the number of
/// parameters does not match parametric_list.
GateMatrix gate_matrix(const GateDef &def, std::span<const double> params = {});

/// The attribute record as a JSON object using exactly the record field names.
std::string gate_record_json(const GateDef &def);

bool is_two_qubit(GateId id);

}  // namespace qhc::ir
