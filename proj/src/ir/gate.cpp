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

#include "qhc/ir/gate.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"
#include "qhc/error.hpp"

namespace qhc::ir {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Complex kI{0.0, 1.0};

GateMatrix rx(std::span<const double> p) {
  const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
  return {c, -kI * s, -kI * s, c};
}

GateMatrix ry(std::span<const double> p) {
  const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
  return {c, -s, s, c};
}

GateMatrix rz(std::span<const double> p) {
  return {std::exp(-kI * (p[0] / 2)), 0.0, 0.0, std::exp(kI * (p[0] / 2))};
}

GateDef make(std::string name, GateId id, const GateMatrix &m,
             std::size_t qubits, bool hermitian) {
  GateDef def;
  def.name = std::move(name);
  def.identifier = id;
  for (const Complex &z : m) {
    def.matrix_real.push_back(z.real());
    def.matrix_imag.push_back(z.imag());
  }
  def.is_hermitian = hermitian;
  for (std::size_t i = 0; i < qubits; ++i) {
    def.qubit_list.push_back(static_cast<int>(i));
    def.local_basis_list.push_back(1);
  }
  return def;
}

GateMatrix permutation(std::size_t dim, const std::vector<std::size_t> &image) {
  GateMatrix m(dim * dim, 0.0);
  for (std::size_t col = 0; col < dim; ++col) m[image[col] * dim + col] = 1.0;
  return m;
}

std::vector<GateDef> build_database() {
  const Complex w = std::exp(kI * (std::numbers::pi / 4));
  std::vector<GateDef> db;
  db.reserve(kGateCount);

  GateDef prep = make("PREPZ", GateId::PrepZ, {1, 0, 0, 0}, 1, false);
  prep.is_unitary = false;
  prep.is_mutable = false;
  db.push_back(prep);
  GateDef meas = make("MEASZ", GateId::MeasZ, {1, 0, 0, 0}, 1, false);
  meas.is_unitary = false;
  meas.is_mutable = false;
  db.push_back(meas);

  db.push_back(make("X", GateId::X, {0, 1, 1, 0}, 1, true));
  db.push_back(make("Y", GateId::Y, {0, -kI, kI, 0}, 1, true));
  db.push_back(make("Z", GateId::Z, {1, 0, 0, -1}, 1, true));
  db.push_back(make("H", GateId::H,
                    {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}, 1, true));
  db.push_back(make("S", GateId::S, {1, 0, 0, kI}, 1, false));
  db.push_back(make("SDG", GateId::Sdg, {1, 0, 0, -kI}, 1, false));
  db.push_back(make("T", GateId::T, {1, 0, 0, w}, 1, false));
  db.push_back(make("TDG", GateId::Tdg, {1, 0, 0, std::conj(w)}, 1, false));

  GateDef cz = make("CZ", GateId::CZ,
                    {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}, 2, true);
  cz.control_qubit_list = {0};
  db.push_back(cz);
  GateDef cnot =
      make("CNOT", GateId::CNOT, permutation(4, {0, 1, 3, 2}), 2, true);
  cnot.control_qubit_list = {0};
  db.push_back(cnot);
  db.push_back(make("SWAP", GateId::SWAP, permutation(4, {0, 2, 1, 3}), 2, true));
  GateDef ccnot = make("CCNOT", GateId::CCNOT,
                       permutation(8, {0, 1, 2, 3, 4, 5, 7, 6}), 3, true);
  ccnot.control_qubit_list = {0, 1};
  db.push_back(ccnot);

  // Rotations store their Pauli generator.
  GateDef rxd = make("RX", GateId::RX, {0, 1, 1, 0}, 1, false);
  rxd.parametric_list = {0};
  rxd.generator = rx;
  db.push_back(rxd);
  GateDef ryd = make("RY", GateId::RY, {0, -kI, kI, 0}, 1, false);
  ryd.parametric_list = {0};
  ryd.generator = ry;
  db.push_back(ryd);
  GateDef rzd = make("RZ", GateId::RZ, {1, 0, 0, -1}, 1, false);
  rzd.parametric_list = {0};
  rzd.generator = rz;
  db.push_back(rzd);
  return db;
}

}  // namespace

const std::vector<GateDef> &gatedb() {
  static const std::vector<GateDef> db = build_database();
  return db;
}

const GateDef &gate_def(GateId id) {
  return gatedb().at(static_cast<std::size_t>(id));
}

const GateDef *find_gate(std::string_view name) {
  for (const GateDef &def : gatedb()) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

std::string_view gate_name(GateId id) { return gate_def(id).name; }

GateMatrix gate_matrix(const GateDef &def, std::span<const double> params) {
  if (params.size() != def.num_params()) {
    throw Error(ErrorCode::ParamCountMismatch,
                def.name + " takes " + std::to_string(def.num_params()) +
                    " parameter(s), got " + std::to_string(params.size()));
  }
  if (def.generator != nullptr) return def.generator(params);
  GateMatrix m(def.matrix_real.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = Complex(def.matrix_real[i], def.matrix_imag[i]);
  }
  return m;
}

std::string gate_record_json(const GateDef &def) {
  nlohmann::ordered_json j;
  j["matrix_real"] = def.matrix_real;
  j["matrix_imag"] = def.matrix_imag;
  j["matrix_order"] = def.matrix_order;
  j["is_hermitian"] = def.is_hermitian;
  j["is_unitary"] = def.is_unitary;
  j["is_mutable"] = def.is_mutable;
  j["qubit_list"] = def.qubit_list;
  j["parametric_list"] = def.parametric_list;
  j["control_qubit_list"] = def.control_qubit_list;
  j["local_basis_list"] = def.local_basis_list;
  j["identifier"] = static_cast<int>(def.identifier);
  return j.dump();
}

bool is_two_qubit(GateId id) { return gate_def(id).num_qubits() == 2; }

}  // namespace qhc::ir
