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

#include "qhc/qrt/device.hpp"

#include <array>

#include "qhc/error.hpp"
#include "qhc/ir/gate.hpp"
#include "qhc/qsim/statevector.hpp"

namespace qhc::qrt {

namespace {

class StateVectorDevice final : public Device {
 public:
  StateVectorDevice() {
    for (const ir::GateDef &def : ir::gatedb()) {
      if (def.is_unitary && !def.is_parametric()) {
        fixed_[static_cast<std::size_t>(def.identifier)] = ir::gate_matrix(def);
      }
    }
  }

  void init(std::uint32_t num_qubits, std::uint64_t seed) override {
    sv_ = std::make_unique<qsim::StateVector>(num_qubits);
    rng_.seed(seed);
  }

  ExecResult execute(std::span<const codegen::MachineInstr> program) override {
    if (!sv_) throw Error(ErrorCode::BackendUnavailable, "device not initialised");
    ExecResult result;
    std::array<std::uint32_t, 3> qubits{};
    for (const codegen::MachineInstr &mi : program) {
      const auto gate = codegen::gate_for_opcode(mi.opcode);
      if (!gate) {
        throw Error(ErrorCode::BadOpcode, "unknown opcode " + std::to_string(mi.opcode));
      }
      const ir::GateDef &def = ir::gate_def(*gate);
      const std::size_t k = def.num_qubits();
      for (std::size_t i = 0; i < k; ++i) qubits[i] = mi.qubits[i];
      switch (*gate) {
        case ir::GateId::PrepZ:
          sv_->prepare_zero(qubits[0], rng_);
          break;
        case ir::GateId::MeasZ:
          if (!result.probabilities) result.probabilities = sv_->probabilities();
          result.cbits.emplace_back(mi.cbit, sv_->measure_z(qubits[0], rng_));
          break;
        default:
          if (def.is_parametric()) {
            if (mi.mode != codegen::ParamMode::Immediate) {
              throw Error(ErrorCode::MalformedInstruction,
                          def.name + " reached the device without an immediate angle");
            }
            const double theta = mi.immediate();
            const auto m = ir::gate_matrix(def, std::span<const double>(&theta, 1));
            sv_->apply_unitary(m, std::span<const std::uint32_t>(qubits.data(), k));
          } else {
            sv_->apply_unitary(fixed_[static_cast<std::size_t>(*gate)],
                               std::span<const std::uint32_t>(qubits.data(), k));
          }
      }
    }
    return result;
  }

  void reset() override {
    if (sv_) sv_->reset();
  }

  std::uint32_t num_qubits() const override { return sv_ ? sv_->num_qubits() : 0; }

  std::vector<double> probabilities() const override {
    return sv_ ? sv_->probabilities() : std::vector<double>{};
  }

 private:
  std::unique_ptr<qsim::StateVector> sv_;
  qsim::Rng rng_;
  std::array<ir::GateMatrix, ir::kGateCount> fixed_;
};

}  // namespace

std::unique_ptr<Device> make_device(const std::string &backend) {
  if (backend == "statevector") return std::make_unique<StateVectorDevice>();
  throw Error(ErrorCode::BackendUnavailable, "no backend named '" + backend + "'");
}

}  // namespace qhc::qrt
