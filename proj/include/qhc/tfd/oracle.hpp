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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qhc/tfd/ansatz.hpp"

namespace qhc::tfd {

/// Largest subsystem size the dense oracle accepts.
inline constexpr std::uint32_t kOracleMaxL = 8;

/// H = sum_i Z_i Z_{i+1 mod L} + g sum_i X_i on L qubits, qubit 0 as the most
/// significant bit. Summing the ring literally means L = 2 counts its one edge
/// twice. Only g = 1 is accepted; anything else throws InvalidConfig.
Eigen::MatrixXd tfim_hamiltonian(std::uint32_t L, double g = 1.0);

/// exp(-beta H) / Z by symmetric eigendecomposition.
Eigen::MatrixXcd thermal_state(double beta, std::uint32_t L);

/// Traces subsystem B (the last L qubits) out of a 2L-qubit pure state.
/// Throws LengthMismatch unless |state| == 4^L.
Eigen::MatrixXcd reduced_density(std::span<const std::complex<double>> state,
                                 std::uint32_t L);

/// [Tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2, clamped to [0, 1]. Throws
/// NotDensityMatrix if either input is not Hermitian, unit-trace, and positive
/// semidefinite within 1e-8, or if the dimensions differ.
double fidelity(const Eigen::MatrixXcd &rho1, const Eigen::MatrixXcd &rho2);

/// Same, without the final clamp; for checking numerical noise.
double fidelity_unclamped(const Eigen::MatrixXcd &rho1, const Eigen::MatrixXcd &rho2);

/// Fidelity between the thermal state at beta and subsystem A of the ansatz
/// state for the given angles.
double ansatz_fidelity(double beta, std::uint32_t L, const AngleSet &angles);

}  // namespace qhc::tfd
