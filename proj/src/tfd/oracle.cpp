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

#include "qhc/tfd/oracle.hpp"

#include <cmath>

#include "qhc/error.hpp"
#include "qhc/tfd/reference.hpp"

namespace qhc::tfd {

namespace {

constexpr double kDensityTol = 1e-8;

void check_size(std::uint32_t L) {
  if (L < 1 || L > kOracleMaxL) {
    throw Error(ErrorCode::InvalidConfig,
                "oracle supports 1 <= L <= " + std::to_string(kOracleMaxL) + ", got " +
                    std::to_string(L));
  }
}

void check_density(const Eigen::MatrixXcd &rho, const char *which) {
  auto fail = [&](const std::string &why) {
    throw Error(ErrorCode::NotDensityMatrix, std::string(which) + ": " + why);
  };
  if (rho.rows() == 0 || rho.rows() != rho.cols()) fail("not a square matrix");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kDensityTol) fail("not Hermitian");
  if (std::abs(rho.trace() - std::complex<double>(1.0)) > kDensityTol) fail("trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kDensityTol) fail("not positive semidefinite");
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd &rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Eigen::MatrixXd tfim_hamiltonian(std::uint32_t L, double g) {
  check_size(L);
  if (g != 1.0) {
    throw Error(ErrorCode::InvalidConfig, "only the critical field g = 1 is supported");
  }
  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  auto z = [&](Eigen::Index b, std::uint32_t q) { return (b >> (L - 1 - q)) & 1 ? -1.0 : 1.0; };
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (std::uint32_t i = 0; i < L; ++i) {
      H(b, b) += z(b, i) * z(b, (i + 1) % L);
      H(b ^ (Eigen::Index{1} << (L - 1 - i)), b) += g;
    }
  }
  return H;
}

Eigen::MatrixXcd thermal_state(double beta, std::uint32_t L) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::InvalidConfig, "beta must be positive and finite");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tfim_hamiltonian(L));
  const Eigen::VectorXd &e = es.eigenvalues();
  // Shift by the ground energy so large beta does not underflow.
  Eigen::VectorXd w = (-beta * (e.array() - e.minCoeff())).exp();
  w /= w.sum();
  const Eigen::MatrixXd rho = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
  return rho.cast<std::complex<double>>();
}

Eigen::MatrixXcd reduced_density(std::span<const std::complex<double>> state,
                                 std::uint32_t L) {
  check_size(L);
  const Eigen::Index dim = Eigen::Index{1} << L;
  if (state.size() != static_cast<std::size_t>(dim * dim)) {
    throw Error(ErrorCode::LengthMismatch,
                "state needs " + std::to_string(dim * dim) + " amplitudes, got " +
                    std::to_string(state.size()));
  }
  // Row a, column b holds amplitude index a * 2^L + b.
  using RowMajor = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> psi(state.data(), dim, dim);
  return psi * psi.adjoint();
}

double fidelity_unclamped(const Eigen::MatrixXcd &rho1, const Eigen::MatrixXcd &rho2) {
  check_density(rho1, "first argument");
  check_density(rho2, "second argument");
  if (rho1.rows() != rho2.rows()) {
    throw Error(ErrorCode::NotDensityMatrix, "density matrices differ in dimension");
  }
  const Eigen::MatrixXcd s = psd_sqrt(rho1);
  Eigen::MatrixXcd m = s * rho2 * s;
  m = 0.5 * (m + m.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  const double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return tr * tr;
}

double fidelity(const Eigen::MatrixXcd &rho1, const Eigen::MatrixXcd &rho2) {
  return std::clamp(fidelity_unclamped(rho1, rho2), 0.0, 1.0);
}

double ansatz_fidelity(double beta, std::uint32_t L, const AngleSet &angles) {
  const auto state = reference_state(L, angles);
  return fidelity(thermal_state(beta, L), reduced_density(state, L));
}

}  // namespace qhc::tfd
