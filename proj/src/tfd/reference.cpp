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

#include "qhc/tfd/reference.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "qhc/error.hpp"
#include "qhc/tfd/oracle.hpp"

namespace qhc::tfd {

namespace {

using C = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

Mat2 rx(double t) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  Mat2 m;
  m << c, C(0, -s), C(0, -s), c;
  return m;
}

Mat2 ry(double t) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  Mat2 m;
  m << c, -s, s, c;
  return m;
}

Mat2 rz(double t) {
  Mat2 m;
  m << std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2);
  return m;
}

Mat2 hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Mat2 m;
  m << r, r, r, -r;
  return m;
}

// Dense 2L-qubit register, qubit 0 most significant.
class Register {
 public:
  explicit Register(std::uint32_t n) : n_(n), psi_(Eigen::VectorXcd::Zero(Eigen::Index{1} << n)) {
    psi_(0) = 1.0;
  }

  // Views the amplitudes as (2^q) blocks of an (inner x 2) matrix whose
  // columns are the q=0 and q=1 halves, and right-multiplies by U^T.
  void apply(const Mat2 &u, std::uint32_t q) {
    const Eigen::Index inner = Eigen::Index{1} << (n_ - 1 - q);
    const Eigen::Index outer = Eigen::Index{1} << q;
    const Mat2 ut = u.transpose();
    for (Eigen::Index o = 0; o < outer; ++o) {
      Eigen::Map<Eigen::MatrixXcd> block(psi_.data() + o * 2 * inner, inner, 2);
      block = (block * ut).eval();
    }
  }

  void cnot(std::uint32_t control, std::uint32_t target) {
    const Eigen::Index cb = Eigen::Index{1} << (n_ - 1 - control);
    const Eigen::Index tb = Eigen::Index{1} << (n_ - 1 - target);
    for (Eigen::Index i = 0; i < psi_.size(); ++i) {
      if ((i & cb) && !(i & tb)) std::swap(psi_(i), psi_(i | tb));
    }
  }

  std::vector<C> amplitudes() const { return {psi_.data(), psi_.data() + psi_.size()}; }

 private:
  std::uint32_t n_;
  Eigen::VectorXcd psi_;
};

std::vector<double> probabilities(const std::vector<C> &amps) {
  std::vector<double> p(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) p[i] = std::norm(amps[i]);
  return p;
}

}  // namespace

std::vector<C> reference_state(std::uint32_t L, const AngleSet &a, bool x_basis) {
  if (L < 2 || L > kOracleMaxL) {
    throw Error(ErrorCode::InvalidConfig,
                "reference supports 2 <= L <= " + std::to_string(kOracleMaxL));
  }
  const std::uint32_t n = 2 * L;
  const double half_pi = std::numbers::pi / 2;
  Register r(n);

  // Bell pairs (q[i], q[i+L]).
  for (std::uint32_t i = 0; i < L; ++i) r.apply(ry(half_pi), i);
  for (std::uint32_t i = 0; i < L; ++i) r.cnot(i, i + L);

  for (std::uint32_t i = 0; i < n; ++i) r.apply(rx(a.gamma1), i);

  // ZZ on ring edges of each subsystem: adjacent pairs, then the closing pair.
  for (std::uint32_t e = 0; e + 1 < L; ++e) {
    for (std::uint32_t s = 0; s < 2; ++s) r.cnot(e + L * s + 1, e + L * s);
    for (std::uint32_t s = 0; s < 2; ++s) r.apply(rz(a.gamma2), e + L * s);
    for (std::uint32_t s = 0; s < 2; ++s) r.cnot(e + L * s + 1, e + L * s);
  }
  for (std::uint32_t s = 0; s < 2; ++s) r.cnot(L * s, L * s + L - 1);
  for (std::uint32_t s = 0; s < 2; ++s) r.apply(rz(a.gamma2), L * s + L - 1);
  for (std::uint32_t s = 0; s < 2; ++s) r.cnot(L * s, L * s + L - 1);

  // XX between A and B.
  for (std::uint32_t i = 0; i < L; ++i) {
    r.apply(ry(-half_pi), i + L);
    r.apply(ry(-half_pi), i);
  }
  for (std::uint32_t i = 0; i < L; ++i) r.cnot(i + L, i);
  for (std::uint32_t i = 0; i < L; ++i) r.apply(rz(a.alpha1), i);
  for (std::uint32_t i = 0; i < L; ++i) r.cnot(i + L, i);
  for (std::uint32_t i = 0; i < L; ++i) {
    r.apply(ry(half_pi), i + L);
    r.apply(ry(half_pi), i);
  }

  // ZZ between A and B.
  for (std::uint32_t i = 0; i < L; ++i) r.cnot(i, i + L);
  for (std::uint32_t i = 0; i < L; ++i) r.apply(rz(a.alpha2), i + L);
  for (std::uint32_t i = 0; i < L; ++i) r.cnot(i, i + L);

  if (x_basis) {
    for (std::uint32_t i = 0; i < n; ++i) r.apply(hadamard(), i);
  }
  return r.amplitudes();
}

ReferenceRegisters reference_pipeline(std::uint32_t L, const AngleSet &angles) {
  return {probabilities(reference_state(L, angles, false)),
          probabilities(reference_state(L, angles, true))};
}

}  // namespace qhc::tfd
