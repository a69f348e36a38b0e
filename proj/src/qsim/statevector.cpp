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

#include "qhc/qsim/statevector.hpp"

#include <cmath>

#include "qhc/error.hpp"

namespace qhc::qsim {

namespace {
// Probabilities this close to 0 or 1 are treated as definite outcomes.
constexpr double kDefinite = 1e-14;
}  // namespace

double uniform(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

StateVector::StateVector(std::uint32_t num_qubits) : n_(num_qubits) {
  if (n_ < 1 || n_ > kMaxQubits) {
    throw Error(ErrorCode::TooManyQubits,
                "state vector supports 1 to " + std::to_string(kMaxQubits) +
                    " qubits, got " + std::to_string(n_));
  }
  amps_.assign(std::size_t{1} << n_, Complex{});
  amps_[0] = 1.0;
}

void StateVector::set_amplitudes(std::vector<Complex> amps) {
  if (amps.size() != amps_.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(amps_.size()) + " amplitudes, got " +
                    std::to_string(amps.size()));
  }
  amps_ = std::move(amps);
}

void StateVector::reset() {
  std::fill(amps_.begin(), amps_.end(), Complex{});
  amps_[0] = 1.0;
}

std::size_t StateVector::bit_of(std::uint32_t qubit) const {
  return std::size_t{1} << (n_ - 1 - qubit);
}

void StateVector::check_qubit(std::uint32_t qubit) const {
  if (qubit >= n_) {
    throw Error(ErrorCode::BadOperands, "qubit " + std::to_string(qubit) +
                                            " out of range for " +
                                            std::to_string(n_) + " qubits");
  }
}

void StateVector::apply_unitary(std::span<const Complex> matrix,
                                std::span<const std::uint32_t> qubits) {
  const std::size_t k = qubits.size();
  if (k == 0 || k > 3) throw Error(ErrorCode::BadOperands, "gates act on 1 to 3 qubits");
  const std::size_t d = std::size_t{1} << k;
  if (matrix.size() != d * d) {
    throw Error(ErrorCode::BadOperands, "matrix size does not match operand count");
  }
  std::size_t mask = 0;
  for (std::uint32_t q : qubits) {
    check_qubit(q);
    if (mask & bit_of(q)) throw Error(ErrorCode::BadOperands, "repeated qubit operand");
    mask |= bit_of(q);
  }
  // offset[s]: basis offset for sub-index s, operand 0 as its top bit.
  std::size_t offset[8] = {};
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s & (std::size_t{1} << (k - 1 - j))) offset[s] |= bit_of(qubits[j]);
    }
  }
  Complex in[8], out[8];
  for (std::size_t base = 0; base < amps_.size(); ++base) {
    if (base & mask) continue;
    for (std::size_t s = 0; s < d; ++s) in[s] = amps_[base | offset[s]];
    for (std::size_t r = 0; r < d; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < d; ++c) acc += matrix[r * d + c] * in[c];
      out[r] = acc;
    }
    for (std::size_t s = 0; s < d; ++s) amps_[base | offset[s]] = out[s];
  }
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

double StateVector::probability_one(std::uint32_t qubit) const {
  check_qubit(qubit);
  const std::size_t bit = bit_of(qubit);
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) p += std::norm(amps_[i]);
  }
  return p;
}

void StateVector::collapse(std::uint32_t qubit, int bit) {
  check_qubit(qubit);
  const std::size_t b = bit_of(qubit);
  double kept = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (((i & b) != 0) != (bit != 0)) {
      amps_[i] = 0.0;
    } else {
      kept += std::norm(amps_[i]);
    }
  }
  if (kept <= 0.0) {
    throw Error(ErrorCode::BadOperands, "collapse onto an outcome of probability 0");
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (Complex &a : amps_) a *= scale;
}

int StateVector::measure_z(std::uint32_t qubit, Rng &rng) {
  const double p1 = probability_one(qubit);
  const int bit = uniform(rng) < p1 ? 1 : 0;
  collapse(qubit, bit);
  return bit;
}

void StateVector::prepare_zero(std::uint32_t qubit, Rng &rng) {
  const double p1 = probability_one(qubit);
  int bit = 0;
  if (p1 >= 1.0 - kDefinite) {
    bit = 1;
  } else if (p1 > kDefinite) {
    bit = uniform(rng) < p1 ? 1 : 0;
  }
  collapse(qubit, bit);
  if (bit == 1) {
    const std::size_t b = bit_of(qubit);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (i & b) std::swap(amps_[i], amps_[i ^ b]);
    }
  }
}

}  // namespace qhc::qsim
