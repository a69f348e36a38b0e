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
#include <random>
#include <span>
#include <vector>

namespace qhc::qsim {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr std::uint32_t kMaxQubits = 24;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform(Rng &rng);

/// Dense state vector. Qubit 0 is the most significant bit of the basis
/// index, so |q0 q1 ... q(n-1)> has index q0*2^(n-1) + ... + q(n-1).
class StateVector {
 public:
  /// Starts in |0...0>. Throws TooManyQubits outside [1, kMaxQubits].
  explicit StateVector(std::uint32_t num_qubits);

  std::uint32_t num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  /// Replaces the amplitudes. Throws LengthMismatch on a size mismatch.
  void set_amplitudes(std::vector<Complex> amps);

  void reset();

  /// Applies a row-major 2^k x 2^k matrix to the listed qubits, operand 0
  /// being the most significant bit of the matrix index. Throws BadOperands
  /// for repeated or out-of-range qubits or a matrix of the wrong size.
  void apply_unitary(std::span<const Complex> matrix,
                     std::span<const std::uint32_t> qubits);

  std::vector<double> probabilities() const;
  double probability_one(std::uint32_t qubit) const;

  /// Samples a Z measurement, collapses, and returns the outcome.
  int measure_z(std::uint32_t qubit, Rng &rng);
  /// Projects onto the given outcome and renormalises.
  void collapse(std::uint32_t qubit, int bit);
  /// Resets one qubit to |0>. Draws from the RNG only when the qubit is in
  /// superposition.
  void prepare_zero(std::uint32_t qubit, Rng &rng);

 private:
  std::size_t bit_of(std::uint32_t qubit) const;
  void check_qubit(std::uint32_t qubit) const;

  std::uint32_t n_;
  std::vector<Complex> amps_;
};

}  // namespace qhc::qsim
