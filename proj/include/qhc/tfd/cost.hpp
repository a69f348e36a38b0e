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
#include <span>
#include <vector>

namespace qhc::tfd {

/// Expectation of Z_q1 Z_q2 ... from a probability register over n qubits
/// (qubit 0 = most significant bit): sum_b P[b] * (-1)^popcount(b & mask).
/// Throws LengthMismatch if |P| is not a power of two and BadMask for an
/// empty, repeated, or out-of-range qubit list.
double z_string_expectation(std::span<const double> P,
                            std::span<const std::uint32_t> qubits);

struct ExpectationTerms {
  double energy_X = 0.0;   // <X_A> + <X_B>, read from the X-basis register
  double energy_ZZ = 0.0;  // <ZZ_A> + <ZZ_B> over each ring
  double entropy = 0.0;    // <XX_AB> + <ZZ_AB>
};

/// Throws LengthMismatch unless both registers have 2^(2L) entries.
ExpectationTerms cost_terms(std::span<const double> P_Z, std::span<const double> P_X,
                            std::uint32_t L);

/// energy_X + energy_ZZ - entropy / beta. Throws InvalidConfig for beta <= 0.
double total_cost(double beta, std::span<const double> P_Z, std::span<const double> P_X,
                  std::uint32_t L);

/// Hand-derived coefficient tables for L = 3, kept verbatim as an
/// independent check on the general evaluator.
struct N6Terms {
  double zz_a_plus_zz_b = 0.0;
  double zz_ab = 0.0;
  double z_a_plus_z_b = 0.0;
};

/// Throws LengthMismatch unless |P| == 64.
N6Terms n6_reference_terms(std::span<const double> P);

}  // namespace qhc::tfd
