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

#include "qhc/tfd/cost.hpp"

#include <bit>

#include "qhc/error.hpp"

namespace qhc::tfd {

namespace {

std::uint32_t qubit_count(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw Error(ErrorCode::LengthMismatch,
                "register length " + std::to_string(size) + " is not a power of two");
  }
  return static_cast<std::uint32_t>(std::countr_zero(size));
}

// Mask-based core; qubit indices already validated.
double parity_sum(std::span<const double> P, std::size_t mask) {
  double sum = 0.0;
  for (std::size_t b = 0; b < P.size(); ++b) {
    sum += (std::popcount(b & mask) & 1) ? -P[b] : P[b];
  }
  return sum;
}

std::size_t bit(std::uint32_t n, std::uint32_t q) { return std::size_t{1} << (n - 1 - q); }

}  // namespace

double z_string_expectation(std::span<const double> P,
                            std::span<const std::uint32_t> qubits) {
  const std::uint32_t n = qubit_count(P.size());
  if (qubits.empty()) throw Error(ErrorCode::BadMask, "empty qubit mask");
  std::size_t mask = 0;
  for (std::uint32_t q : qubits) {
    if (q >= n) {
      throw Error(ErrorCode::BadMask, "qubit " + std::to_string(q) + " outside a " +
                                          std::to_string(n) + "-qubit register");
    }
    if (mask & bit(n, q)) throw Error(ErrorCode::BadMask, "repeated qubit in mask");
    mask |= bit(n, q);
  }
  return parity_sum(P, mask);
}

ExpectationTerms cost_terms(std::span<const double> P_Z, std::span<const double> P_X,
                            std::uint32_t L) {
  const std::uint32_t n = 2 * L;
  if (L == 0 || n >= 64 || P_Z.size() != (std::size_t{1} << n) ||
      P_X.size() != P_Z.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "registers must both have 2^" + std::to_string(n) + " entries");
  }
  ExpectationTerms t;
  for (std::uint32_t i = 0; i < n; ++i) t.energy_X += parity_sum(P_X, bit(n, i));
  // Ring edges (i, i+1 mod L) in each subsystem; for L = 2 the single edge
  // appears twice.
  for (std::uint32_t s = 0; s < 2; ++s) {
    for (std::uint32_t i = 0; i < L; ++i) {
      const std::uint32_t a = s * L + i, b = s * L + (i + 1) % L;
      t.energy_ZZ += parity_sum(P_Z, bit(n, a) | bit(n, b));
    }
  }
  for (std::uint32_t i = 0; i < L; ++i) {
    const std::size_t mask = bit(n, i) | bit(n, i + L);
    t.entropy += parity_sum(P_X, mask) + parity_sum(P_Z, mask);
  }
  return t;
}

double total_cost(double beta, std::span<const double> P_Z, std::span<const double> P_X,
                  std::uint32_t L) {
  if (!(beta > 0.0)) throw Error(ErrorCode::InvalidConfig, "beta must be positive");
  const ExpectationTerms t = cost_terms(P_Z, P_X, L);
  return t.energy_X + t.energy_ZZ - t.entropy / beta;
}

N6Terms n6_reference_terms(std::span<const double> P) {
  if (P.size() != 64) {
    throw Error(ErrorCode::LengthMismatch,
                "reference tables need 64 entries, got " + std::to_string(P.size()));
  }
  N6Terms t;
  {
    const double sum =
      3*P[0] + P[1] + P[2] + P[3] + P[4] + P[5] + P[6] + 3*P[7] + P[8] -
      P[9] - P[10] - P[11] - P[12] - P[13] - P[14] + P[15] + P[16] - P[17] -
      P[18] - P[19] - P[20] - P[21] - P[22] + P[23] + P[24] - P[25] - P[26]
      - P[27] - P[28] - P[29] - P[30] + P[31] + P[32] - P[33] - P[34] -
      P[35] - P[36] - P[37] - P[38] + P[39] + P[40] - P[41] - P[42] - P[43]
      - P[44] - P[45] - P[46] + P[47] + P[48] - P[49] - P[50] - P[51] -
      P[52] - P[53] - P[54] + P[55] + 3*P[56] + P[57] + P[58] + P[59] +
      P[60] + P[61] + P[62] + 3*P[63];
    t.zz_a_plus_zz_b = 2 * sum;
  }
  t.zz_ab =
      3*P[0] + P[1] + P[2] - P[3] + P[4] - P[5] - P[6] - 3*P[7] + P[8] +
      3*P[9] - P[10] + P[11] - P[12] + P[13] - 3*P[14] - P[15] + P[16] -
      P[17] + 3*P[18] + P[19] - P[20] - 3*P[21] + P[22] - P[23] - P[24] +
      P[25] + P[26] + 3*P[27] - 3*P[28] - P[29] - P[30] + P[31] + P[32] -
      P[33] - P[34] - 3*P[35] + 3*P[36] + P[37] + P[38] - P[39] - P[40] +
      P[41] - 3*P[42] - P[43] + P[44] + 3*P[45] - P[46] + P[47] - P[48] -
      3*P[49] + P[50] - P[51] + P[52] - P[53] + 3*P[54] + P[55] - 3*P[56] -
      P[57] - P[58] + P[59] - P[60] + P[61] + P[62] + 3*P[63];
  {
    const double sum =
      3*P[0] + 2*P[1] + 2*P[2] + P[3] + 2*P[4] + P[5] + P[6] + 2*P[8] + P[9]
      + P[10] + P[12] - P[15] + 2*P[16] + P[17] + P[18] + P[20] - P[23] +
      P[24] - P[27] - P[29] - P[30] - 2*P[31] + 2*P[32] + P[33] + P[34] +
      P[36] - P[39] + P[40] - P[43] - P[45] - P[46] - 2*P[47] + P[48] -
      P[51] - P[53] - P[54] - 2*P[55] - P[57] - P[58] - 2*P[59] - P[60] -
      2*P[61] - 2*P[62] - 3*P[63];
    t.z_a_plus_z_b = 2 * sum;
  }
  return t;
}

}  // namespace qhc::tfd
