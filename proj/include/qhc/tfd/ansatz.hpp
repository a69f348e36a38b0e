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

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace qhc::tfd {

inline constexpr std::size_t kNumAngles = 4;

/// The four variational angles of a single ansatz step, in the order they
/// occupy the shared array P.
struct AngleSet {
  double gamma1 = 0.0;  // single-qubit RX
  double gamma2 = 0.0;  // intra-system ZZ
  double alpha1 = 0.0;  // inter-system XX
  double alpha2 = 0.0;  // inter-system ZZ

  std::array<double, kNumAngles> to_array() const { return {gamma1, gamma2, alpha1, alpha2}; }
  static AngleSet from_array(const double *v) { return {v[0], v[1], v[2], v[3]}; }
  bool operator==(const AngleSet &) const = default;
};

inline constexpr const char *kParamArray = "P";
inline constexpr const char *kZKernel = "tfd_Z";
inline constexpr const char *kXKernel = "tfd_X";

/// .qk source for the TFD ansatz on 2L qubits: subsystem A is q[0..L),
/// subsystem B is q[L..2L). With `folded`, the angles are written in as
/// literals instead of P[0..3] references. Throws InvalidConfig unless
/// 2 <= L <= 12.
std::string generate_source(std::uint32_t L,
                            const std::optional<AngleSet> &folded = std::nullopt);

}  // namespace qhc::tfd
