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
#include <vector>

#include "qhc/tfd/ansatz.hpp"

namespace qhc::tfd {

struct ReferenceRegisters {
  std::vector<double> P_Z;
  std::vector<double> P_X;
};

/// The ansatz state before measurement, computed with dense linear algebra
/// straight from the circuit description. Does not touch the compiler, the
/// binary format, or the runtime. Throws InvalidConfig unless
/// 2 <= L <= kOracleMaxL.
std::vector<std::complex<double>> reference_state(std::uint32_t L, const AngleSet &angles,
                                                  bool x_basis = false);

/// Probability registers of the Z-basis and X-basis experiments.
ReferenceRegisters reference_pipeline(std::uint32_t L, const AngleSet &angles);

}  // namespace qhc::tfd
