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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhc/optim/nelder_mead.hpp"
#include "qhc/qrt/session.hpp"
#include "qhc/tfd/ansatz.hpp"
#include "qhc/toolchain.hpp"

namespace qhc::tfd {

struct TfdConfig {
  std::uint32_t L = 2;
  double g = 1.0;
  int beta_from = -30;
  int beta_to = 30;
  optim::OptimConfig optim;
  std::uint64_t seed = 0;
  bool with_oracle = false;
  /// Start each temperature from the previous optimum (the default) or from
  /// zero.
  bool warm_start = true;
};

/// beta = 10^(idx/10).
double beta_from_index(int beta_idx);

/// Produces the Z-basis and X-basis probability registers for given angles.
class RegisterSource {
 public:
  virtual ~RegisterSource() = default;
  virtual void registers(const AngleSet &angles, std::vector<double> &P_Z,
                         std::vector<double> &P_X) = 0;
};

/// Writes the angles into P[0..3] of a loaded session and dispatches tfd_Z
/// then tfd_X. The binary is compiled once, up front.
class RuntimeSource final : public RegisterSource {
 public:
  explicit RuntimeSource(qrt::Session &session) : session_(session) {}
  void registers(const AngleSet &angles, std::vector<double> &P_Z,
                 std::vector<double> &P_X) override;

 private:
  qrt::Session &session_;
};

/// Dense linear algebra, no compiler or runtime.
class ReferenceSource final : public RegisterSource {
 public:
  explicit ReferenceSource(std::uint32_t L) : L_(L) {}
  void registers(const AngleSet &angles, std::vector<double> &P_Z,
                 std::vector<double> &P_X) override;

 private:
  std::uint32_t L_;
};

/// Recompiles the program with the angles folded in as immediates for every
/// evaluation and runs it in a fresh session. The baseline for the
/// compile-once comparison.
class RecompilingSource final : public RegisterSource {
 public:
  RecompilingSource(std::uint32_t L, Toolchain &toolchain, std::uint64_t seed)
      : L_(L), toolchain_(toolchain), seed_(seed) {}
  void registers(const AngleSet &angles, std::vector<double> &P_Z,
                 std::vector<double> &P_X) override;

 private:
  std::uint32_t L_;
  Toolchain &toolchain_;
  std::uint64_t seed_;
};

/// Objective for one temperature.
double evaluate_cost(RegisterSource &source, double beta, std::uint32_t L,
                     const AngleSet &angles);

struct SweepRow {
  int beta_idx = 0;
  double beta = 0.0;
  AngleSet angles;
  double cost = 0.0;
  std::optional<double> fidelity;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Minimises the cost at one temperature from the given start point.
SweepRow optimize_at(RegisterSource &source, std::uint32_t L, int beta_idx,
                     const AngleSet &start, const optim::OptimConfig &optim,
                     bool with_oracle);

/// Temperatures from beta_from to beta_to inclusive, ascending. `on_row`, if
/// set, is called after each temperature.
std::vector<SweepRow> run_sweep(const TfdConfig &cfg, RegisterSource &source,
                                const std::function<void(const SweepRow &)> &on_row = {});

/// Header plus one line per row, %.12g numbers. The fidelity column is
/// present when `with_fidelity` is set.
std::string sweep_csv(const std::vector<SweepRow> &rows, bool with_fidelity);

}  // namespace qhc::tfd
