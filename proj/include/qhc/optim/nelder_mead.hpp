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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qhc::optim {

struct OptimConfig {
  double initial_step = 1.5;
  double tolerance = 1e-5;
  std::size_t max_evaluations = 10000;
  /// Per-dimension bounds. A single entry applies to every dimension.
  std::vector<double> lower = {-7.0};
  std::vector<double> upper = {7.0};
};

struct OptimResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Bounded Nelder-Mead. Every trial point is clamped into the box before the
/// objective sees it. After convergence the simplex is rebuilt around the
/// best point and the search repeats until a restart brings no improvement.
/// Throws InvalidConfig for inconsistent settings.
OptimResult minimize(const Objective &f, std::span<const double> x0,
                     const OptimConfig &config = {});

}  // namespace qhc::optim
