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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qhc/error.hpp"
#include "qhc/optim/nelder_mead.hpp"

namespace qhc::optim {
namespace {

TEST(NelderMead, ConvexQuadratic) {
  const std::vector<double> x0{0.0};
  const auto r = minimize([](std::span<const double> x) { return (x[0] - 2) * (x[0] - 2); }, x0);
  EXPECT_NEAR(r.best_point[0], 2.0, 1e-4);
  EXPECT_TRUE(r.converged);
}

TEST(NelderMead, ActiveBound) {
  const std::vector<double> x0{0.0};
  const auto r = minimize([](std::span<const double> x) { return (x[0] - 10) * (x[0] - 10); }, x0);
  EXPECT_NEAR(r.best_point[0], 7.0, 1e-6);
}

TEST(NelderMead, Rosenbrock) {
  const std::vector<double> x0{-1.2, 1.0};
  const auto r = minimize(
      [](std::span<const double> x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
      },
      x0);
  EXPECT_NEAR(r.best_point[0], 1.0, 1e-3);
  EXPECT_NEAR(r.best_point[1], 1.0, 1e-3);
}

TEST(NelderMead, FeasibleMonotoneAndWithinBudget) {
  OptimConfig cfg;
  cfg.max_evaluations = 300;
  cfg.lower = {-1.0, -2.0, 0.0};
  cfg.upper = {1.0, 2.0, 0.5};
  std::size_t calls = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> running;
  const std::vector<double> x0{5.0, -5.0, 0.25};
  const auto r = minimize(
      [&](std::span<const double> x) {
        ++calls;
        for (std::size_t i = 0; i < 3; ++i) {
          EXPECT_GE(x[i], cfg.lower[i]);
          EXPECT_LE(x[i], cfg.upper[i]);
        }
        const double v = std::sin(3 * x[0]) + x[1] * x[1] * std::cos(x[2]) + x[2];
        best = std::min(best, v);
        running.push_back(best);
        return v;
      },
      x0, cfg);
  EXPECT_EQ(r.evaluations, calls);
  EXPECT_LE(calls, 300u);
  EXPECT_EQ(r.best_value, best);
  for (std::size_t i = 1; i < running.size(); ++i) EXPECT_LE(running[i], running[i - 1]);
}

TEST(NelderMead, BudgetExhaustionReportsNotConverged) {
  OptimConfig cfg;
  cfg.max_evaluations = 10;
  const std::vector<double> x0{-1.2, 1.0};
  const auto r = minimize(
      [](std::span<const double> x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
      },
      x0, cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.evaluations, 10u);
}

TEST(NelderMead, InvalidConfig) {
  const std::vector<double> x0{0.0, 0.0};
  auto f = [](std::span<const double>) { return 0.0; };
  OptimConfig bad;
  bad.lower = {1.0};
  bad.upper = {-1.0};
  EXPECT_THROW(minimize(f, x0, bad), Error);
  OptimConfig tiny;
  tiny.max_evaluations = 2;
  EXPECT_THROW(minimize(f, x0, tiny), Error);
  OptimConfig mismatch;
  mismatch.lower = {-1, -1, -1};
  EXPECT_THROW(minimize(f, x0, mismatch), Error);
  EXPECT_THROW(minimize(f, std::span<const double>{}, OptimConfig{}), Error);
}

}  // namespace
}  // namespace qhc::optim
