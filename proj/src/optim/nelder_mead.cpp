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

#include "qhc/optim/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qhc/error.hpp"

namespace qhc::optim {

namespace {

using Point = std::vector<double>;

constexpr double kRestartGain = 1e-12;

class Search {
 public:
  Search(const Objective &f, const OptimConfig &cfg, std::size_t n)
      : f_(f), cfg_(cfg), n_(n), lo_(n), hi_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      lo_[i] = cfg.lower.size() == 1 ? cfg.lower[0] : cfg.lower[i];
      hi_[i] = cfg.upper.size() == 1 ? cfg.upper[0] : cfg.upper[i];
    }
  }

  Point clamp(Point x) const {
    for (std::size_t i = 0; i < n_; ++i) x[i] = std::clamp(x[i], lo_[i], hi_[i]);
    return x;
  }

  double eval(const Point &x) {
    ++evals_;
    const double v = f_(x);
    if (v < best_value_) {
      best_value_ = v;
      best_ = x;
    }
    return v;
  }

  bool exhausted() const { return evals_ >= cfg_.max_evaluations; }

  // One Nelder-Mead descent from x0. Returns true on convergence.
  bool run(const Point &x0) {
    std::vector<Point> s{x0};
    for (std::size_t i = 0; i < n_; ++i) {
      Point y = x0;
      y[i] = y[i] + cfg_.initial_step <= hi_[i] ? y[i] + cfg_.initial_step
                                                 : y[i] - cfg_.initial_step;
      s.push_back(clamp(y));
    }
    std::vector<double> fv;
    for (const Point &p : s) {
      if (exhausted()) return false;
      fv.push_back(eval(p));
    }
    std::vector<std::size_t> order(n_ + 1);
    while (!exhausted()) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
      std::vector<Point> s2;
      std::vector<double> f2;
      for (std::size_t i : order) {
        s2.push_back(std::move(s[i]));
        f2.push_back(fv[i]);
      }
      s = std::move(s2);
      fv = std::move(f2);

      double diameter = 0.0;
      for (std::size_t i = 1; i <= n_; ++i) {
        for (std::size_t d = 0; d < n_; ++d) {
          diameter = std::max(diameter, std::abs(s[i][d] - s[0][d]));
        }
      }
      if (diameter < cfg_.tolerance) return true;

      Point c(n_, 0.0);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t d = 0; d < n_; ++d) c[d] += s[i][d] / static_cast<double>(n_);
      }
      auto along = [&](const Point &from, const Point &to, double t) {
        Point p(n_);
        for (std::size_t d = 0; d < n_; ++d) p[d] = from[d] + t * (to[d] - from[d]);
        return clamp(p);
      };
      const Point &worst = s[n_];
      const Point xr = along(c, worst, -1.0);
      const double fr = eval(xr);
      if (fr < fv[0]) {
        if (exhausted()) break;
        const Point xe = along(c, worst, -2.0);
        const double fe = eval(xe);
        if (fe < fr) {
          s[n_] = xe;
          fv[n_] = fe;
        } else {
          s[n_] = xr;
          fv[n_] = fr;
        }
        continue;
      }
      if (fr < fv[n_ - 1]) {
        s[n_] = xr;
        fv[n_] = fr;
        continue;
      }
      if (exhausted()) break;
      if (fr < fv[n_]) {
        const Point xc = along(c, xr, 0.5);
        const double fc = eval(xc);
        if (fc <= fr) {
          s[n_] = xc;
          fv[n_] = fc;
          continue;
        }
      } else {
        const Point xc = along(c, worst, 0.5);
        const double fc = eval(xc);
        if (fc < fv[n_]) {
          s[n_] = xc;
          fv[n_] = fc;
          continue;
        }
      }
      for (std::size_t i = 1; i <= n_ && !exhausted(); ++i) {
        s[i] = along(s[0], s[i], 0.5);
        fv[i] = eval(s[i]);
      }
    }
    return false;
  }

  OptimResult finish(bool converged) const {
    return OptimResult{best_, best_value_, evals_, converged};
  }

  const Point &best() const { return best_; }
  double best_value() const { return best_value_; }

 private:
  const Objective &f_;
  const OptimConfig &cfg_;
  std::size_t n_;
  Point lo_, hi_;
  Point best_;
  double best_value_ = std::numeric_limits<double>::infinity();
  std::size_t evals_ = 0;
};

void check(const OptimConfig &cfg, std::size_t n) {
  auto fail = [](const std::string &m) { throw Error(ErrorCode::InvalidConfig, m); };
  if (n == 0) fail("objective must have at least one dimension");
  if (!(cfg.tolerance > 0.0)) fail("tolerance must be positive");
  if (!(cfg.initial_step > 0.0)) fail("initial step must be positive");
  if (cfg.max_evaluations < n + 2) fail("evaluation budget below dimension + 2");
  for (const auto *b : {&cfg.lower, &cfg.upper}) {
    if (b->size() != 1 && b->size() != n) fail("bounds must have 1 or n entries");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = cfg.lower.size() == 1 ? cfg.lower[0] : cfg.lower[i];
    const double hi = cfg.upper.size() == 1 ? cfg.upper[0] : cfg.upper[i];
    if (!(lo < hi)) fail("lower bound must be below upper bound");
  }
}

}  // namespace

OptimResult minimize(const Objective &f, std::span<const double> x0,
                     const OptimConfig &config) {
  const std::size_t n = x0.size();
  check(config, n);
  Search search(f, config, n);
  bool converged = search.run(search.clamp(Point(x0.begin(), x0.end())));
  while (converged) {
    const double before = search.best_value();
    converged = search.run(search.best());
    if (!(search.best_value() < before - kRestartGain)) break;
  }
  return search.finish(converged);
}

}  // namespace qhc::optim
