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

#include "qhc/tfd/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "qhc/error.hpp"
#include "qhc/tfd/cost.hpp"
#include "qhc/tfd/oracle.hpp"
#include "qhc/tfd/reference.hpp"

namespace qhc::tfd {

double beta_from_index(int beta_idx) { return std::pow(10.0, beta_idx / 10.0); }

void RuntimeSource::registers(const AngleSet &angles, std::vector<double> &P_Z,
                              std::vector<double> &P_X) {
  const auto v = angles.to_array();
  for (std::uint32_t k = 0; k < kNumAngles; ++k) session_.set_param(kParamArray, k, v[k]);
  session_.call_kernel(kZKernel);
  P_Z = session_.probability_register();
  session_.call_kernel(kXKernel);
  P_X = session_.probability_register();
}

void ReferenceSource::registers(const AngleSet &angles, std::vector<double> &P_Z,
                                std::vector<double> &P_X) {
  ReferenceRegisters r = reference_pipeline(L_, angles);
  P_Z = std::move(r.P_Z);
  P_X = std::move(r.P_X);
}

void RecompilingSource::registers(const AngleSet &angles, std::vector<double> &P_Z,
                                  std::vector<double> &P_X) {
  CompileResult compiled = toolchain_.compile(generate_source(L_, angles));
  qrt::DeviceConfig cfg;
  cfg.seed = seed_;
  qrt::Session session(std::move(compiled.image), cfg);
  session.call_kernel(kZKernel);
  P_Z = session.probability_register();
  session.call_kernel(kXKernel);
  P_X = session.probability_register();
}

double evaluate_cost(RegisterSource &source, double beta, std::uint32_t L,
                     const AngleSet &angles) {
  std::vector<double> pz, px;
  source.registers(angles, pz, px);
  return total_cost(beta, pz, px, L);
}

SweepRow optimize_at(RegisterSource &source, std::uint32_t L, int beta_idx,
                     const AngleSet &start, const optim::OptimConfig &optim,
                     bool with_oracle) {
  SweepRow row;
  row.beta_idx = beta_idx;
  row.beta = beta_from_index(beta_idx);
  std::vector<double> pz, px;
  const auto objective = [&](std::span<const double> m) {
    source.registers(AngleSet::from_array(m.data()), pz, px);
    return total_cost(row.beta, pz, px, L);
  };
  const auto x0 = start.to_array();
  const optim::OptimResult best = optim::minimize(objective, x0, optim);
  row.angles = AngleSet::from_array(best.best_point.data());
  row.cost = best.best_value;
  row.evaluations = best.evaluations;
  row.converged = best.converged;
  if (with_oracle) row.fidelity = ansatz_fidelity(row.beta, L, row.angles);
  return row;
}

std::vector<SweepRow> run_sweep(const TfdConfig &cfg, RegisterSource &source,
                                const std::function<void(const SweepRow &)> &on_row) {
  if (cfg.L < 2) throw Error(ErrorCode::InvalidConfig, "L must be at least 2");
  if (cfg.g != 1.0) throw Error(ErrorCode::InvalidConfig, "only g = 1 is supported");
  if (cfg.beta_from > cfg.beta_to) {
    throw Error(ErrorCode::InvalidConfig, "beta range is empty");
  }
  if (cfg.with_oracle && cfg.L > kOracleMaxL) {
    throw Error(ErrorCode::InvalidConfig,
                "the fidelity oracle supports L <= " + std::to_string(kOracleMaxL));
  }
  std::vector<SweepRow> rows;
  AngleSet start;
  for (int idx = cfg.beta_from; idx <= cfg.beta_to; ++idx) {
    SweepRow row = optimize_at(source, cfg.L, idx, start, cfg.optim, cfg.with_oracle);
    if (cfg.warm_start) start = row.angles;
    if (on_row) on_row(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows, bool with_fidelity) {
  std::string out = "beta_idx,beta,gamma1,gamma2,alpha1,alpha2,cost,";
  out += with_fidelity ? "fidelity,evals\n" : "evals\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
    out += ',';
  };
  for (const SweepRow &r : rows) {
    out += std::to_string(r.beta_idx) + ',';
    num(r.beta);
    for (double a : r.angles.to_array()) num(a);
    num(r.cost);
    if (with_fidelity) num(r.fidelity.value_or(std::nan("")));
    out += std::to_string(r.evaluations) + '\n';
  }
  return out;
}

}  // namespace qhc::tfd
