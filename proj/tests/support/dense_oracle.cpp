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

#include "dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qhc/ir/gate.hpp"

namespace qhc::testing {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

Mat from_rows(std::initializer_list<std::initializer_list<C>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Mat m(n, n);
  Eigen::Index r = 0;
  for (const auto &row : rows) {
    Eigen::Index c = 0;
    for (const C &v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

std::vector<ir::GateId> unitary_gates() {
  using G = ir::GateId;
  return {G::X,  G::Y,    G::Z,   G::H,     G::S,  G::Sdg, G::T, G::Tdg,
          G::CZ, G::CNOT, G::SWAP, G::CCNOT, G::RX, G::RY, G::RZ};
}

Mat textbook_gate(ir::GateId gate, double theta) {
  using G = ir::GateId;
  const double r = 1.0 / std::sqrt(2.0);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  switch (gate) {
    case G::X: return from_rows({{0, 1}, {1, 0}});
    case G::Y: return from_rows({{0, -kI}, {kI, 0}});
    case G::Z: return from_rows({{1, 0}, {0, -1}});
    case G::H: return from_rows({{r, r}, {r, -r}});
    case G::S: return from_rows({{1, 0}, {0, kI}});
    case G::Sdg: return from_rows({{1, 0}, {0, -kI}});
    case G::T: return from_rows({{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}});
    case G::Tdg: return from_rows({{1, 0}, {0, std::polar(1.0, -std::numbers::pi / 4)}});
    case G::RX: return from_rows({{c, -kI * s}, {-kI * s, c}});
    case G::RY: return from_rows({{c, -s}, {s, c}});
    case G::RZ: return from_rows({{std::polar(1.0, -theta / 2), 0}, {0, std::polar(1.0, theta / 2)}});
    case G::CZ: {
      Mat m = Mat::Identity(4, 4);
      m(3, 3) = -1;
      return m;
    }
    case G::CNOT: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      return m;
    }
    case G::SWAP: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      return m;
    }
    case G::CCNOT: {
      Mat m = Mat::Identity(8, 8);
      m(6, 6) = m(7, 7) = 0;
      m(6, 7) = m(7, 6) = 1;
      return m;
    }
    default:
      throw std::invalid_argument("no unitary for this gate");
  }
}

Mat embed_1q(const Mat &g, std::uint32_t qubit, std::uint32_t n) {
  Mat out = Mat::Identity(1, 1);
  for (std::uint32_t q = 0; q < n; ++q) {
    const Mat f = q == qubit ? g : Mat::Identity(2, 2);
    Mat next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(2 * i, 2 * j, 2, 2) = out(i, j) * f;
      }
    }
    out = std::move(next);
  }
  return out;
}

Mat embed(const Mat &g, std::span<const std::uint32_t> qubits, std::uint32_t n) {
  if (qubits.size() == 1) return embed_1q(g, qubits[0], n);
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t k = qubits.size();
  std::size_t mask = 0;
  for (std::uint32_t q : qubits) mask |= std::size_t{1} << (n - 1 - q);
  auto sub = [&](std::size_t full) {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < k; ++t) {
      idx = (idx << 1) | ((full >> (n - 1 - qubits[t])) & 1);
    }
    return static_cast<Eigen::Index>(idx);
  };
  Mat out = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if ((i & ~mask) != (j & ~mask)) continue;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g(sub(i), sub(j));
    }
  }
  return out;
}

Mat kernel_unitary(const ir::QKernel &kernel, std::uint32_t n, const Bindings &bind) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Mat u = Mat::Identity(dim, dim);
  for (const ir::KernelOp &op : kernel.body) {
    const auto *in = std::get_if<ir::Instr>(&op);
    if (in == nullptr) throw std::invalid_argument("call marker in kernel");
    double theta = 0.0;
    if (const auto *v = std::get_if<double>(&in->param)) {
      theta = *v;
    } else if (const auto *s = std::get_if<ir::SymbolRef>(&in->param)) {
      const auto it = bind.find(*s);
      if (it == bind.end()) throw std::invalid_argument("unbound symbol " + s->array);
      theta = it->second;
    }
    u = embed(textbook_gate(in->gate, theta), in->qubits, n) * u;
  }
  return u;
}

double phase_distance(const Mat &a, const Mat &b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) == 0.0) return (a - b).cwiseAbs().maxCoeff();
  const C phase = a(r, c) / b(r, c);
  const C unit = phase / std::abs(phase);
  return (a - unit * b).cwiseAbs().maxCoeff();
}

ir::QModule random_unitary_module(std::mt19937_64 &rng, const RandomKernelSpec &spec,
                                  Bindings *bind) {
  const auto gates = unitary_gates();
  ir::QModule m;
  m.declarations.push_back({ir::RegisterKind::Qubit, "q", spec.qubits});
  if (spec.params > 0) m.declarations.push_back({ir::RegisterKind::Shared, "P", spec.params});
  std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
  if (bind != nullptr) {
    for (std::uint32_t i = 0; i < spec.params; ++i) (*bind)[ir::SymbolRef{"P", i}] = angle(rng);
  }
  ir::QKernel k;
  k.name = "k";
  while (k.body.size() < spec.gates) {
    const ir::GateId g = gates[rng() % gates.size()];
    const ir::GateDef &def = ir::gate_def(g);
    if (def.num_qubits() > spec.qubits) continue;
    std::vector<std::uint32_t> pool(spec.qubits);
    for (std::uint32_t i = 0; i < spec.qubits; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    ir::Instr in;
    in.gate = g;
    in.qubits.assign(pool.begin(), pool.begin() + static_cast<long>(def.num_qubits()));
    if (def.is_parametric()) {
      if (spec.params > 0 && rng() % 2 == 0) {
        in.param = ir::SymbolRef{"P", static_cast<std::uint32_t>(rng() % spec.params)};
      } else {
        in.param = angle(rng);
      }
    }
    k.body.emplace_back(std::move(in));
  }
  m.kernels.push_back(std::move(k));
  return m;
}

}  // namespace qhc::testing
