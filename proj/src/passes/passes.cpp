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

#include "qhc/passes/passes.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numbers>
#include <optional>

#include "qhc/error.hpp"

namespace qhc::passes {

using ir::GateId;
using ir::Instr;
using ir::KernelOp;
using ir::QKernel;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroAngleTol = 1e-12;

Instr make(GateId g, std::vector<std::uint32_t> qubits,
           ir::ParamOperand param = {}) {
  Instr in;
  in.gate = g;
  in.qubits = std::move(qubits);
  in.param = std::move(param);
  return in;
}

bool is_rotation(GateId g) {
  return g == GateId::RX || g == GateId::RY || g == GateId::RZ;
}

QKernel fresh_copy(const QKernel &k) {
  QKernel out;
  out.name = k.name;
  out.inlined = k.inlined;
  out.mapped = k.mapped;
  out.placement = k.placement;
  return out;
}

}  // namespace

std::size_t two_qubit_count(const QKernel &kernel) {
  std::size_t n = 0;
  for (const KernelOp &op : kernel.body) {
    if (const auto *in = std::get_if<Instr>(&op); in && in->qubits.size() == 2) {
      ++n;
    }
  }
  return n;
}

// ---------------------------------------------------------------------------
// inlining

ir::QModule inline_kernels(const ir::QModule &module) {
  std::map<std::string, std::vector<KernelOp>, std::less<>> done;
  std::vector<std::string> stack;

  std::function<const std::vector<KernelOp> &(const QKernel &)> flatten =
      [&](const QKernel &k) -> const std::vector<KernelOp> & {
    if (auto it = done.find(k.name); it != done.end()) return it->second;
    if (std::find(stack.begin(), stack.end(), k.name) != stack.end()) {
      throw Error(ErrorCode::RecursiveKernelCall,
                  "recursive kernel call involving '" + k.name + "'");
    }
    stack.push_back(k.name);
    std::vector<KernelOp> body;
    for (const KernelOp &op : k.body) {
      if (const auto *call = std::get_if<ir::KernelCall>(&op)) {
        const QKernel *callee = module.find_kernel(call->callee);
        if (callee == nullptr) {
          throw Error(ErrorCode::InvalidModule,
                      "call to unknown kernel '" + call->callee + "'");
        }
        const auto &sub = flatten(*callee);
        body.insert(body.end(), sub.begin(), sub.end());
      } else {
        body.push_back(op);
      }
    }
    stack.pop_back();
    return done.emplace(k.name, std::move(body)).first->second;
  };

  ir::QModule out;
  out.declarations = module.declarations;
  for (const QKernel &k : module.kernels) {
    QKernel flat = fresh_copy(k);
    flat.body = flatten(k);
    flat.inlined = true;
    flat.mapped = false;
    flat.placement.clear();
    out.kernels.push_back(std::move(flat));
  }
  return out;
}

// ---------------------------------------------------------------------------
// peephole

ir::QKernel peephole_optimize(const QKernel &kernel) {
  std::vector<KernelOp> out;
  std::vector<bool> alive;
  // Indices into `out` of the live operations on each qubit, oldest first.
  std::map<std::uint32_t, std::vector<std::size_t>> per_qubit;

  auto top_of = [&](std::uint32_t q) -> std::optional<std::size_t> {
    auto it = per_qubit.find(q);
    if (it == per_qubit.end() || it->second.empty()) return std::nullopt;
    return it->second.back();
  };
  auto kill = [&](std::size_t idx) {
    alive[idx] = false;
    for (std::uint32_t q : std::get<Instr>(out[idx]).qubits) {
      per_qubit[q].pop_back();
    }
  };

  for (const KernelOp &op : kernel.body) {
    if (std::holds_alternative<ir::KernelCall>(op)) {
      per_qubit.clear();  // opaque: nothing may move across it
      out.push_back(op);
      alive.push_back(true);
      continue;
    }
    const Instr &in = std::get<Instr>(op);
    const ir::GateDef &def = ir::gate_def(in.gate);

    if (is_rotation(in.gate) && ir::has_immediate(in.param) &&
        std::abs(std::remainder(std::get<double>(in.param), 4 * kPi)) <=
            kZeroAngleTol) {
      continue;
    }

    // The previous operation qualifies only if it is the latest operation on
    // every operand of `in`, and acts on exactly the same operands.
    std::optional<std::size_t> prev = top_of(in.qubits.at(0));
    for (std::uint32_t q : in.qubits) {
      if (top_of(q) != prev) prev.reset();
    }
    if (prev) {
      auto &p = std::get<Instr>(out[*prev]);
      const bool same_operands = p.qubits == in.qubits && !p.cbit && !in.cbit;
      if (same_operands && p.gate == in.gate && def.is_unitary &&
          def.is_hermitian && !def.is_parametric()) {
        kill(*prev);
        continue;
      }
      if (same_operands && p.gate == in.gate && is_rotation(in.gate) &&
          ir::has_immediate(p.param) && ir::has_immediate(in.param)) {
        const double merged = std::remainder(
            std::get<double>(p.param) + std::get<double>(in.param), 4 * kPi);
        if (std::abs(merged) <= kZeroAngleTol) {
          kill(*prev);
        } else {
          p.param = merged;
        }
        continue;
      }
    }
    const std::size_t idx = out.size();
    out.push_back(in);
    alive.push_back(true);
    for (std::uint32_t q : in.qubits) per_qubit[q].push_back(idx);
  }

  QKernel result = fresh_copy(kernel);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (alive[i]) result.body.push_back(std::move(out[i]));
  }
  return result;
}

// ---------------------------------------------------------------------------
// decomposition

namespace {

// One rewriting step for a gate the target lacks. Returns false if no rule
// applies.
bool expand_once(const Instr &in, const ir::TargetConfig &t,
                 std::vector<Instr> &out) {
  const auto &q = in.qubits;
  auto rot = [&](GateId g, double angle) {
    out.push_back(make(g, {q[0]}, angle));
  };
  switch (in.gate) {
    case GateId::X: rot(GateId::RX, kPi); return true;
    case GateId::Y: rot(GateId::RY, kPi); return true;
    case GateId::Z: rot(GateId::RZ, kPi); return true;
    case GateId::S: rot(GateId::RZ, kPi / 2); return true;
    case GateId::Sdg: rot(GateId::RZ, -kPi / 2); return true;
    case GateId::T: rot(GateId::RZ, kPi / 4); return true;
    case GateId::Tdg: rot(GateId::RZ, -kPi / 4); return true;
    case GateId::H:
      rot(GateId::RZ, kPi);
      rot(GateId::RY, kPi / 2);
      return true;
    case GateId::CNOT:
      out.push_back(make(GateId::H, {q[1]}));
      out.push_back(make(GateId::CZ, {q[0], q[1]}));
      out.push_back(make(GateId::H, {q[1]}));
      return true;
    case GateId::CZ:
      if (!t.is_native(GateId::CNOT)) return false;
      out.push_back(make(GateId::H, {q[1]}));
      out.push_back(make(GateId::CNOT, {q[0], q[1]}));
      out.push_back(make(GateId::H, {q[1]}));
      return true;
    case GateId::SWAP:
      out.push_back(make(GateId::CNOT, {q[0], q[1]}));
      out.push_back(make(GateId::CNOT, {q[1], q[0]}));
      out.push_back(make(GateId::CNOT, {q[0], q[1]}));
      return true;
    case GateId::CCNOT: {
      const std::uint32_t a = q[0], b = q[1], c = q[2];
      out.push_back(make(GateId::H, {c}));
      out.push_back(make(GateId::CNOT, {b, c}));
      out.push_back(make(GateId::Tdg, {c}));
      out.push_back(make(GateId::CNOT, {a, c}));
      out.push_back(make(GateId::T, {c}));
      out.push_back(make(GateId::CNOT, {b, c}));
      out.push_back(make(GateId::Tdg, {c}));
      out.push_back(make(GateId::CNOT, {a, c}));
      out.push_back(make(GateId::T, {b}));
      out.push_back(make(GateId::T, {c}));
      out.push_back(make(GateId::H, {c}));
      out.push_back(make(GateId::CNOT, {a, b}));
      out.push_back(make(GateId::T, {a}));
      out.push_back(make(GateId::Tdg, {b}));
      out.push_back(make(GateId::CNOT, {a, b}));
      return true;
    }
    // Rotations only need rewriting on targets that drop them; the parameter
    // operand is carried over unchanged so symbols survive.
    case GateId::RX:
      out.push_back(make(GateId::H, {q[0]}));
      out.push_back(make(GateId::RZ, {q[0]}, in.param));
      out.push_back(make(GateId::H, {q[0]}));
      return true;
    case GateId::RY:
      out.push_back(make(GateId::Sdg, {q[0]}));
      out.push_back(make(GateId::RX, {q[0]}, in.param));
      out.push_back(make(GateId::S, {q[0]}));
      return true;
    case GateId::RZ:
      out.push_back(make(GateId::H, {q[0]}));
      out.push_back(make(GateId::RX, {q[0]}, in.param));
      out.push_back(make(GateId::H, {q[0]}));
      return true;
    default:
      return false;
  }
}

constexpr int kMaxExpansionDepth = 6;

void expand(const Instr &in, const ir::TargetConfig &t, int depth,
            std::vector<Instr> &out) {
  if (t.is_native(in.gate)) {
    out.push_back(in);
    return;
  }
  std::vector<Instr> step;
  if (depth >= kMaxExpansionDepth || !expand_once(in, t, step)) {
    throw Error(ErrorCode::NotDecomposable,
                "no decomposition of " + std::string(ir::gate_name(in.gate)) +
                    " into the target's native gates");
  }
  for (const Instr &s : step) expand(s, t, depth + 1, out);
}

std::vector<Instr> native_sequence(const Instr &in, const ir::TargetConfig &t) {
  std::vector<Instr> out;
  expand(in, t, 0, out);
  return out;
}

}  // namespace

ir::QKernel decompose_to_native(const QKernel &kernel,
                                const ir::TargetConfig &target) {
  QKernel result = fresh_copy(kernel);
  for (const KernelOp &op : kernel.body) {
    const auto *in = std::get_if<Instr>(&op);
    if (in == nullptr) {
      result.body.push_back(op);
      continue;
    }
    for (Instr &n : native_sequence(*in, target)) {
      result.body.push_back(std::move(n));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// mapping

namespace {

std::vector<std::uint32_t> shortest_path(
    const std::vector<std::vector<std::uint32_t>> &adj, std::uint32_t from,
    std::uint32_t to) {
  std::vector<std::int64_t> parent(adj.size(), -1);
  std::deque<std::uint32_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (std::uint32_t v : adj[u]) {  // adjacency lists are sorted
      if (parent[v] < 0) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[to] < 0) return {};
  std::vector<std::uint32_t> path{to};
  while (path.back() != from) {
    path.push_back(static_cast<std::uint32_t>(parent[path.back()]));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ir::QKernel map_qubits(const QKernel &kernel, const ir::TargetConfig &target,
                       const MapOptions &options, std::size_t *swaps) {
  std::uint32_t needed = options.program_qubits;
  for (const KernelOp &op : kernel.body) {
    if (std::holds_alternative<ir::KernelCall>(op)) {
      throw Error(ErrorCode::InvalidModule,
                  "kernel '" + kernel.name + "' must be inlined before mapping");
    }
    for (std::uint32_t q : std::get<Instr>(op).qubits) {
      needed = std::max(needed, q + 1);
    }
  }
  if (needed > target.num_qubits) {
    throw Error(ErrorCode::TooManyQubits,
                "kernel '" + kernel.name + "' needs " + std::to_string(needed) +
                    " qubits but the target has " +
                    std::to_string(target.num_qubits));
  }
  const auto adj = target.adjacency();
  std::vector<std::uint32_t> phys(target.num_qubits);  // program -> physical
  std::vector<std::uint32_t> prog(target.num_qubits);  // physical -> program
  for (std::uint32_t i = 0; i < target.num_qubits; ++i) phys[i] = prog[i] = i;

  QKernel result = fresh_copy(kernel);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> routed;

  auto emit_swap = [&](std::uint32_t a, std::uint32_t b) {
    for (Instr &n : native_sequence(make(GateId::SWAP, {a, b}), target)) {
      result.body.push_back(std::move(n));
    }
    std::swap(prog[a], prog[b]);
    phys[prog[a]] = a;
    phys[prog[b]] = b;
  };

  for (const KernelOp &op : kernel.body) {
    Instr in = std::get<Instr>(op);
    if (in.qubits.size() == 2) {
      const std::uint32_t pa = phys[in.qubits[0]], pb = phys[in.qubits[1]];
      if (!target.adjacent(pa, pb)) {
        const auto path = shortest_path(adj, pa, pb);
        if (path.size() < 2) {
          throw Error(ErrorCode::RoutingFailed,
                      "no route between physical qubits " + std::to_string(pa) +
                          " and " + std::to_string(pb));
        }
        // Walk operand 0 along the path until it neighbours operand 1.
        for (std::size_t i = 0; i + 2 < path.size(); ++i) {
          emit_swap(path[i], path[i + 1]);
          routed.emplace_back(path[i], path[i + 1]);
        }
      }
    } else if (in.qubits.size() > 2) {
      for (std::size_t i = 0; i < in.qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < in.qubits.size(); ++j) {
          if (!target.adjacent(phys[in.qubits[i]], phys[in.qubits[j]])) {
            throw Error(ErrorCode::RoutingFailed,
                        std::string(ir::gate_name(in.gate)) +
                            " operands are not pairwise connected; decompose "
                            "first");
          }
        }
      }
    }
    for (std::uint32_t &q : in.qubits) q = phys[q];
    result.body.push_back(std::move(in));
  }
  std::size_t count = routed.size();
  if (options.restore_placement) {
    for (auto it = routed.rbegin(); it != routed.rend(); ++it) {
      emit_swap(it->first, it->second);
    }
    count *= 2;
  }
  if (swaps != nullptr) *swaps = count;

  result.placement.assign(phys.begin(), phys.begin() + needed);
  result.mapped = true;
  return result;
}

// ---------------------------------------------------------------------------
// scheduling

ir::QKernel schedule_asap(const QKernel &kernel, const ir::TargetConfig &target) {
  QKernel result = kernel;
  result.start_cycles.clear();
  result.depth = 0;
  std::map<std::uint32_t, std::uint64_t> qubit_ready, cbit_ready;
  for (const KernelOp &op : kernel.body) {
    const auto *in = std::get_if<Instr>(&op);
    if (in == nullptr) {
      throw Error(ErrorCode::InvalidModule,
                  "kernel '" + kernel.name + "' must be inlined before scheduling");
    }
    std::uint64_t start = 0;
    for (std::uint32_t q : in->qubits) start = std::max(start, qubit_ready[q]);
    if (in->cbit) start = std::max(start, cbit_ready[*in->cbit]);
    const std::uint64_t end = start + target.duration(in->gate);
    for (std::uint32_t q : in->qubits) qubit_ready[q] = end;
    if (in->cbit) cbit_ready[*in->cbit] = end;
    result.start_cycles.push_back(start);
    result.depth = std::max(result.depth, end);
  }
  result.scheduled = true;
  return result;
}

}  // namespace qhc::passes
