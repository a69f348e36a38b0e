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

#include "qhc/frontend/lower.hpp"

#include <algorithm>

#include "eval.hpp"
#include "qhc/frontend/parser.hpp"
#include "qhc/ir/gate.hpp"

namespace qhc::frontend {

namespace {

using detail::ExprContext;
using detail::Scope;

bool emits_anything(const std::vector<Stmt> &body) {
  for (const Stmt &s : body) {
    const auto *loop = std::get_if<ForLoop>(&s.node);
    if (loop == nullptr || emits_anything(loop->body)) return true;
  }
  return false;
}

class Lowerer {
 public:
  Lowerer(const AstProgram &program, const SymbolTable &symbols)
      : prog_(program), sym_(symbols) {
    scope_.symbols = &sym_;
    module_.declarations = sym_.registers;
  }

  ir::QModule run() {
    for (const std::string &name : sym_.kernel_order) {
      const auto &decl = std::get<KernelDecl>(prog_.decls[sym_.kernels.at(name)]);
      ir::QKernel k;
      k.name = name;
      out_ = &k.body;
      current_ = &decl;
      lower_block(decl.body);
      module_.kernels.push_back(std::move(k));
    }
    return std::move(module_);
  }

 private:
  void push(ir::KernelOp op, SourceLocation loc) {
    if (out_->size() >= kMaxKernelInstructions) {
      throw Error(ErrorCode::KernelTooLarge,
                  "kernel '" + current_->name + "' exceeds " +
                      std::to_string(kMaxKernelInstructions) +
                      " instructions after unrolling",
                  loc);
    }
    out_->push_back(std::move(op));
  }

  void lower_block(const std::vector<Stmt> &body) {
    for (const Stmt &s : body) {
      if (const auto *g = std::get_if<GateCall>(&s.node)) {
        lower_gate(*g);
      } else if (const auto *c = std::get_if<KernelCallStmt>(&s.node)) {
        push(ir::KernelCall{c->kernel}, c->loc);
      } else {
        lower_loop(std::get<ForLoop>(s.node));
      }
    }
  }

  void lower_loop(const ForLoop &loop) {
    const auto from =
        detail::evaluate_int(loop.from, scope_, ExprContext::Constant).i;
    const auto to = detail::evaluate_int(loop.to, scope_, ExprContext::Constant).i;
    if (from < 0 || to < 0) {
      throw Error(ErrorCode::LoopBoundNegative,
                  "loop bounds " + std::to_string(from) + ".." +
                      std::to_string(to) + " must be non-negative",
                  loop.loc);
    }
    if (!emits_anything(loop.body)) return;
    scope_.loops.push_back({loop.var, std::nullopt});
    for (std::int64_t i = from; i < to; ++i) {
      scope_.loops.back().value = i;
      lower_block(loop.body);
    }
    scope_.loops.pop_back();
  }

  std::uint32_t element(const Arg &arg, ir::RegisterKind kind,
                        std::uint32_t *local = nullptr) {
    const auto &ref = std::get<ElementRef>(arg);
    const ir::RegisterDecl *reg = sym_.find_register(ref.array);
    if (reg == nullptr || reg->kind != kind) {
      throw Error(ErrorCode::TypeMismatch,
                  "'" + ref.array + "' is not a " +
                      std::string(ir::register_kind_name(kind)) + " array",
                  ref.loc);
    }
    const auto idx = detail::evaluate_int(ref.index, scope_, ExprContext::Index).i;
    if (idx < 0 || idx >= reg->length) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(idx) + " out of range for '" +
                      ref.array + "' of length " + std::to_string(reg->length),
                  ref.loc);
    }
    if (local != nullptr) *local = static_cast<std::uint32_t>(idx);
    return *module_.register_offset(kind, ref.array) +
           static_cast<std::uint32_t>(idx);
  }

  void lower_gate(const GateCall &g) {
    const ir::GateDef *def = ir::find_gate(g.gate);
    if (def == nullptr) {
      throw Error(ErrorCode::UndefinedSymbol, "undefined gate '" + g.gate + "'",
                  g.loc);
    }
    const std::size_t nq = def->num_qubits();
    const bool meas = def->identifier == ir::GateId::MeasZ;
    const std::size_t expected = nq + (meas ? 1 : 0) + def->num_params();
    if (g.args.size() != expected) {
      throw Error(ErrorCode::ArityMismatch,
                  g.gate + ": expected " + std::to_string(expected) +
                      " arguments, found " + std::to_string(g.args.size()),
                  g.loc);
    }
    ir::Instr instr;
    instr.gate = def->identifier;
    for (std::size_t i = 0; i < nq; ++i) {
      const std::uint32_t q = element(g.args[i], ir::RegisterKind::Qubit);
      if (std::find(instr.qubits.begin(), instr.qubits.end(), q) !=
          instr.qubits.end()) {
        throw Error(ErrorCode::DuplicateOperand,
                    g.gate + ": qubit operands must be distinct", g.loc);
      }
      instr.qubits.push_back(q);
    }
    std::size_t next = nq;
    if (meas) instr.cbit = element(g.args[next++], ir::RegisterKind::Cbit);
    if (def->num_params() == 1) {
      const Arg &arg = g.args[next];
      if (const auto *ref = std::get_if<ElementRef>(&arg)) {
        std::uint32_t local = 0;
        element(arg, ir::RegisterKind::Shared, &local);
        instr.param = ir::SymbolRef{ref->array, local};
      } else {
        instr.param =
            detail::evaluate(std::get<Expr>(arg), scope_, ExprContext::Angle)
                .as_double();
      }
    }
    push(std::move(instr), g.loc);
  }

  const AstProgram &prog_;
  const SymbolTable &sym_;
  Scope scope_;
  ir::QModule module_;
  std::vector<ir::KernelOp> *out_ = nullptr;
  const KernelDecl *current_ = nullptr;
};

}  // namespace

ir::QModule lower(const AstProgram &program, const SymbolTable &symbols) {
  return Lowerer(program, symbols).run();
}

ir::QModule compile_to_ir(std::string_view source) {
  const AstProgram ast = parse_source(source);
  const SymbolTable symbols = analyze(ast);
  return lower(ast, symbols);
}

}  // namespace qhc::frontend
