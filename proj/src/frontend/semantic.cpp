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

#include "qhc/frontend/semantic.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "eval.hpp"
#include "qhc/ir/gate.hpp"

namespace qhc::frontend {

const ir::RegisterDecl *SymbolTable::find_register(std::string_view name) const {
  for (const auto &r : registers) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

using detail::ExprContext;
using detail::Scope;

std::string plural(std::size_t n, const char *noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

class Analyzer {
 public:
  explicit Analyzer(const AstProgram &program) : prog_(program) {
    scope_.symbols = &table_;
  }

  SymbolTable run() {
    collect_names();
    for (std::size_t i = 0; i < prog_.decls.size(); ++i) {
      const Decl &d = prog_.decls[i];
      if (const auto *r = std::get_if<RegisterDeclNode>(&d)) {
        declare_register(*r);
      } else if (const auto *c = std::get_if<ConstDecl>(&d)) {
        table_.constants.emplace(c->name,
                                 detail::evaluate_int(c->value, scope_,
                                                      ExprContext::Constant)
                                     .i);
      }
    }
    for (const Decl &d : prog_.decls) {
      if (const auto *k = std::get_if<KernelDecl>(&d)) {
        current_ = k->name;
        check_block(k->body);
      }
    }
    check_acyclic();
    return std::move(table_);
  }

 private:
  void collect_names() {
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < prog_.decls.size(); ++i) {
      const Decl &d = prog_.decls[i];
      std::string name;
      SourceLocation loc;
      std::visit([&](const auto &n) { name = n.name; loc = n.loc; }, d);
      if (ir::find_gate(name) != nullptr) {
        throw Error(ErrorCode::DuplicateDefinition,
                    "'" + name + "' is a gate name", loc);
      }
      if (!seen.insert(name).second) {
        throw Error(ErrorCode::DuplicateDefinition,
                    "'" + name + "' is already defined", loc);
      }
      if (std::holds_alternative<KernelDecl>(d)) {
        table_.kernels.emplace(name, i);
        table_.kernel_order.push_back(name);
      }
    }
    names_ = std::move(seen);
  }

  void declare_register(const RegisterDeclNode &r) {
    const auto v =
        detail::evaluate_int(r.length, scope_, ExprContext::Constant).i;
    if (v < 1 || v > kMaxArrayLength) {
      throw Error(ErrorCode::InvalidLength,
                  "length of '" + r.name + "' must be between 1 and " +
                      std::to_string(kMaxArrayLength) + ", got " +
                      std::to_string(v),
                  r.loc);
    }
    table_.registers.push_back(
        ir::RegisterDecl{r.kind, r.name, static_cast<std::uint32_t>(v)});
  }

  void check_block(const std::vector<Stmt> &body) {
    for (const Stmt &s : body) {
      if (const auto *g = std::get_if<GateCall>(&s.node)) {
        check_gate(*g);
      } else if (const auto *c = std::get_if<KernelCallStmt>(&s.node)) {
        if (table_.kernels.find(c->kernel) == table_.kernels.end()) {
          throw Error(ErrorCode::UndefinedSymbol,
                      "undefined kernel '" + c->kernel + "'", c->loc);
        }
        edges_[current_].push_back(c->kernel);
      } else {
        const auto &loop = std::get<ForLoop>(s.node);
        if (names_.count(loop.var) != 0 || scope_.find_loop(loop.var) ||
            ir::find_gate(loop.var) != nullptr) {
          throw Error(ErrorCode::DuplicateDefinition,
                      "loop variable '" + loop.var + "' shadows another name",
                      loop.loc);
        }
        detail::evaluate_int(loop.from, scope_, ExprContext::Constant);
        detail::evaluate_int(loop.to, scope_, ExprContext::Constant);
        scope_.loops.push_back({loop.var, std::nullopt});
        check_block(loop.body);
        scope_.loops.pop_back();
      }
    }
  }

  // Checks that `arg` names an element of an array of the given kind and
  // that a constant index lies in range.
  void check_element(const Arg &arg, ir::RegisterKind kind, const GateCall &g,
                     const char *what) {
    const auto *ref = std::get_if<ElementRef>(&arg);
    if (ref == nullptr) {
      throw Error(ErrorCode::TypeMismatch,
                  g.gate + " expects " + what + " element here", g.loc);
    }
    const ir::RegisterDecl *reg = table_.find_register(ref->array);
    if (reg == nullptr) {
      throw Error(ErrorCode::UndefinedSymbol,
                  "undefined symbol '" + ref->array + "'", ref->loc);
    }
    if (reg->kind != kind) {
      throw Error(ErrorCode::TypeMismatch,
                  "'" + ref->array + "' is a " +
                      std::string(ir::register_kind_name(reg->kind)) +
                      " array; " + g.gate + " expects " + what + " element here",
                  ref->loc);
    }
    const auto idx =
        detail::evaluate_int(ref->index, scope_, ExprContext::Index);
    if (idx.known && (idx.i < 0 || idx.i >= reg->length)) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(idx.i) + " out of range for '" +
                      ref->array + "' of length " + std::to_string(reg->length),
                  ref->loc);
    }
  }

  bool is_element_of(const Arg &arg, ir::RegisterKind kind) const {
    const auto *ref = std::get_if<ElementRef>(&arg);
    if (ref == nullptr) return false;
    const ir::RegisterDecl *reg = table_.find_register(ref->array);
    return reg != nullptr && reg->kind == kind;
  }

  void check_gate(const GateCall &g) {
    const ir::GateDef *def = ir::find_gate(g.gate);
    if (def == nullptr) {
      if (table_.kernels.count(g.gate) != 0) {
        throw Error(ErrorCode::ArityMismatch,
                    "kernel '" + g.gate + "' takes no arguments", g.loc);
      }
      throw Error(ErrorCode::UndefinedSymbol,
                  "undefined gate '" + g.gate + "'", g.loc);
    }
    const std::size_t nq = def->num_qubits();
    const std::size_t nc = def->identifier == ir::GateId::MeasZ ? 1 : 0;
    const std::size_t np = def->num_params();
    if (g.args.size() != nq + nc + np) {
      std::size_t found_q = 0;
      while (found_q < g.args.size() &&
             is_element_of(g.args[found_q], ir::RegisterKind::Qubit)) {
        ++found_q;
      }
      std::string detail;
      if (found_q != nq) {
        detail = "expected " + plural(nq, "qubit") + ", found " +
                 std::to_string(found_q);
      } else if (nc != 0) {
        detail = "expected " + plural(nq, "qubit") + " and 1 classical bit";
      } else {
        detail = "expected " + plural(np, "parameter") + ", found " +
                 std::to_string(g.args.size() - nq);
      }
      throw Error(ErrorCode::ArityMismatch, g.gate + ": " + detail, g.loc);
    }
    for (std::size_t i = 0; i < nq; ++i) {
      check_element(g.args[i], ir::RegisterKind::Qubit, g, "a qbit");
    }
    if (nc != 0) check_element(g.args[nq], ir::RegisterKind::Cbit, g, "a cbit");
    for (std::size_t i = nq + nc; i < g.args.size(); ++i) {
      if (std::holds_alternative<ElementRef>(g.args[i])) {
        check_element(g.args[i], ir::RegisterKind::Shared, g,
                      "a shared parameter");
      } else {
        detail::evaluate(std::get<Expr>(g.args[i]), scope_, ExprContext::Angle);
      }
    }
  }

  void check_acyclic() {
    // 0 = unvisited, 1 = on stack, 2 = done
    std::map<std::string, int, std::less<>> state;
    std::vector<std::string> path;
    std::function<void(const std::string &)> visit = [&](const std::string &k) {
      state[k] = 1;
      path.push_back(k);
      for (const std::string &callee : edges_[k]) {
        if (state[callee] == 1) {
          std::string cycle;
          auto it = std::find(path.begin(), path.end(), callee);
          for (; it != path.end(); ++it) cycle += *it + " -> ";
          cycle += callee;
          const auto &decl =
              std::get<KernelDecl>(prog_.decls[table_.kernels.at(callee)]);
          throw Error(ErrorCode::RecursiveKernelCall,
                      "recursive kernel call: " + cycle, decl.loc);
        }
        if (state[callee] == 0) visit(callee);
      }
      path.pop_back();
      state[k] = 2;
    };
    for (const std::string &k : table_.kernel_order) {
      if (state[k] == 0) visit(k);
    }
  }

  const AstProgram &prog_;
  SymbolTable table_;
  Scope scope_;
  std::set<std::string, std::less<>> names_;
  std::string current_;
  std::map<std::string, std::vector<std::string>, std::less<>> edges_;
};

}  // namespace

SymbolTable analyze(const AstProgram &program) {
  return Analyzer(program).run();
}

}  // namespace qhc::frontend
