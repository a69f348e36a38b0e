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

// qhc: command-line driver for the quantum kernel toolchain.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhc/codegen/elfq.hpp"
#include "qhc/error.hpp"
#include "qhc/qrt/session.hpp"
#include "qhc/tfd/ansatz.hpp"
#include "qhc/tfd/oracle.hpp"
#include "qhc/tfd/sweep.hpp"
#include "qhc/toolchain.hpp"

namespace {

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qhc::Error(qhc::ErrorCode::Io, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw qhc::Error(qhc::ErrorCode::Io, "cannot write " + path);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// "file:line:col: error: message" when the error carries a location.
void report(const qhc::Error &e, const std::string &file) {
  std::cerr << file;
  if (e.location()) std::cerr << ':' << e.location()->line << ':' << e.location()->column;
  std::cerr << ": error: " << e.what() << " [" << qhc::error_code_name(e.code()) << "]\n";
}

struct CompileArgs {
  std::string source, out, target, emit_asm;
  int opt_level = 1;
  bool report = false;
};

int cmd_compile(const CompileArgs &a) {
  qhc::CompileOptions opts;
  opts.opt_level = a.opt_level;
  std::string file = a.source;
  try {
    if (!a.target.empty()) {
      file = a.target;
      opts.target = qhc::ir::parse_target_config(read_text(a.target));
    }
    file = a.source;
    const std::string src = read_text(a.source);
    qhc::Toolchain tc;
    const qhc::CompileResult r = tc.compile(src, opts);
    qhc::codegen::write_elfq(r.image, a.out);
    if (!a.emit_asm.empty()) write_text(a.emit_asm, qhc::codegen::emit_asm(r.image));
    if (a.report) std::cout << r.report.to_json() << '\n';
  } catch (const qhc::Error &e) {
    report(e, file);
    return 1;
  }
  return 0;
}

int cmd_inspect(const std::string &path, bool json) {
  try {
    const auto img = qhc::codegen::read_elfq(path);
    std::cout << (json ? qhc::codegen::inspect_json(img) + "\n" : qhc::codegen::inspect(img));
  } catch (const qhc::Error &e) {
    report(e, path);
    return 1;
  }
  return 0;
}

struct ParamAssign {
  std::string array;
  std::uint32_t index = 0;
  double value = 0.0;
};

// NAME[i]=v
ParamAssign parse_param(const std::string &text) {
  const auto open = text.find('['), close = text.find(']'), eq = text.find('=');
  if (open == std::string::npos || close == std::string::npos || eq != close + 1 ||
      open == 0 || close < open + 2) {
    throw qhc::Error(qhc::ErrorCode::InvalidConfig,
                     "--param expects NAME[i]=value, got '" + text + "'");
  }
  ParamAssign p;
  p.array = text.substr(0, open);
  try {
    std::size_t used = 0;
    const std::string idx = text.substr(open + 1, close - open - 1);
    const unsigned long i = std::stoul(idx, &used);
    if (used != idx.size()) throw std::invalid_argument("index");
    p.index = static_cast<std::uint32_t>(i);
    const std::string val = text.substr(eq + 1);
    p.value = std::stod(val, &used);
    if (used != val.size()) throw std::invalid_argument("value");
  } catch (const std::logic_error &) {
    throw qhc::Error(qhc::ErrorCode::InvalidConfig,
                     "--param expects NAME[i]=value, got '" + text + "'");
  }
  return p;
}

struct RunArgs {
  std::string path, kernel;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::uint32_t qubits = 0;
};

int cmd_run(const RunArgs &a) {
  try {
    qhc::qrt::DeviceConfig cfg;
    cfg.seed = a.seed;
    cfg.qubits = a.qubits;
    qhc::qrt::Session s(qhc::codegen::read_elfq(a.path), cfg);
    for (const std::string &text : a.params) {
      const ParamAssign p = parse_param(text);
      s.set_param(p.array, p.index, p.value);
    }
    s.call_kernel(a.kernel);
    for (const auto &d : s.image().register_decls()) {
      if (d.kind != qhc::ir::RegisterKind::Cbit) continue;
      std::cout << d.name << " =";
      for (std::uint32_t i = 0; i < d.length; ++i) std::cout << ' ' << s.get_cbit(d.name, i);
      std::cout << '\n';
    }
    const auto reg = s.probability_register();
    const std::uint32_t n = s.num_qubits();
    std::cout << "probability register (" << reg.size() << " entries)\n";
    for (std::size_t b = 0; b < reg.size(); ++b) {
      if (reg[b] <= 1e-12) continue;
      std::string ket;
      for (std::uint32_t q = 0; q < n; ++q) ket += (b >> (n - 1 - q)) & 1 ? '1' : '0';
      std::cout << b << " |" << ket << "> " << fmt(reg[b]) << '\n';
    }
  } catch (const qhc::Error &e) {
    report(e, a.path);
    return 1;
  }
  return 0;
}

struct SweepArgs {
  std::uint32_t L = 2;
  int beta_from = -30, beta_to = 30;
  std::string out;
  std::uint64_t seed = 0;
  bool with_oracle = false;
};

int cmd_tfd_sweep(const SweepArgs &a) {
  try {
    if (a.with_oracle && a.L > qhc::tfd::kOracleMaxL) {
      throw qhc::Error(qhc::ErrorCode::InvalidConfig,
                       "--with-oracle supports --l up to " +
                           std::to_string(qhc::tfd::kOracleMaxL));
    }
    const auto wall_start = std::chrono::steady_clock::now();
    qhc::Toolchain tc;
    qhc::CompileResult compiled = tc.compile(qhc::tfd::generate_source(a.L));
    qhc::qrt::DeviceConfig dcfg;
    dcfg.seed = a.seed;
    qhc::qrt::Session session(std::move(compiled.image), dcfg);
    qhc::tfd::RuntimeSource source(session);

    qhc::tfd::TfdConfig cfg;
    cfg.L = a.L;
    cfg.beta_from = a.beta_from;
    cfg.beta_to = a.beta_to;
    cfg.seed = a.seed;
    cfg.with_oracle = a.with_oracle;
    std::size_t evals = 0;
    const auto rows = qhc::tfd::run_sweep(cfg, source, [&](const qhc::tfd::SweepRow &r) {
      evals += r.evaluations;
      std::cerr << "beta_idx " << r.beta_idx << " cost " << fmt(r.cost);
      if (r.fidelity) std::cerr << " fidelity " << fmt(*r.fidelity);
      std::cerr << " evals " << r.evaluations << '\n';
    });
    const std::string csv = qhc::tfd::sweep_csv(rows, a.with_oracle);
    if (a.out.empty()) {
      std::cout << csv;
    } else {
      write_text(a.out, csv);
    }
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - wall_start;
    const auto &st = session.stats();
    std::cout << "compile_count " << tc.compile_count() << '\n'
              << "evaluations " << evals << '\n'
              << "dispatches " << st.dispatches << '\n'
              << "patched_words " << st.patched_words << '\n'
              << "T_c " << fmt(tc.compile_seconds()) << '\n'
              << "T_e_total " << fmt(st.exec_seconds) << '\n'
              << "wall " << fmt(wall.count()) << '\n';
  } catch (const qhc::Error &e) {
    report(e, "tfd-sweep");
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantum kernel compiler, runtime and TFD workload driver"};
  app.require_subcommand(1);

  CompileArgs ca;
  auto *compile = app.add_subcommand("compile", "compile a .qk source to an ELFQ image");
  compile->add_option("source", ca.source, "source file")->required();
  compile->add_option("-o,--out", ca.out, "output image")->required();
  compile->add_option("--target", ca.target, "target description file");
  compile->add_option("-O", ca.opt_level, "optimisation level")
      ->check(CLI::IsMember({0, 1}))
      ->default_val(1);
  compile->add_option("--emit-asm", ca.emit_asm, "write an assembly listing");
  compile->add_flag("--report", ca.report, "print the pass report as JSON");

  std::string inspect_path;
  bool inspect_json = false;
  auto *inspect = app.add_subcommand("inspect", "dump an ELFQ image");
  inspect->add_option("file", inspect_path, "image")->required();
  inspect->add_flag("--json", inspect_json, "machine-readable output");

  RunArgs ra;
  auto *run = app.add_subcommand("run", "dispatch one kernel on the simulator");
  run->add_option("file", ra.path, "image")->required();
  run->add_option("kernel", ra.kernel, "kernel name")->required();
  run->add_option("--param", ra.params, "NAME[i]=value, repeatable");
  run->add_option("--seed", ra.seed, "simulator seed");
  run->add_option("--qubits", ra.qubits, "device size (default: image size)");

  SweepArgs sa;
  auto *sweep = app.add_subcommand("tfd-sweep", "optimise TFD states over a beta range");
  sweep->add_option("--l", sa.L, "qubits per subsystem")->check(CLI::Range(2u, 12u));
  sweep->add_option("--beta-from", sa.beta_from, "first beta index (beta = 10^(idx/10))");
  sweep->add_option("--beta-to", sa.beta_to, "last beta index, inclusive");
  sweep->add_option("--out", sa.out, "CSV output (default: stdout)");
  sweep->add_option("--seed", sa.seed, "simulator seed");
  sweep->add_flag("--with-oracle", sa.with_oracle, "add the fidelity column");

  CLI11_PARSE(app, argc, argv);

  if (*compile) return cmd_compile(ca);
  if (*inspect) return cmd_inspect(inspect_path, inspect_json);
  if (*run) return cmd_run(ra);
  if (*sweep) return cmd_tfd_sweep(sa);
  return 1;
}
