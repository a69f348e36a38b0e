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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qhc/codegen/elfq.hpp"
#include "qhc/error.hpp"
#include "qhc/ir/module.hpp"
#include "qhc/optim/nelder_mead.hpp"
#include "qhc/qrt/session.hpp"
#include "qhc/tfd/ansatz.hpp"
#include "qhc/tfd/cost.hpp"
#include "qhc/tfd/oracle.hpp"
#include "qhc/tfd/reference.hpp"
#include "qhc/tfd/sweep.hpp"
#include "qhc/toolchain.hpp"

namespace py = pybind11;

namespace {

using qhc::tfd::AngleSet;

AngleSet to_angles(const std::vector<double> &v) {
  if (v.size() != qhc::tfd::kNumAngles) {
    throw qhc::Error(qhc::ErrorCode::LengthMismatch, "expected 4 angles");
  }
  return AngleSet::from_array(v.data());
}

std::vector<double> from_angles(const AngleSet &a) {
  const auto arr = a.to_array();
  return {arr.begin(), arr.end()};
}

py::bytes image_bytes(const qhc::codegen::ElfqImage &img) {
  const auto b = qhc::codegen::serialize(img);
  return py::bytes(reinterpret_cast<const char *>(b.data()), b.size());
}

qhc::codegen::ElfqImage image_from(const py::bytes &data) {
  const std::string s = data;
  return qhc::codegen::parse_image(
      std::span(reinterpret_cast<const std::uint8_t *>(s.data()), s.size()));
}

// Owns the image so a session can outlive the Python-side Image object.
struct PySession {
  explicit PySession(const qhc::codegen::ElfqImage &img, std::uint32_t qubits,
                     std::uint64_t seed)
      : session(img, qhc::qrt::DeviceConfig{"statevector", qubits, seed}) {}
  qhc::qrt::Session session;
};

py::dict row_dict(const qhc::tfd::SweepRow &r) {
  py::dict d;
  d["beta_idx"] = r.beta_idx;
  d["beta"] = r.beta;
  d["angles"] = from_angles(r.angles);
  d["cost"] = r.cost;
  d["fidelity"] = r.fidelity ? py::cast(*r.fidelity) : py::none();
  d["evaluations"] = r.evaluations;
  d["converged"] = r.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qhc, m) {
  m.doc() = "Quantum kernel compiler, runtime and TFD workload";

  // Leaked on purpose: the translator may run during interpreter teardown.
  static py::handle error_type = py::exception<qhc::Error>(m, "QhcError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qhc::Error &e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(qhc::error_code_name(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<qhc::codegen::ElfqImage>(m, "Image")
      .def_static("from_bytes", &image_from, py::arg("data"))
      .def_static("read", [](const std::string &path) { return qhc::codegen::read_elfq(path); })
      .def("to_bytes", &image_bytes)
      .def("write", [](const qhc::codegen::ElfqImage &img,
                       const std::string &path) { qhc::codegen::write_elfq(img, path); })
      .def("inspect", &qhc::codegen::inspect)
      .def("inspect_json", &qhc::codegen::inspect_json)
      .def("asm", [](const qhc::codegen::ElfqImage &img) { return qhc::codegen::emit_asm(img); })
      .def_readonly("num_qubits", &qhc::codegen::ElfqImage::num_qubits)
      .def_readonly("num_cbits", &qhc::codegen::ElfqImage::num_cbits)
      .def_property_readonly("kernels", [](const qhc::codegen::ElfqImage &img) {
        std::vector<std::string> names;
        for (const auto &r : img.qbbs) names.emplace_back(img.kernel_name(r));
        return names;
      })
      .def("__eq__", [](const qhc::codegen::ElfqImage &a, const qhc::codegen::ElfqImage &b) {
        return a == b;
      });

  py::class_<qhc::CompileResult>(m, "CompileResult")
      .def_readonly("image", &qhc::CompileResult::image)
      .def_readonly("seconds", &qhc::CompileResult::seconds)
      .def_property_readonly("ir",
                             [](const qhc::CompileResult &r) { return qhc::ir::print_ir(r.module); })
      .def_property_readonly("report",
                             [](const qhc::CompileResult &r) { return r.report.to_json(); });

  py::class_<qhc::Toolchain>(m, "Toolchain")
      .def(py::init<>())
      .def(
          "compile",
          [](qhc::Toolchain &tc, const std::string &source, int opt_level,
             const std::optional<std::string> &target) {
            qhc::CompileOptions opts;
            opts.opt_level = opt_level;
            if (target) opts.target = qhc::ir::parse_target_config(*target);
            return tc.compile(source, opts);
          },
          py::arg("source"), py::arg("opt_level") = 1, py::arg("target") = py::none())
      .def_property_readonly("compile_count", &qhc::Toolchain::compile_count)
      .def_property_readonly("compile_seconds", &qhc::Toolchain::compile_seconds);

  py::class_<PySession>(m, "Session")
      .def(py::init<const qhc::codegen::ElfqImage &, std::uint32_t, std::uint64_t>(),
           py::arg("image"), py::arg("qubits") = 0, py::arg("seed") = 0)
      .def("set_param",
           [](PySession &s, const std::string &a, std::uint32_t i, double v) {
             s.session.set_param(a, i, v);
           })
      .def("get_param", [](const PySession &s, const std::string &a,
                           std::uint32_t i) { return s.session.get_param(a, i); })
      .def("call_kernel", [](PySession &s, const std::string &k) { s.session.call_kernel(k); },
           py::call_guard<py::gil_scoped_release>())
      .def("get_cbit", [](const PySession &s, const std::string &a,
                          std::uint32_t i) { return s.session.get_cbit(a, i); })
      .def("probability_register",
           [](const PySession &s) { return s.session.probability_register(); })
      .def("reset_device", [](PySession &s) { s.session.reset_device(); })
      .def_property_readonly("num_qubits", [](const PySession &s) { return s.session.num_qubits(); })
      .def_property_readonly("kernels",
                             [](const PySession &s) { return s.session.kernel_names(); })
      .def_property_readonly("stats", [](const PySession &s) {
        const auto &st = s.session.stats();
        py::dict d;
        d["dispatches"] = st.dispatches;
        d["patched_words"] = st.patched_words;
        d["compile_count"] = st.compile_count;
        d["exec_seconds"] = st.exec_seconds;
        return d;
      });

  m.def(
      "minimize",
      [](const std::function<double(const std::vector<double> &)> &f,
         const std::vector<double> &x0, double initial_step, double tolerance,
         std::size_t max_evaluations, std::vector<double> lower, std::vector<double> upper) {
        qhc::optim::OptimConfig cfg;
        cfg.initial_step = initial_step;
        cfg.tolerance = tolerance;
        cfg.max_evaluations = max_evaluations;
        cfg.lower = std::move(lower);
        cfg.upper = std::move(upper);
        std::vector<double> buf;
        const auto r = qhc::optim::minimize(
            [&](std::span<const double> x) {
              buf.assign(x.begin(), x.end());
              return f(buf);
            },
            x0, cfg);
        py::dict d;
        d["x"] = r.best_point;
        d["fun"] = r.best_value;
        d["evaluations"] = r.evaluations;
        d["converged"] = r.converged;
        return d;
      },
      py::arg("f"), py::arg("x0"), py::arg("initial_step") = 1.5, py::arg("tolerance") = 1e-5,
      py::arg("max_evaluations") = 10000, py::arg("lower") = std::vector<double>{-7.0},
      py::arg("upper") = std::vector<double>{7.0});

  py::module_ tfd = m.def_submodule("tfd", "Thermofield double workload");
  tfd.def(
      "generate_source",
      [](std::uint32_t L, const std::optional<std::vector<double>> &folded) {
        return qhc::tfd::generate_source(
            L, folded ? std::optional<AngleSet>(to_angles(*folded)) : std::nullopt);
      },
      py::arg("L"), py::arg("folded") = py::none());
  tfd.def("beta_from_index", &qhc::tfd::beta_from_index);
  tfd.def("z_string_expectation", [](const std::vector<double> &P,
                                     const std::vector<std::uint32_t> &qubits) {
    return qhc::tfd::z_string_expectation(P, qubits);
  });
  tfd.def("total_cost", [](double beta, const std::vector<double> &pz,
                           const std::vector<double> &px, std::uint32_t L) {
    return qhc::tfd::total_cost(beta, pz, px, L);
  });
  tfd.def("n6_reference_terms", [](const std::vector<double> &P) {
    const auto t = qhc::tfd::n6_reference_terms(P);
    return py::make_tuple(t.zz_a_plus_zz_b, t.zz_ab, t.z_a_plus_z_b);
  });
  tfd.def("reference_pipeline", [](std::uint32_t L, const std::vector<double> &angles) {
    const auto r = qhc::tfd::reference_pipeline(L, to_angles(angles));
    return py::make_tuple(r.P_Z, r.P_X);
  });
  tfd.def("ansatz_fidelity", [](double beta, std::uint32_t L, const std::vector<double> &a) {
    return qhc::tfd::ansatz_fidelity(beta, L, to_angles(a));
  });
  tfd.def(
      "run_sweep",
      [](std::uint32_t L, int beta_from, int beta_to, bool with_oracle, std::uint64_t seed) {
        qhc::Toolchain tc;
        auto compiled = tc.compile(qhc::tfd::generate_source(L));
        qhc::qrt::Session session(std::move(compiled.image),
                                  qhc::qrt::DeviceConfig{"statevector", 0, seed});
        qhc::tfd::RuntimeSource source(session);
        qhc::tfd::TfdConfig cfg;
        cfg.L = L;
        cfg.beta_from = beta_from;
        cfg.beta_to = beta_to;
        cfg.with_oracle = with_oracle;
        cfg.seed = seed;
        std::vector<qhc::tfd::SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = qhc::tfd::run_sweep(cfg, source);
        }
        py::list out;
        for (const auto &r : rows) out.append(row_dict(r));
        return out;
      },
      py::arg("L") = 2, py::arg("beta_from") = -30, py::arg("beta_to") = 30,
      py::arg("with_oracle") = false, py::arg("seed") = 0);
}
