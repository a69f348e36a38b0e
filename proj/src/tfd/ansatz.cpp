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

#include "qhc/tfd/ansatz.hpp"

#include <sstream>

#include "qhc/error.hpp"
#include "qhc/ir/module.hpp"

namespace qhc::tfd {

std::string generate_source(std::uint32_t L, const std::optional<AngleSet> &folded) {
  if (L < 2 || L > 12) {
    throw Error(ErrorCode::InvalidConfig,
                "subsystem size must be between 2 and 12, got " + std::to_string(L));
  }
  std::array<std::string, kNumAngles> p;
  for (std::size_t k = 0; k < kNumAngles; ++k) {
    p[k] = folded ? "(" + ir::format_double(folded->to_array()[k]) + ")"
                  : "P[" + std::to_string(k) + "]";
  }

  std::ostringstream s;
  s << "// Thermofield double ansatz for the transverse-field Ising ring.\n"
    << "// Subsystem A is q[0.." << L << "), subsystem B is q[" << L << ".." << 2 * L
    << ").\n\n"
    << "const int L = " << L << ";\n"
    << "const int N = 2 * L;\n\n"
    << "qbit q[N];\n"
    << "cbit c[N];\n"
    << "shared double P[4];\n\n";

  s << "kernel TFD_terms() {\n"
    << "  // single-qubit terms\n"
    << "  for i in 0..N {\n"
    << "    RX(q[i], " << p[0] << ");\n"
    << "  }\n"
    << "  // intra-system ZZ, adjacent pairs\n"
    << "  for e in 0..L - 1 {\n"
    << "    for s in 0..2 {\n"
    << "      CNOT(q[e + L * s + 1], q[e + L * s]);\n"
    << "    }\n"
    << "    for s in 0..2 {\n"
    << "      RZ(q[e + L * s], " << p[1] << ");\n"
    << "    }\n"
    << "    for s in 0..2 {\n"
    << "      CNOT(q[e + L * s + 1], q[e + L * s]);\n"
    << "    }\n"
    << "  }\n"
    << "  // intra-system ZZ, ring closure\n"
    << "  for s in 0..2 {\n"
    << "    CNOT(q[L * s], q[L * s + L - 1]);\n"
    << "  }\n"
    << "  for s in 0..2 {\n"
    << "    RZ(q[L * s + L - 1], " << p[1] << ");\n"
    << "  }\n"
    << "  for s in 0..2 {\n"
    << "    CNOT(q[L * s], q[L * s + L - 1]);\n"
    << "  }\n"
    << "  // inter-system XX\n"
    << "  for i in 0..L {\n"
    << "    RY(q[i + L], -pi / 2);\n"
    << "    RY(q[i], -pi / 2);\n"
    << "  }\n"
    << "  for i in 0..L {\n"
    << "    CNOT(q[i + L], q[i]);\n"
    << "  }\n"
    << "  for i in 0..L {\n"
    << "    RZ(q[i], " << p[2] << ");\n"
    << "  }\n"
    << "  for i in 0..L {\n"
    << "    CNOT(q[i + L], q[i]);\n"
    << "  }\n"
    << "  for i in 0..L {\n"
    << "    RY(q[i + L], pi / 2);\n"
    << "    RY(q[i], pi / 2);\n"
    << "  }\n"
    << "  // inter-system ZZ\n"
    << "  for i in 0..L {\n"
    << "    CNOT(q[i], q[i + L]);\n"
    << "  }\n"
    << "  for i in 0..L {\n"
    << "    RZ(q[i + L], " << p[3] << ");\n"
    << "  }\n"
    << "  for i in 0..L {\n"
    << "    CNOT(q[i], q[i + L]);\n"
    << "  }\n"
    << "}\n\n";

  s << "kernel PrepZAll() {\n"
    << "  for i in 0..N {\n"
    << "    PREPZ(q[i]);\n"
    << "  }\n"
    << "}\n\n"
    << "// Bell pairs between A and B: the infinite-temperature state.\n"
    << "kernel BellPrep() {\n"
    << "  for i in 0..L {\n"
    << "    RY(q[i], pi / 2);\n"
    << "  }\n"
    << "  for i in 0..L {\n"
    << "    CNOT(q[i], q[i + L]);\n"
    << "  }\n"
    << "}\n\n"
    << "kernel MeasZAll() {\n"
    << "  for i in 0..N {\n"
    << "    MEASZ(q[i], c[i]);\n"
    << "  }\n"
    << "}\n\n"
    << "kernel XmaptoZ() {\n"
    << "  for i in 0..N {\n"
    << "    H(q[i]);\n"
    << "  }\n"
    << "}\n\n"
    << "kernel tfd_Z() {\n"
    << "  PrepZAll();\n"
    << "  BellPrep();\n"
    << "  TFD_terms();\n"
    << "  MeasZAll();\n"
    << "}\n\n"
    << "kernel tfd_X() {\n"
    << "  PrepZAll();\n"
    << "  BellPrep();\n"
    << "  TFD_terms();\n"
    << "  XmaptoZ();\n"
    << "  MeasZAll();\n"
    << "}\n";
  return s.str();
}

}  // namespace qhc::tfd
