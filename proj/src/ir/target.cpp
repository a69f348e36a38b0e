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

#include "qhc/ir/target.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <string>

#include "qhc/error.hpp"

namespace qhc::ir {

bool TargetConfig::is_native(GateId id) const {
  return std::find(native_gates.begin(), native_gates.end(), id) !=
         native_gates.end();
}

bool TargetConfig::adjacent(std::uint32_t a, std::uint32_t b) const {
  if (a == b || a >= num_qubits || b >= num_qubits) return false;
  switch (topology) {
    case Topology::AllToAll:
      return true;
    case Topology::Linear:
      return (a > b ? a - b : b - a) == 1;
    case Topology::Explicit:
      for (const auto &[u, v] : edges) {
        if ((u == a && v == b) || (u == b && v == a)) return true;
      }
      return false;
  }
  return false;
}

std::uint32_t TargetConfig::duration(GateId id) const {
  if (auto it = durations.find(id); it != durations.end()) return it->second;
  switch (id) {
    case GateId::PrepZ: return 4;
    case GateId::MeasZ: return 10;
    default: return static_cast<std::uint32_t>(gate_def(id).num_qubits());
  }
}

std::vector<std::vector<std::uint32_t>> TargetConfig::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(num_qubits);
  for (std::uint32_t a = 0; a < num_qubits; ++a) {
    for (std::uint32_t b = 0; b < num_qubits; ++b) {
      if (adjacent(a, b)) adj[a].push_back(b);
    }
  }
  return adj;
}

void TargetConfig::validate() const {
  if (num_qubits == 0) {
    throw Error(ErrorCode::InvalidTarget, "target must have at least one qubit");
  }
  for (const auto &[u, v] : edges) {
    if (u >= num_qubits || v >= num_qubits || u == v) {
      throw Error(ErrorCode::InvalidTarget,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") is not a valid qubit pair");
    }
  }
  const auto adj = adjacency();
  std::vector<bool> seen(num_qubits, false);
  std::queue<std::uint32_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::uint32_t reached = 1;
  while (!frontier.empty()) {
    const std::uint32_t u = frontier.front();
    frontier.pop();
    for (std::uint32_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  if (reached != num_qubits) {
    throw Error(ErrorCode::InvalidTarget, "connectivity graph is not connected");
  }
  if (!is_native(GateId::PrepZ) || !is_native(GateId::MeasZ)) {
    throw Error(ErrorCode::InvalidTarget,
                "native gate set must contain PREPZ and MEASZ");
  }
  const bool entangling = std::any_of(
      native_gates.begin(), native_gates.end(),
      [](GateId id) { return gate_def(id).num_qubits() >= 2; });
  if (!entangling) {
    throw Error(ErrorCode::InvalidTarget,
                "native gate set must contain an entangling gate");
  }
}

TargetConfig default_target(std::uint32_t num_qubits) {
  TargetConfig t;
  t.num_qubits = num_qubits;
  return t;
}

namespace {

class ConfigReader {
 public:
  explicit ConfigReader(std::string_view text) : text_(text) {}

  TargetConfig read() {
    TargetConfig t;
    bool have_qubits = false;
    std::string table;
    while (!at_end()) {
      skip_blank();
      if (at_end()) break;
      if (peek() == '[') {
        ++pos_;
        table = identifier();
        expect(']');
        end_of_line();
        continue;
      }
      const std::uint32_t key_line = line_;
      const std::string key = identifier();
      skip_spaces();
      expect('=');
      skip_spaces();
      if (table == "durations") {
        const GateDef *def = find_gate(key);
        if (def == nullptr) fail(key_line, "unknown gate '" + key + "' in [durations]");
        const std::int64_t cycles = integer();
        if (cycles < 0) fail(key_line, "durations must be non-negative");
        t.durations[def->identifier] = static_cast<std::uint32_t>(cycles);
      } else if (!table.empty()) {
        fail(key_line, "unknown table [" + table + "]");
      } else if (key == "qubits") {
        const std::int64_t n = integer();
        if (n <= 0 || n > 255) fail(key_line, "qubits must be in 1..255");
        t.num_qubits = static_cast<std::uint32_t>(n);
        have_qubits = true;
      } else if (key == "connectivity") {
        if (peek() == '"') {
          const std::string kind = string();
          if (kind == "all") {
            t.topology = Topology::AllToAll;
          } else if (kind == "linear") {
            t.topology = Topology::Linear;
          } else {
            fail(key_line, "connectivity must be \"all\", \"linear\" or an edge list");
          }
        } else {
          t.topology = Topology::Explicit;
          t.edges = edge_list();
        }
      } else if (key == "native") {
        t.native_gates.clear();
        for (const std::string &name : string_list()) {
          const GateDef *def = find_gate(name);
          if (def == nullptr) fail(key_line, "unknown native gate '" + name + "'");
          t.native_gates.push_back(def->identifier);
        }
      } else {
        fail(key_line, "unknown key '" + key + "'");
      }
      end_of_line();
    }
    if (!have_qubits) fail(line_, "missing 'qubits'");
    t.validate();
    return t;
  }

 private:
  [[noreturn]] void fail(std::uint32_t line, const std::string &what) const {
    throw Error(ErrorCode::InvalidTarget,
                "target config line " + std::to_string(line) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_spaces() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  // Skips whitespace, newlines, and comments, including inside arrays.
  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void end_of_line() {
    skip_spaces();
    if (peek() == '#') {
      while (!at_end() && peek() != '\n') ++pos_;
    }
    if (!at_end() && peek() != '\n') fail(line_, "unexpected trailing text");
  }

  void expect(char c) {
    if (peek() != c) fail(line_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      ++pos_;
    }
    if (start == pos_) fail(line_, "expected a key");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    std::int64_t value = 0;
    const char *first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == first) fail(line_, "expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::string string() {
    expect('"');
    const std::size_t start = pos_;
    while (!at_end() && peek() != '"' && peek() != '\n') ++pos_;
    if (peek() != '"') fail(line_, "unterminated string");
    std::string s(text_.substr(start, pos_ - start));
    ++pos_;
    return s;
  }

  template <typename F>
  void array(F &&element) {
    expect('[');
    skip_blank();
    if (peek() == ']') {
      ++pos_;
      return;
    }
    while (true) {
      skip_blank();
      element();
      skip_blank();
      if (peek() == ',') {
        ++pos_;
        skip_blank();
        if (peek() == ']') {
          ++pos_;
          return;
        }
        continue;
      }
      expect(']');
      return;
    }
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    array([&] {
      std::vector<std::int64_t> pair;
      array([&] { pair.push_back(integer()); });
      if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0) {
        fail(line_, "each edge must be a pair of qubit indices");
      }
      edges.emplace_back(static_cast<std::uint32_t>(pair[0]),
                         static_cast<std::uint32_t>(pair[1]));
    });
    return edges;
  }

  std::vector<std::string> string_list() {
    std::vector<std::string> out;
    array([&] { out.push_back(string()); });
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
};

}  // namespace

TargetConfig parse_target_config(std::string_view text) {
  return ConfigReader(text).read();
}

}  // namespace qhc::ir
