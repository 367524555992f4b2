// Copyright 2026 The pbe developers
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

#include "pbe/circuit_json.hpp"

#include <fstream>

namespace pbe {

using nlohmann::json;

namespace {

std::string kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Phase: return "p";
  }
  throw std::logic_error("kind_name: unreachable");
}

json gate_to_json(const Gate& g) {
  json jg;
  const bool has_controls = !g.controls.empty();
  // Controlled X is spelled "cx" (the common name); other controlled gates
  // keep their base kind together with the controls array.
  if (g.kind == GateKind::X && has_controls)
    jg["kind"] = "cx";
  else
    jg["kind"] = kind_name(g.kind);
  jg["target"] = g.target;
  if (g.kind == GateKind::Phase) jg["angle"] = g.angle;
  if (has_controls) {
    json jc = json::array();
    for (const Control& c : g.controls) jc.push_back({c.qubit, c.polarity});
    jg["controls"] = jc;
  }
  return jg;
}

Gate gate_from_json(const json& jg) {
  Gate g;
  const std::string kind = jg.at("kind").get<std::string>();
  if (kind == "h") g.kind = GateKind::H;
  else if (kind == "x" || kind == "cx") g.kind = GateKind::X;
  else if (kind == "y") g.kind = GateKind::Y;
  else if (kind == "p" || kind == "phase" || kind == "ctrl")
    g.kind = GateKind::Phase;
  else
    throw std::invalid_argument("circuit_from_json: unknown gate kind '" +
                                kind + "'");
  g.target = jg.at("target").get<int>();
  if (g.kind == GateKind::Phase) g.angle = jg.at("angle").get<double>();
  if (jg.contains("controls")) {
    for (const auto& jc : jg.at("controls")) {
      if (!jc.is_array() || jc.size() != 2)
        throw std::invalid_argument(
            "circuit_from_json: control entries must be [qubit, polarity]");
      g.controls.push_back(
          Control{jc.at(0).get<int>(), jc.at(1).get<int>()});
    }
  }
  if (kind == "cx" && g.controls.empty())
    throw std::invalid_argument("circuit_from_json: 'cx' without controls");
  return g;
}

}  // namespace

json circuit_to_json(const Circuit& circ) {
  json j;
  j["num_qubits"] = circ.num_qubits;
  json jg = json::array();
  for (const Gate& g : circ.gates) jg.push_back(gate_to_json(g));
  j["gates"] = jg;
  return j;
}

Circuit circuit_from_json(const json& j) {
  Circuit circ(j.at("num_qubits").get<int>());
  for (const auto& jg : j.at("gates")) circ.add(gate_from_json(jg));
  return circ;
}

void save_circuit(const Circuit& circ, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_circuit: cannot open " + path);
  out << circuit_to_json(circ).dump(2) << '\n';
  if (!out) throw std::runtime_error("save_circuit: write failed on " + path);
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_circuit: cannot open " + path);
  json j;
  in >> j;
  return circuit_from_json(j);
}

}  // namespace pbe
