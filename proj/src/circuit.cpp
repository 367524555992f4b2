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

#include "pbe/circuit.hpp"

#include <algorithm>

namespace pbe {

Gate controlled(const Gate& g, const std::vector<Control>& extra) {
  Gate out = g;
  for (const Control& c : extra) {
    if (c.qubit == g.target)
      throw std::invalid_argument("controlled: control equals gate target");
    auto dup = std::find_if(out.controls.begin(), out.controls.end(),
                            [&](const Control& e) { return e.qubit == c.qubit; });
    if (dup != out.controls.end()) {
      if (dup->polarity != c.polarity)
        throw std::invalid_argument(
            "controlled: conflicting polarities on one control qubit");
      continue;  // Same control already present.
    }
    out.controls.push_back(c);
  }
  return out;
}

Circuit controlled(const Circuit& circ, const std::vector<Control>& extra) {
  int width = circ.num_qubits;
  for (const Control& c : extra) width = std::max(width, c.qubit + 1);
  Circuit out(width);
  out.gates.reserve(circ.gates.size());
  for (const Gate& g : circ.gates) out.add(controlled(g, extra));
  return out;
}

Circuit adjoint(const Circuit& circ) {
  Circuit out(circ.num_qubits);
  out.gates.reserve(circ.gates.size());
  for (auto it = circ.gates.rbegin(); it != circ.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::Phase) g.angle = -g.angle;
    out.add(std::move(g));
  }
  return out;
}

Circuit shifted(const Circuit& circ, int offset, int new_width) {
  if (offset < 0 || circ.num_qubits + offset > new_width)
    throw std::invalid_argument("shifted: register does not fit");
  Circuit out(new_width);
  out.gates.reserve(circ.gates.size());
  for (Gate g : circ.gates) {
    g.target += offset;
    for (Control& c : g.controls) c.qubit += offset;
    out.add(std::move(g));
  }
  return out;
}

Circuit remap_qubit(const Circuit& circ, int from, int to, int new_width) {
  Circuit out(new_width);
  out.gates.reserve(circ.gates.size());
  for (Gate g : circ.gates) {
    if (g.target == from) g.target = to;
    for (Control& c : g.controls)
      if (c.qubit == from) c.qubit = to;
    out.add(std::move(g));
  }
  return out;
}

void add_global_phase(Circuit& circ, int qubit, double theta) {
  circ.add(x(qubit));
  circ.add(phase(qubit, theta));
  circ.add(x(qubit));
  circ.add(phase(qubit, theta));
}

void add_ry_compound(Circuit& circ, int target, double beta) {
  // Matrix order P(pi/2) H P(beta) H P(-pi/2); the right factor acts first.
  circ.add(phase(target, -M_PI / 2));
  circ.add(h(target));
  circ.add(phase(target, beta));
  circ.add(h(target));
  circ.add(phase(target, M_PI / 2));
}

}  // namespace pbe
