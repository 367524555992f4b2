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

#include "pbe/transpile.hpp"

#include <algorithm>
#include <vector>

namespace pbe {

namespace {

/** Toffoli in the Clifford+T-style layout: 2 H, 7 Phase, 6 CNOT. */
GateCounts toffoli_counts() {
  GateCounts c;
  c.h = 2;
  c.phase = 7;
  c.cnot = 6;
  return c;
}

/**
 * Borrowed-ancilla Toffoli chain acting as C^j X given j controls and j-1
 * dirty helpers: 4(j-2) Toffolis for j >= 3 (V-chain swept twice), one
 * Toffoli for j = 2, one CNOT for j = 1.
 */
GateCounts chain_counts(int j) {
  GateCounts c;
  if (j <= 0) {
    c.x = 1;
  } else if (j == 1) {
    c.cnot = 1;
  } else if (j == 2) {
    c = toffoli_counts();
  } else {
    c = (4 * std::int64_t{j - 2}) * toffoli_counts();
  }
  return c;
}

}  // namespace

GateCounts mcx_counts(int k) {
  if (k < 0) throw std::invalid_argument("mcx_counts: negative control count");
  GateCounts c;
  if (k <= 2) return chain_counts(k);
  // Split across one borrowed work qubit: two sweeps of each half-chain.
  const int k1 = (k + 1) / 2;  // First half of the controls.
  const int k2 = k - k1 + 1;   // Remaining controls plus the borrowed wire.
  c += 2 * chain_counts(k1);
  c += 2 * chain_counts(k2);
  return c;
}

GateCounts mcp_counts(int k) {
  if (k < 0) throw std::invalid_argument("mcp_counts: negative control count");
  GateCounts c;
  if (k == 0) {
    c.phase = 1;
    return c;
  }
  if (k == 1) {
    c.cnot = 2;
    c.phase = 3;
    return c;
  }
  c += mcx_counts(k);
  c += mcx_counts(k);
  c.phase += 2;
  c += mcp_counts(k - 1);
  return c;
}

GateCounts mch_counts(int k) {
  // H = Ry(pi/4) Z Ry(-pi/4); only the Z needs the controls. Each Ry is the
  // five-gate compound (3 Phase + 2 H); the two scalar factors cancel.
  GateCounts c;
  c.phase = 6;
  c.h = 4;
  c += mcp_counts(k);  // C^k Z = C^k P(pi).
  return c;
}

GateCounts mcy_counts(int k) {
  // Y = S X S^dag with S = P(pi/2); the phases stay uncontrolled.
  GateCounts c;
  c.phase = 2;
  c += mcx_counts(k);
  return c;
}

GateCounts transpile_count(const Circuit& circ) {
  GateCounts total;
  std::vector<std::int64_t> frontier(circ.num_qubits, 0);
  std::int64_t depth = 0;

  for (const Gate& g : circ.gates) {
    // IR-level depth over the wires the gate touches.
    std::int64_t level = frontier[g.target];
    for (const Control& c : g.controls)
      level = std::max(level, frontier[c.qubit]);
    ++level;
    frontier[g.target] = level;
    for (const Control& c : g.controls) frontier[c.qubit] = level;
    depth = std::max(depth, level);

    // Negative controls are X-conjugated on their wire.
    int k = static_cast<int>(g.controls.size());
    for (const Control& c : g.controls)
      if (c.polarity == 0) total.x += 2;

    GateCounts gc;
    switch (g.kind) {
      case GateKind::H:
        if (k == 0) gc.h = 1;
        else gc = mch_counts(k);
        break;
      case GateKind::X:
        gc = mcx_counts(k);
        break;
      case GateKind::Y:
        if (k == 0) gc.y = 1;
        else gc = mcy_counts(k);
        break;
      case GateKind::Phase:
        gc = mcp_counts(k);
        break;
    }
    total += gc;
  }
  total.depth = depth;
  return total;
}

}  // namespace pbe
