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

#pragma once

/**
 * @file transpile.hpp
 * @brief Deterministic resource counting against the {H, X, Y, Phase, CNOT}
 *        basis.
 *
 * Counting policy (fixed, documented so that reported numbers are
 * reproducible):
 *  - Bare H/X/Y/Phase count as themselves; X with one control is a CNOT.
 *  - Negative-polarity controls are converted by X conjugation of the control
 *    wire (2 extra X gates per negative control).
 *  - Toffoli (2 positive controls on X): 2 H + 7 Phase + 6 CNOT.
 *  - Multi-controlled X with k >= 3 controls: split-and-conjugate with one
 *    borrowed work qubit into 2 x (chain(ceil(k/2)) + chain(floor(k/2)+1)),
 *    where chain(j) is a borrowed-ancilla Toffoli ladder of 4(j-2) Toffolis
 *    for j >= 3, one Toffoli for j = 2, one CNOT for j = 1. The borrowed
 *    qubit is counted as scratch only; circuit widths elsewhere are
 *    unaffected.
 *  - Multi-controlled Phase: C^k P(t) = [C^{k}X-pair sandwich] + phases,
 *    recursively C^k P = 2*mcx(k) + 2 Phase + C^{k-1} P, with
 *    C^1 P = 2 CNOT + 3 Phase and C^0 P = 1 Phase.
 *  - Controlled H via H = Ry(pi/4) Z Ry(-pi/4): two uncontrolled five-gate
 *    rotation compounds (6 Phase + 4 H total; their scalar factors cancel
 *    exactly) plus a multi-controlled Phase(pi).
 *  - Controlled Y via Y = S X S^dag: 2 Phase + mcx(k).
 *
 * Depth is reported at IR level: each IR gate occupies one layer on the wires
 * it touches (target plus controls), before decomposition.
 */

#include <cstdint>

#include "pbe/circuit.hpp"

namespace pbe {

/** Gate totals per basis class, plus schedule depth of the IR. */
struct GateCounts {
  std::int64_t h = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t phase = 0;
  std::int64_t cnot = 0;
  std::int64_t depth = 0;

  std::int64_t one_qubit() const { return h + x + y + phase; }
  std::int64_t two_qubit() const { return cnot; }
  std::int64_t total() const { return one_qubit() + two_qubit(); }

  GateCounts& operator+=(const GateCounts& o) {
    h += o.h; x += o.x; y += o.y; phase += o.phase; cnot += o.cnot;
    return *this;  // depth is not additive; callers set it explicitly.
  }
  friend GateCounts operator*(std::int64_t r, GateCounts c) {
    c.h *= r; c.x *= r; c.y *= r; c.phase *= r; c.cnot *= r;
    return c;
  }
};

/** Counts for a multi-controlled X with k positive controls. */
GateCounts mcx_counts(int k);

/** Counts for a multi-controlled Phase with k positive controls. */
GateCounts mcp_counts(int k);

/** Counts for a multi-controlled H with k positive controls. */
GateCounts mch_counts(int k);

/** Counts for a multi-controlled Y with k positive controls. */
GateCounts mcy_counts(int k);

/**
 * Applies the counting policy to every gate of `circ` and accumulates the
 * per-class totals; `depth` is the IR-level schedule depth.
 */
GateCounts transpile_count(const Circuit& circ);

}  // namespace pbe
