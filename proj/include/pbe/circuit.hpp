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
 * @file circuit.hpp
 * @brief Gate-level intermediate representation for block-encoding circuits.
 *
 * The IR is deliberately small: every gate is one of {H, X, Y, Phase(theta)}
 * acting on a single target qubit, optionally decorated with a list of
 * control qubits, each with an explicit polarity (control on |1> or on |0>).
 * Controlled sub-circuits are represented in flattened normal form: applying
 * controls to a circuit merges the control list onto every gate, which is
 * unitarily equivalent to controlling the whole block.
 *
 * Qubit indices are little-endian: qubit q contributes 2^q to a basis index.
 */

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbe {

/** Gate alphabet. Phase is diag(1, e^{i*theta}); H, X, Y are the usual ones. */
enum class GateKind { H, X, Y, Phase };

/** A single control wire: the gate fires when `qubit` is in state |polarity>. */
struct Control {
  int qubit = 0;
  int polarity = 1;  // 1 = control on |1> (solid dot), 0 = control on |0>.

  friend bool operator==(const Control&, const Control&) = default;
};

/**
 * One gate of the IR. `angle` is meaningful only for GateKind::Phase.
 * An empty `controls` vector means the gate is applied unconditionally.
 */
struct Gate {
  GateKind kind = GateKind::X;
  int target = 0;
  double angle = 0.0;
  std::vector<Control> controls;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/** Convenience constructors for bare gates. */
inline Gate h(int target) { return Gate{GateKind::H, target, 0.0, {}}; }
inline Gate x(int target) { return Gate{GateKind::X, target, 0.0, {}}; }
inline Gate y(int target) { return Gate{GateKind::Y, target, 0.0, {}}; }
inline Gate phase(int target, double angle) {
  return Gate{GateKind::Phase, target, angle, {}};
}
/** CNOT is an X gate with a single positive control. */
inline Gate cx(int control, int target) {
  return Gate{GateKind::X, target, 0.0, {Control{control, 1}}};
}

/**
 * A quantum circuit: an ordered gate list over `num_qubits` wires.
 * Gates are applied in list order (index 0 first).
 */
struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {
    if (n < 0) throw std::invalid_argument("Circuit: negative qubit count");
  }

  void add(Gate g) {
    check_gate(g);
    gates.push_back(std::move(g));
  }

  /** Append every gate of `other` (qubit indices must already agree). */
  void append(const Circuit& other) {
    if (other.num_qubits > num_qubits)
      throw std::invalid_argument("Circuit::append: sub-circuit too wide");
    for (const Gate& g : other.gates) add(g);
  }

  std::size_t size() const { return gates.size(); }

  /** Throws std::invalid_argument if any gate references an invalid wire. */
  void check_gate(const Gate& g) const {
    if (g.target < 0 || g.target >= num_qubits)
      throw std::invalid_argument("Gate: target out of range");
    for (const Control& c : g.controls) {
      if (c.qubit < 0 || c.qubit >= num_qubits)
        throw std::invalid_argument("Gate: control out of range");
      if (c.qubit == g.target)
        throw std::invalid_argument("Gate: control equals target");
      if (c.polarity != 0 && c.polarity != 1)
        throw std::invalid_argument("Gate: control polarity must be 0 or 1");
    }
    for (std::size_t i = 0; i < g.controls.size(); ++i)
      for (std::size_t j = i + 1; j < g.controls.size(); ++j)
        if (g.controls[i].qubit == g.controls[j].qubit)
          throw std::invalid_argument("Gate: duplicate control qubit");
  }
};

/** Returns a copy of `g` with extra controls merged onto its control list. */
Gate controlled(const Gate& g, const std::vector<Control>& extra);

/**
 * Returns `circ` in flattened controlled form: every gate gains `extra`
 * controls. The result acts as identity unless all controls match, in which
 * case it acts as `circ`; this requires that `circ` fixes |0...0> up to the
 * gates listed (true for any unitary when controls are merged gate-wise).
 * Width grows to cover the control wires if needed.
 */
Circuit controlled(const Circuit& circ, const std::vector<Control>& extra);

/**
 * The exact circuit inverse: gates reversed, H/X/Y self-inverse,
 * Phase(theta) -> Phase(-theta). Control lists are preserved.
 */
Circuit adjoint(const Circuit& circ);

/**
 * Relabels every wire of `circ` by +offset inside a register of `new_width`
 * qubits (identity on the remaining wires).
 */
Circuit shifted(const Circuit& circ, int offset, int new_width);

/**
 * Relabels exactly one wire (`from` -> `to`) inside a register of
 * `new_width` qubits; all other wires keep their indices.
 */
Circuit remap_qubit(const Circuit& circ, int from, int to, int new_width);

/**
 * Appends a global-phase pair on `qubit`: X P(theta) X P(theta), which equals
 * e^{i*theta} * Identity. Used to realise scalar phase factors with gates
 * from the {H, X, Y, Phase} alphabet.
 */
void add_global_phase(Circuit& circ, int qubit, double theta);

/**
 * Appends the five-gate compound P(pi/2) H P(beta) H P(-pi/2) on `target`
 * (listed in matrix order; emitted right factor first). The compound equals
 * e^{i*beta/2} * Ry(beta); callers are responsible for compensating the
 * accumulated e^{i*beta/2} factors, e.g. with add_global_phase.
 */
void add_ry_compound(Circuit& circ, int target, double beta);

}  // namespace pbe
