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
 * @file simulate.hpp
 * @brief Dense statevector simulation of the gate IR.
 *
 * Controls are honoured natively in the amplitude loops (no decomposition),
 * so simulation cost per gate is O(2^n) regardless of the control count.
 * Basis ordering is little-endian: amplitude index k has qubit q in state
 * bit q of k.
 */

#include <Eigen/Dense>
#include <complex>

#include "pbe/circuit.hpp"

namespace pbe {

using cplx = std::complex<double>;

/** Column-major complex matrix used for dense unitaries and blocks. */
using UnitaryMatrix = Eigen::MatrixXcd;

/** Normalised (or intermediate) quantum state over `num_qubits` wires. */
struct StateVector {
  int num_qubits = 0;
  Eigen::VectorXcd amps;

  StateVector() = default;
  explicit StateVector(int n) : num_qubits(n) {
    amps = Eigen::VectorXcd::Zero(std::int64_t{1} << n);
  }

  std::int64_t dim() const { return amps.size(); }
  double norm() const { return amps.norm(); }
};

/** |basis_index> on n qubits. */
StateVector basis_state(int num_qubits, std::int64_t basis_index);

/** Largest register simulated as a statevector (guards accidental blow-ups). */
inline constexpr int kMaxStateQubits = 24;

/**
 * Largest register for full-unitary extraction. The default of 12 qubits can
 * be raised through the PBE_MAX_QUBITS environment variable.
 */
int max_unitary_qubits();

/** Applies one gate in place. Throws if the gate is malformed for the state. */
void apply_gate(StateVector& state, const Gate& g);

/** Applies all gates of `circ` in order. Widths must match exactly. */
void apply_circuit(StateVector& state, const Circuit& circ);

/** Convenience: runs `circ` on |basis_index>. */
StateVector run_on_basis(const Circuit& circ, std::int64_t basis_index = 0);

/**
 * Full 2^n x 2^n unitary of the circuit, built column by column.
 * Throws std::length_error above max_unitary_qubits().
 */
UnitaryMatrix unitary_of(const Circuit& circ);

/** Max-norm unitarity check: ||U U^dag - I||_max <= tol. */
bool is_unitary(const UnitaryMatrix& u, double tol = 1e-10);

}  // namespace pbe
