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

#include "pbe/simulate.hpp"

#include <cstdlib>
#include <string>

namespace pbe {

StateVector basis_state(int num_qubits, std::int64_t basis_index) {
  if (num_qubits < 0 || num_qubits > kMaxStateQubits)
    throw std::length_error("basis_state: qubit count out of range");
  StateVector s(num_qubits);
  if (basis_index < 0 || basis_index >= s.dim())
    throw std::invalid_argument("basis_state: index out of range");
  s.amps[basis_index] = 1.0;
  return s;
}

int max_unitary_qubits() {
  if (const char* env = std::getenv("PBE_MAX_QUBITS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1 && v <= kMaxStateQubits) return v;
    } catch (...) {
      // Fall through to the default on unparsable values.
    }
  }
  return 12;
}

namespace {

/** 2x2 matrix of a bare gate, row-major {m00, m01, m10, m11}. */
void gate_matrix(const Gate& g, cplx m[4]) {
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  switch (g.kind) {
    case GateKind::H:
      m[0] = inv_sqrt2; m[1] = inv_sqrt2;
      m[2] = inv_sqrt2; m[3] = -inv_sqrt2;
      break;
    case GateKind::X:
      m[0] = 0; m[1] = 1;
      m[2] = 1; m[3] = 0;
      break;
    case GateKind::Y:
      m[0] = 0; m[1] = cplx(0, -1);
      m[2] = cplx(0, 1); m[3] = 0;
      break;
    case GateKind::Phase:
      m[0] = 1; m[1] = 0;
      m[2] = 0; m[3] = std::polar(1.0, g.angle);
      break;
  }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& g) {
  if (g.target < 0 || g.target >= state.num_qubits)
    throw std::invalid_argument("apply_gate: target out of range");

  cplx m[4];
  gate_matrix(g, m);

  // Bit masks: indices with all positive-polarity controls set and all
  // negative-polarity controls clear participate; everything else is fixed.
  std::int64_t ones_mask = 0, ctrl_mask = 0;
  for (const Control& c : g.controls) {
    if (c.qubit < 0 || c.qubit >= state.num_qubits)
      throw std::invalid_argument("apply_gate: control out of range");
    ctrl_mask |= std::int64_t{1} << c.qubit;
    if (c.polarity) ones_mask |= std::int64_t{1} << c.qubit;
  }
  const std::int64_t tmask = std::int64_t{1} << g.target;
  const std::int64_t dim = state.dim();

  for (std::int64_t i = 0; i < dim; ++i) {
    if (i & tmask) continue;                    // Visit each pair once.
    if ((i & ctrl_mask) != ones_mask) continue;  // Controls not satisfied.
    const cplx a0 = state.amps[i];
    const cplx a1 = state.amps[i | tmask];
    state.amps[i] = m[0] * a0 + m[1] * a1;
    state.amps[i | tmask] = m[2] * a0 + m[3] * a1;
  }
}

void apply_circuit(StateVector& state, const Circuit& circ) {
  if (circ.num_qubits != state.num_qubits)
    throw std::invalid_argument("apply_circuit: width mismatch");
  for (const Gate& g : circ.gates) apply_gate(state, g);
}

StateVector run_on_basis(const Circuit& circ, std::int64_t basis_index) {
  StateVector s = basis_state(circ.num_qubits, basis_index);
  apply_circuit(s, circ);
  return s;
}

UnitaryMatrix unitary_of(const Circuit& circ) {
  if (circ.num_qubits > max_unitary_qubits())
    throw std::length_error(
        "unitary_of: circuit exceeds the unitary extraction cap (set "
        "PBE_MAX_QUBITS to raise it)");
  const std::int64_t dim = std::int64_t{1} << circ.num_qubits;
  UnitaryMatrix u(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    StateVector s = run_on_basis(circ, col);
    u.col(col) = s.amps;
  }
  return u;
}

bool is_unitary(const UnitaryMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  UnitaryMatrix residual = u * u.adjoint();
  residual -= UnitaryMatrix::Identity(u.rows(), u.cols());
  return residual.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace pbe
