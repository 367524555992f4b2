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

#include "pbe/qsvt.hpp"

#include <cmath>

namespace pbe {

namespace {

/**
 * Projector-controlled phase e^{i phi (2 Pi - I)}, Pi = |flag><flag| on the
 * encoding ancillas: flip the gadget wire when the ancillas match the flag,
 * apply diag(e^{-i phi}, e^{i phi}) there, flip back. The gadget wire
 * always returns to |0>.
 */
void add_projector_phase(Circuit& circ, const BlockEncoding& be,
                         int gadget_wire, double phi) {
  Gate flip = x(gadget_wire);
  for (int a = 0; a < be.n_anc; ++a)
    flip.controls.push_back(
        Control{be.n_work + a, static_cast<int>((be.flag >> a) & 1)});

  circ.add(flip);
  circ.add(phase(gadget_wire, 2 * phi));
  circ.add(x(gadget_wire));
  circ.add(phase(gadget_wire, -phi));
  circ.add(x(gadget_wire));
  circ.add(phase(gadget_wire, -phi));
  circ.add(flip);
}

}  // namespace

PhaseFactors negated(const PhaseFactors& phases) {
  PhaseFactors out = phases;
  out.angles = -phases.angles;
  return out;
}

Circuit build_qsvt_circuit(const BlockEncoding& be,
                           const PhaseFactors& phases) {
  be.check();
  const int d = phases.degree();
  const int gadget_wire = be.total_qubits();
  Circuit circ(gadget_wire + 1);

  // Wx phases -> reflection phases: -pi/2 on every angle, +pi/4 restored at
  // the two ends, global i^d compensated at the close.
  const auto tilde = [&](int j) {
    double t = phases.angles[j] - M_PI / 2;
    if (j == 0) t += M_PI / 4;
    if (j == d) t += M_PI / 4;
    return t;
  };

  const Circuit u_adj = adjoint(be.circuit);
  add_projector_phase(circ, be, gadget_wire, tilde(d));
  for (int t = 1; t <= d; ++t) {
    circ.append((t % 2 == 1) ? be.circuit : u_adj);
    add_projector_phase(circ, be, gadget_wire, tilde(d - t));
  }
  const double global = d * (M_PI / 2);
  if (std::remainder(global, 2 * M_PI) != 0.0)
    add_global_phase(circ, gadget_wire, global);
  return circ;
}

BlockEncoding qsvt_encoding(const BlockEncoding& be,
                            const PhaseFactors& phases) {
  BlockEncoding out;
  out.circuit = build_qsvt_circuit(be, phases);
  out.n_work = be.n_work;
  out.n_anc = be.n_anc + 1;
  out.alpha = 1.0;
  out.flag = be.flag;  // Gadget wire contributes a zero bit above.
  out.check();
  return out;
}

BlockEncoding qsvt_real_encoding(const BlockEncoding& be,
                                 const PhaseFactors& phases) {
  const Circuit plus = build_qsvt_circuit(be, phases);
  const Circuit minus = build_qsvt_circuit(be, negated(phases));
  const int inner = be.total_qubits() + 1;  // Includes the gadget wire.
  const int combine = inner;
  Circuit circ(inner + 1);

  circ.add(h(combine));
  circ.append(controlled(plus, {Control{combine, 0}}));
  circ.append(controlled(minus, {Control{combine, 1}}));
  circ.add(h(combine));

  BlockEncoding out;
  out.circuit = std::move(circ);
  out.n_work = be.n_work;
  out.n_anc = be.n_anc + 2;
  out.alpha = 1.0;  // Block is Re P(A/alpha) itself.
  out.flag = be.flag;
  out.check();
  return out;
}

BlockEncoding qsvt_exp_encoding(const BlockEncoding& be,
                                const PhaseFactors& even,
                                const PhaseFactors* odd) {
  if (!odd) return qsvt_real_encoding(be, even);

  const int inner = be.total_qubits() + 1;
  const int c0 = inner, c1 = inner + 1;
  Circuit circ(inner + 2);

  circ.add(h(c0));
  circ.add(h(c1));
  const PhaseFactors* branch_phases[4] = {&even, nullptr, odd, nullptr};
  const PhaseFactors even_neg = negated(even);
  const PhaseFactors odd_neg = negated(*odd);
  branch_phases[1] = &even_neg;
  branch_phases[3] = &odd_neg;
  for (int b = 0; b < 4; ++b) {
    const Circuit qsvt = build_qsvt_circuit(be, *branch_phases[b]);
    circ.append(controlled(
        qsvt, {Control{c0, b & 1}, Control{c1, (b >> 1) & 1}}));
  }
  circ.add(h(c0));
  circ.add(h(c1));

  BlockEncoding out;
  out.circuit = std::move(circ);
  out.n_work = be.n_work;
  out.n_anc = be.n_anc + 3;
  out.alpha = 2.0;  // Block is (Re P_e + Re P_o) / 2.
  out.flag = be.flag;
  out.check();
  return out;
}

}  // namespace pbe
