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
 * @file qsvt.hpp
 * @brief Singular-value transformation circuits from block encodings and
 *        phase factors.
 *
 * The core circuit alternates the encoding unitary with its adjoint,
 * interleaved with projector-controlled phase gadgets
 * e^{i phi (2 Pi - I)} (Pi projecting the encoding ancillas onto the flag
 * state), realised with one extra ancilla. Phases in the Wx convention are
 * converted to reflection phases internally via
 * W(x) = i E(-pi/4) R(x) E(-pi/4): subtract pi/2 everywhere, add pi/4 back
 * at both ends, and compensate a global i^degree. For a Hermitian encoded
 * block A/alpha the flag block of the result is the full complex QSP
 * response P(A/alpha); the real-part combiners below cancel the imaginary
 * component using P_{-Phi} = conj(P_Phi).
 */

#include "pbe/block_encoding.hpp"
#include "pbe/qsp.hpp"

namespace pbe {

/** Phase factors with all angles negated (conjugate response). */
PhaseFactors negated(const PhaseFactors& phases);

/**
 * The raw transform circuit on be.total_qubits() + 1 wires (the extra wire,
 * index be.total_qubits(), hosts the projector gadgets and returns to |0>).
 */
Circuit build_qsvt_circuit(const BlockEncoding& be,
                           const PhaseFactors& phases);

/**
 * BlockEncoding view of the raw transform: flag block is the complex
 * response P(A/alpha) for Hermitian A/alpha; alpha of the result is 1
 * (the response is already the dimensionless polynomial value).
 */
BlockEncoding qsvt_encoding(const BlockEncoding& be,
                            const PhaseFactors& phases);

/**
 * Real part of the response: a two-branch combine (H, controlled transforms
 * with Phi and -Phi, H) whose flag block is Re P(A/alpha) exactly.
 */
BlockEncoding qsvt_real_encoding(const BlockEncoding& be,
                                 const PhaseFactors& phases);

/**
 * Even/odd split evolution: four branches {Phi_e, -Phi_e, Phi_o, -Phi_o}
 * under a two-qubit uniform combine. The flag block is
 * (Re P_e + Re P_o)(A/alpha) / 2, i.e. alpha = 2 relative to the summed
 * target. Pass odd = nullptr when the odd part vanishes (then the block is
 * Re P_e and alpha = 1).
 */
BlockEncoding qsvt_exp_encoding(const BlockEncoding& be,
                                const PhaseFactors& even,
                                const PhaseFactors* odd);

}  // namespace pbe
