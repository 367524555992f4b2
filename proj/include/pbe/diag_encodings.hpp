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
 * @file diag_encodings.hpp
 * @brief Circuits for diagonal operators with sinusoidal entries.
 *
 * The workhorse is the phase ladder V(omega, phi) = e^{i phi} *
 * diag_k(e^{i omega k}), realised with one Phase gate per work qubit
 * (P(2^q * omega) on qubit q); the scalar e^{i phi} is tracked by callers.
 * From V one obtains single-ancilla block encodings of
 *   C(omega, phi) = diag_k(cos(omega k + phi))   and
 *   S(omega, phi) = diag_k(sin(omega k + phi))
 * in two interchangeable layouts (an ancilla-selected ladder pair, and a
 * CNOT-conjugation form whose gate count is linear in the qubit count with
 * a single ancilla-phase correction).
 */

#include <Eigen/Dense>

#include "pbe/block_encoding.hpp"
#include "pbe/circuit.hpp"

namespace pbe {

/** Parameters of the sinusoid diag_k cos/sin(omega k + phi). */
struct SinusoidSpec {
  double omega = 0.0;
  double phi = 0.0;
};

/** Which realisation of the cosine block encoding to build. */
enum class UcVariant { Select, CnotConjugation };

/**
 * Phase ladder for diag_k(e^{i omega k}) on n work qubits: exactly n Phase
 * gates, P(2^q * omega) on qubit q. The spec's phi contributes only a global
 * scalar e^{i phi} and is NOT emitted here; block-encoding callers fold it
 * into their ancilla bookkeeping.
 */
Circuit build_V(int n, const SinusoidSpec& spec);

/**
 * Pruned ladder: angles are folded to (-pi, pi] per qubit and dropped
 * greedily in ascending folded magnitude while the accumulated magnitude
 * stays within eps. Guarantees ||V_t - V||_2 <= eps (spectral norm; the
 * bound max_k |e^{i delta k} - 1| <= sum of dropped |angles| is used).
 */
Circuit truncate_V(int n, const SinusoidSpec& spec, double eps);

/**
 * Single-ancilla block encoding of C(omega, phi) = diag_k(cos(omega k + phi))
 * on n >= 1 work qubits; ancilla is qubit n, alpha = 1, flag = 0.
 *
 * Select variant: H on the ancilla, a 0-controlled V(2 omega) ladder, the
 * phi offset on the ancilla, an uncontrolled V(-omega) ladder, H.
 * CnotConjugation variant: H, CNOT fan-out from the ancilla, V(omega),
 * fan-out again, one ancilla Phase correction of -( (2^n - 1) omega + 2 phi ),
 * H. At phi = 0 the total gate count is exactly 3n + 3.
 */
BlockEncoding build_UC(int n, const SinusoidSpec& spec,
                       UcVariant variant = UcVariant::CnotConjugation);

/**
 * Block encoding of S(omega, phi) = diag_k(sin(omega k + phi)): build_UC
 * followed by Y on the ancilla. The flag block is S; the |1><0| ancilla
 * block equals i * C(omega, phi).
 */
BlockEncoding build_US(int n, const SinusoidSpec& spec,
                       UcVariant variant = UcVariant::CnotConjugation);

/**
 * Closed-form ancilla success probability for U_C acting on the work state
 * with amplitudes `coeffs` at phi = 0:
 *   p0 = sum_k |c_k|^2 cos^2(omega k) = 1/2 + 1/2 sum_k |c_k|^2 cos(2 omega k).
 * Pre: coeffs normalised to 1 within 1e-9 (throws otherwise).
 */
double p0_closed_form(const Eigen::VectorXcd& coeffs, double omega);

/**
 * Dense single-ancilla baseline encoding of an arbitrary diagonal
 * diag(values) with |values[k]| <= 1: a uniformly controlled Ry on the
 * ancilla (Gray-code multiplexer), exact up to floating point, alpha = 1.
 * Gate cost is Theta(2^n), the yardstick the structured ladders beat.
 */
BlockEncoding build_dense_baseline(const Eigen::VectorXd& values);

/**
 * Gray-code multiplexed rotation helper: appends gates applying
 * e^{i gamma} Ry(beta_j) (for a single branch-uniform gamma that the helper
 * also cancels) to `target`, selected by the binary value of `controls`
 * (little-endian; controls.size() = log2(betas.size())). Exposed for the
 * state-preparation builders.
 */
void add_multiplexed_ry(Circuit& circ, int target,
                        const std::vector<int>& controls,
                        const std::vector<double>& betas);

}  // namespace pbe
