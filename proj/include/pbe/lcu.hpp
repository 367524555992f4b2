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
 * @file lcu.hpp
 * @brief Linear-combination-of-unitaries assembly: PREP / SELECT / PREP^dag.
 *
 * Terms carry circuits already placed on the "inner" register (work qubits
 * plus any encoding ancillas the term needs, e.g. the sinusoid ancilla of a
 * cosine block). The assembler appends a data register above the inner one,
 * prepares sqrt(w_j / alpha) amplitudes on it, applies each term controlled
 * on its binary pattern (negative signs become a pattern-selected -1 phase),
 * and unprepares. The result block-encodes sum_j s_j w_j B_j with
 * subnormalisation alpha = sum_j w_j, where B_j is the term's own encoded
 * block on the work register.
 */

#include <vector>

#include "pbe/block_encoding.hpp"
#include "pbe/circuit.hpp"
#include "pbe/diag_encodings.hpp"

namespace pbe {

/** One LCU term: weight >= 0, sign in {+1, -1}, placed inner circuit. */
struct LcuTerm {
  double weight = 0.0;
  int sign = +1;
  Circuit circuit;  // Width must equal n_work + n_anc_inner of the assembly.
};

/**
 * State preparation for nonnegative weights: a binary tree of multiplexed
 * Ry rotations on ceil(log2(J)) qubits mapping |0...0> to
 * sum_j sqrt(w_j / alpha) |j>. Exact (up to floating point) for any
 * nonnegative weights with a positive sum; zero-padded beyond J.
 */
Circuit build_prep(const std::vector<double>& weights);

/**
 * PREP / SELECT / PREP^dag assembly over terms on an inner register of
 * n_work + n_anc_inner qubits. Zero-weight terms are dropped before the
 * data register is sized. Throws if no terms survive or widths disagree.
 */
BlockEncoding assemble_lcu(int n_work, int n_anc_inner,
                           std::vector<LcuTerm> terms);

/**
 * Banded-periodic operator alpha_0 s_0 C(omega, phi) + alpha_1 s_1 L +
 * alpha_2 s_2 R + alpha_3 s_3 I on N = 2^n points (L, R the cyclic shifts).
 */
struct BandedSpec {
  SinusoidSpec sinusoid;
  double weights[4] = {0, 0, 0, 0};  // C, L, R, I.
  int signs[4] = {+1, +1, +1, +1};
  UcVariant uc_variant = UcVariant::CnotConjugation;
};

/** Pre: n >= 2 (the shift pair is degenerate on a two-point ring). */
BlockEncoding build_banded(int n, const BandedSpec& spec);

/**
 * Two-frequency diagonal extension: alpha_0 s_0 C(omega_1, phi_1) +
 * alpha_1 s_1 L + alpha_2 s_2 R + alpha_3 s_3 C(omega_2, phi_2); the two
 * cosine encodings keep their own ancillas, the second selected by the
 * doubly-set data pattern.
 */
struct TwoFrequencySpec {
  SinusoidSpec first;    // Cosine at data pattern 00.
  SinusoidSpec second;   // Cosine at data pattern 11.
  double weights[4] = {0, 0, 0, 0};  // C(first), L, R, C(second).
  int signs[4] = {+1, +1, +1, +1};
  UcVariant uc_variant = UcVariant::CnotConjugation;
};

BlockEncoding build_two_frequency(int n, const TwoFrequencySpec& spec);

/** One Fourier harmonic: index n >= 1, cosine and sine coefficients. */
struct FourierTerm {
  int harmonic = 1;
  double a = 0.0;  // Coefficient of cos(2 pi harmonic k / period).
  double b = 0.0;  // Coefficient of sin(2 pi harmonic k / period).
};

/**
 * Truncated Fourier series of a real period-T function sampled on the grid:
 * f(k) = a0/2 + sum_n [ a_n cos(2 pi n k / T) + b_n sin(2 pi n k / T) ].
 * Pre: at least one harmonic, or a0 != 0.
 */
struct FourierSpec {
  double a0 = 0.0;
  double period = 1.0;  // T, in grid-index units.
  std::vector<FourierTerm> terms;
  UcVariant uc_variant = UcVariant::CnotConjugation;
};

/**
 * Block encoding of diag_k f(k): an LCU of the identity (weight |a0/2|)
 * and one cosine / sine encoding per nonzero coefficient, at grid frequency
 * 2 pi n / T. All sinusoid terms share a single encoding ancilla (the
 * selected branches act on orthogonal data patterns, so sharing is sound);
 * alpha = |a0/2| + sum_n (|a_n| + |b_n|).
 */
BlockEncoding build_fourier_diagonal(int n, const FourierSpec& spec);

}  // namespace pbe
