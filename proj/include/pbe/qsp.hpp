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
 * @file qsp.hpp
 * @brief Quantum signal processing phase factors in the Wx convention.
 *
 * For phases (phi_0, ..., phi_d) the response is
 *   U(x) = e^{i phi_0 Z} prod_{j=1..d} [ W(x) e^{i phi_j Z} ],
 *   W(x) = [[x, i sqrt(1-x^2)], [i sqrt(1-x^2), x]],
 * and Re<0|U(x)|0> realises a definite-parity degree-d Chebyshev expansion.
 * All-zero phases give exactly T_d(x).
 */

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "pbe/chebyshev.hpp"

namespace pbe {

struct PhaseFactors {
  Eigen::VectorXd angles;  // phi_0 ... phi_d.
  Parity parity = Parity::Odd;
  double residual = 0.0;   // Final max-norm value-matching residual.

  int degree() const { return static_cast<int>(angles.size()) - 1; }

  /** JSON document {degree, parity, angles[]}. */
  std::string to_json_string() const;
  static PhaseFactors from_json_string(const std::string& text);
};

/** Re<0|U(x)|0> for the given phases. Pre: |x| <= 1. */
double qsp_eval_scalar(const PhaseFactors& phases, double x);

/** Full complex response <0|U(x)|0>, used by the transform circuits. */
std::complex<double> qsp_eval_complex(const PhaseFactors& phases, double x);

/**
 * Solves for symmetric phase factors reproducing the definite-parity
 * Chebyshev polynomial `poly` (coefficient sup-norm bounded away from 1;
 * pre: max |p| <= 1 - 1e-6 on [-1, 1]). Damped Newton iteration on the
 * value-matching system at d~ = ceil((d+1)/2) Chebyshev nodes; converges
 * to max residual < 1e-13 in a handful of steps for the targets produced
 * by approx_poly. Throws std::runtime_error with the residual in the
 * message if the iteration stalls.
 */
PhaseFactors qsp_phases(const ChebyshevPoly& poly);

}  // namespace pbe
