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
 * @file chebyshev.hpp
 * @brief Chebyshev approximations of the polynomial targets used by the
 *        singular-value transforms: a bounded odd proxy of 1/x away from
 *        the origin, and the shifted exponential for semigroup evolution.
 */

#include <Eigen/Dense>
#include <utility>

namespace pbe {

enum class Parity { Even, Odd, None };

/** Polynomial in the Chebyshev basis: p(x) = sum_d coeffs[d] T_d(x). */
struct ChebyshevPoly {
  Eigen::VectorXd coeffs;  // Index d multiplies T_d; trimmed of high zeros.
  Parity parity = Parity::None;
  double scale = 1.0;  // Bookkeeping: p approximates scale * target shape.

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/** Clenshaw evaluation of p(x) for |x| <= 1. */
double cheb_eval(const ChebyshevPoly& p, double x);

/** Which analytic target to approximate. */
struct PolyTarget {
  enum class Kind { Inverse, Exp } kind = Kind::Inverse;
  double parameter = 2.0;  // kappa for Inverse, tau for Exp.
};

inline PolyTarget inverse_target(double kappa) {
  return PolyTarget{PolyTarget::Kind::Inverse, kappa};
}
inline PolyTarget exp_target(double tau) {
  return PolyTarget{PolyTarget::Kind::Exp, tau};
}

/**
 * Bounded polynomial approximation of the target, |p| <= 1 on [-1, 1].
 *
 * Inverse (odd): the binomial-window construction with
 * b = ceil(kappa^2 log(kappa/epsilon)); the Chebyshev coefficients are
 * alternating scaled binomial tails, truncated at an absolute coefficient
 * tail of 1e-12 and rescaled so the grid maximum is at most 0.99. The
 * result approximates scale / x on 1/kappa <= |x| <= 1 with
 * |p(x) - scale/x| <= epsilon * scale * kappa + 1e-12.
 *
 * Exp (mixed parity): Chebyshev projection of q(y) = exp(tau (y-1)/2) / 2
 * by midpoint quadrature, coefficients truncated below 1e-10 absolute
 * (tightened to epsilon when smaller); scale = 1/2 relative to the plain
 * exponential e^{tau (y-1)/2}.
 *
 * Pre: epsilon in (0, 0.5); kappa > 1; throws std::invalid_argument
 * otherwise.
 */
ChebyshevPoly approx_poly(const PolyTarget& target, double epsilon);

/**
 * Splits a mixed-parity polynomial into its even and odd parts (each
 * trimmed so the leading coefficient is nonzero and matches the parity).
 */
std::pair<ChebyshevPoly, ChebyshevPoly> parity_split(const ChebyshevPoly& p);

}  // namespace pbe
