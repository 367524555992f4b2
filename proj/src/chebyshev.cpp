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

#include "pbe/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pbe {

double cheb_eval(const ChebyshevPoly& p, double x) {
  // Clenshaw recurrence, numerically stable for |x| <= 1.
  double b1 = 0.0, b2 = 0.0;
  for (int d = p.degree(); d >= 1; --d) {
    const double b0 = 2 * x * b1 - b2 + p.coeffs[d];
    b2 = b1;
    b1 = b0;
  }
  if (p.coeffs.size() == 0) return 0.0;
  return x * b1 - b2 + p.coeffs[0];
}

namespace {

Eigen::VectorXd trim(const Eigen::VectorXd& c) {
  int last = static_cast<int>(c.size()) - 1;
  while (last > 0 && c[last] == 0.0) --last;
  return c.head(last + 1);
}

double grid_max_abs(const ChebyshevPoly& p) {
  double m = 0.0;
  constexpr int kGrid = 2001;
  for (int i = 0; i < kGrid; ++i) {
    const double x = -1.0 + 2.0 * i / (kGrid - 1);
    m = std::max(m, std::abs(cheb_eval(p, x)));
  }
  return m;
}

/**
 * log of the binomial pmf at m successes of 2b fair coin flips,
 * log C(2b, m) - 2b log 2, evaluated through lgamma for stability.
 */
double log_binom_pmf(double b2, double m) {
  return std::lgamma(b2 + 1) - std::lgamma(m + 1) - std::lgamma(b2 - m + 1) -
         b2 * std::log(2.0);
}

ChebyshevPoly make_inverse(double kappa, double epsilon) {
  if (!(kappa > 1))
    throw std::invalid_argument("approx_poly: inverse target needs kappa > 1");

  // Binomial window width: larger b narrows the smoothing of 1/x near the
  // origin; the classical bound gives accuracy epsilon on |x| >= 1/kappa.
  const double b_real = std::ceil(kappa * kappa * std::log(kappa / epsilon));
  const std::int64_t b = static_cast<std::int64_t>(b_real);

  // Odd Chebyshev coefficients: c_{2j+1} = 4 (-1)^j Pr[X >= b+j+1] / (2 kappa)
  // with X ~ Binomial(2b, 1/2). Tails are summed top-down from the largest
  // index so exact zeros (underflow) terminate the series naturally.
  const std::int64_t jmax = b;  // Pr[X >= 2b+1] = 0.
  std::vector<double> pmf(static_cast<std::size_t>(jmax) + 1);
  for (std::int64_t j = 0; j <= jmax; ++j) {
    const double lp = log_binom_pmf(2.0 * static_cast<double>(b),
                                    static_cast<double>(b + j + 1));
    pmf[static_cast<std::size_t>(j)] = std::exp(lp);
  }
  std::vector<double> tail(pmf.size() + 1, 0.0);
  for (std::int64_t j = jmax; j >= 0; --j)
    tail[static_cast<std::size_t>(j)] =
        tail[static_cast<std::size_t>(j) + 1] + pmf[static_cast<std::size_t>(j)];

  // Truncate where the remaining coefficient magnitudes fall below an
  // absolute tail of 1e-12 (below double-precision relevance; epsilon only
  // governs b).
  constexpr double kTail = 1e-12;
  std::vector<double> mags(pmf.size());
  for (std::size_t j = 0; j < pmf.size(); ++j)
    mags[j] = 4.0 * tail[j] / (2.0 * kappa);
  double remaining = 0.0;
  std::size_t j0 = pmf.size();
  for (std::size_t j = pmf.size(); j-- > 0;) {
    remaining += mags[j];
    if (remaining > kTail) {
      j0 = j + 1;
      break;
    }
    j0 = j;
  }
  if (j0 == 0) j0 = 1;

  ChebyshevPoly p;
  p.coeffs = Eigen::VectorXd::Zero(2 * static_cast<Eigen::Index>(j0));
  for (std::size_t j = 0; j < j0; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    p.coeffs[2 * static_cast<Eigen::Index>(j) + 1] =
        sign * 4.0 * tail[j] / (2.0 * kappa);
  }
  p.coeffs = trim(p.coeffs);
  p.parity = Parity::Odd;
  p.scale = 1.0 / (2.0 * kappa);

  // Keep strictly inside the QSP-representable band.
  const double m = grid_max_abs(p);
  if (m > 0.99) {
    const double r = 0.99 / m;
    p.coeffs *= r;
    p.scale *= r;
  }
  return p;
}

ChebyshevPoly make_exp(double tau, double epsilon) {
  // Target on the shifted spectrum y in [-1, 1]: q(y) = exp(tau (y-1)/2)/2,
  // bounded by 1/2. Coefficients by midpoint-rule Chebyshev projection.
  const double theta = std::abs(tau) / 2.0;
  const int dmax = static_cast<int>(theta + 10.0 * std::sqrt(theta + 4.0) + 20.0);
  const int samples = std::max(512, 8 * dmax);

  Eigen::VectorXd c = Eigen::VectorXd::Zero(dmax + 1);
  for (int d = 0; d <= dmax; ++d) {
    double acc = 0.0;
    for (int m = 0; m < samples; ++m) {
      const double ang = (m + 0.5) * M_PI / samples;
      const double y = std::cos(ang);
      acc += 0.5 * std::exp(tau * (y - 1.0) / 2.0) * std::cos(d * ang);
    }
    c[d] = 2.0 * acc / samples;
  }
  c[0] /= 2.0;

  // Drop the exponentially decaying tail below the tolerance.
  const double tol = std::min(1e-10, std::max(epsilon, 1e-13));
  int last = dmax;
  double run = 0.0;
  for (; last >= 1; --last) {
    run += std::abs(c[last]);
    if (run > tol) break;
  }
  ChebyshevPoly p;
  p.coeffs = c.head(last + 1);
  p.parity = Parity::None;
  p.scale = 0.5;  // p approximates (1/2) e^{tau (y-1)/2}.
  return p;
}

}  // namespace

ChebyshevPoly approx_poly(const PolyTarget& target, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5))
    throw std::invalid_argument("approx_poly: epsilon must lie in (0, 0.5)");
  switch (target.kind) {
    case PolyTarget::Kind::Inverse:
      return make_inverse(target.parameter, epsilon);
    case PolyTarget::Kind::Exp:
      return make_exp(target.parameter, epsilon);
  }
  throw std::logic_error("approx_poly: unreachable");
}

std::pair<ChebyshevPoly, ChebyshevPoly> parity_split(const ChebyshevPoly& p) {
  Eigen::VectorXd even = Eigen::VectorXd::Zero(p.coeffs.size());
  Eigen::VectorXd odd = Eigen::VectorXd::Zero(p.coeffs.size());
  for (int d = 0; d <= p.degree(); ++d)
    (d % 2 == 0 ? even : odd)[d] = p.coeffs[d];

  ChebyshevPoly pe, po;
  pe.coeffs = trim(even);
  pe.parity = Parity::Even;
  pe.scale = p.scale;
  po.coeffs = trim(odd);
  po.parity = Parity::Odd;
  po.scale = p.scale;
  // A trimmed all-zero part keeps a single zero coefficient; callers treat
  // degree 0 with zero value as an absent branch.
  return {pe, po};
}

}  // namespace pbe
