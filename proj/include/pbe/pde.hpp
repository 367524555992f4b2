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
 * @file pde.hpp
 * @brief Periodic finite-difference model problems, their LCU encodings,
 *        and the classical reference solvers.
 *
 * Two families are covered on a periodic 1-D grid:
 *  - the elliptic problem -D u'' + a(x) u = f with a(x) = a0 + cos(omega_x x)
 *    on (0, 1), nodes x_j = j h - h, h = 1/N;
 *  - advection-diffusion-reaction evolution du/dt = M u, either with a
 *    periodic reaction coefficient (constant advection c) or with a periodic
 *    velocity c(x) = sin(omega x) and constant reaction.
 */

#include <Eigen/Dense>
#include <vector>

#include "pbe/block_encoding.hpp"
#include "pbe/lcu.hpp"
#include "pbe/simulate.hpp"

namespace pbe {

/** -D u'' + a(x) u = f, periodic on (0,1); a(x) = a0 + cos(omega_x x). */
struct EllipticSpec {
  double D = 1.0;        // Diffusion constant.
  double a0 = 1.5;       // Reaction offset; must exceed 1.
  double omega_x = 2.0;  // Spatial reaction frequency (radians per length).
  int N = 8;             // Grid size, a power of two; h = 1/N.

  void check() const;
};

/**
 * Stiffness matrix exactly as discretised: (D/h^2) * (2I - L - R with
 * wrap-around corners) + diag(a_j), a_j = a0 + cos(omega_x * x_j),
 * x_j = j h - h for j = 1..N.
 */
Eigen::MatrixXd build_elliptic_matrix(const EllipticSpec& spec);

/**
 * The four-term banded LCU of the elliptic matrix: weights
 * {1, D/h^2, D/h^2, 2D/h^2 + a0} with signs {+,-,-,+}, grid frequency
 * omega = omega_x * h and phase 0 (the node offset x_j = jh - h makes
 * cos(omega_x x_j) = cos((j-1) omega_x h), i.e. a zero-phase ladder),
 * so that alpha * extract_block(build_banded(...)) reproduces the matrix.
 */
BandedSpec elliptic_lcu(const EllipticSpec& spec);

/**
 * Block encoding of the elliptic matrix / alpha. Uses build_banded for
 * N >= 4; at the degenerate N = 2 the shifts coincide and their weights
 * merge into a single off-diagonal term.
 */
BlockEncoding build_elliptic_encoding(const EllipticSpec& spec);

enum class AdrVariant { Reaction, Velocity };

/**
 * Advection-diffusion-reaction spec on a ring of length `length` with N
 * nodes x_i = i * dx, dx = length / N.
 *
 * Reaction variant: du/dt = D u'' - c u' - a(x) u with
 * a(x) = a0 + sum of harmonics (period = domain length).
 * Velocity variant: du/dt = D u'' - (c(x) u)' - a0 u with
 * c(x) = sin(omega_vel x); the expanded advection contributes the effective
 * reaction a0 + omega_vel cos(omega_vel x).
 */
struct AdrSpec {
  double D = 0.2;
  double c = 0.0;     // Constant advection speed (reaction variant).
  double a0 = 0.1;    // Mean reaction value.
  std::vector<FourierTerm> harmonics;  // Reaction profile around a0.
  double omega_vel = 0.0;  // Velocity-variant frequency (radians per length).
  double length = 16.0;
  int N = 16;
  double dt = 0.5;    // Step for the forward-Euler cross-checks.

  double dx() const { return length / N; }
  double tau_d() const { return dx() * dx() / D; }
  void check(AdrVariant variant) const;

  /** Reaction value a(x_i) from the truncated series. */
  double reaction_at(int i) const;
};

/**
 * Dense generator and its LCU terms. The pair (matrix, terms) satisfies
 * alpha * extract_block(assemble_lcu(n, 1, terms)) = matrix within
 * round-off. Reaction variant: diagonal -2D/dx^2 - a(x_i), off-diagonals
 * D/dx^2 -+ c/(2dx) with wrap-around. Velocity variant: diagonal
 * -2D/dx^2 - a0 - omega cos(omega x_i), off-diagonals
 * D/dx^2 -+ sin(omega x_i)/(2dx) (row-sampled), realised with the shift *
 * sine composites S L and S R.
 */
struct AdrSystem {
  Eigen::MatrixXd matrix;
  std::vector<LcuTerm> terms;  // Placed on n_work + 1 inner qubits.
  double alpha = 0.0;          // Sum of the term weights.
};

AdrSystem build_adr_matrix(const AdrSpec& spec, AdrVariant variant);

/** Block encoding of generator / alpha via PREP/SELECT of the LCU terms. */
BlockEncoding build_adr_encoding(const AdrSpec& spec, AdrVariant variant);

/**
 * Block encoding of the spectrally shifted generator B = (2M + alpha I) /
 * alpha, whose eigenvalues lie in [-1, 1] (Gershgorin); `alpha_out` receives
 * the generator's subnormalisation alpha so callers can map evolution time
 * onto B's spectrum via M = alpha (B - I) / 2.
 */
BlockEncoding build_adr_shifted_encoding(const AdrSpec& spec,
                                         AdrVariant variant,
                                         double* alpha_out = nullptr);

/** Forward-Euler step matrix I + dt*M; warns on spectral radius > 1. */
Eigen::MatrixXd forward_euler_matrix(const Eigen::MatrixXd& M, double dt);

/**
 * Dense direct solve (partial-pivot LU). Throws on singular systems
 * (pivot magnitude below 1e-14) and verifies the residual to 1e-10.
 */
Eigen::VectorXd classical_solve(const Eigen::MatrixXd& A,
                                const Eigen::VectorXd& f);

/**
 * e^{M t} g. Symmetric matrices take the eigendecomposition path; general
 * ones use scaling-and-squaring with a Taylor series to 1e-12.
 */
Eigen::VectorXd classical_expm_apply(const Eigen::MatrixXd& M, double t,
                                     const Eigen::VectorXd& g);

/** Normalised Gaussian profile g_k proportional to e^{-(k-center)^2/(2 width^2)}. */
StateVector gaussian_initial(int N, double center, double width);

/**
 * Relative Euclidean error between normalised vectors after aligning v by
 * the unimodular scalar maximising the real overlap with u.
 */
double relative_error(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

}  // namespace pbe
