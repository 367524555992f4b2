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
 * @file experiments.hpp
 * @brief End-to-end QSVT experiments and the command dispatch layer.
 *
 * The two model problems are driven here:
 *   - run_elliptic: solve (−D d²/dx² + a(x)) u = 1 on a periodic grid by
 *     applying a QSVT polynomial approximation of 1/x (times a constant)
 *     to the block encoding of the discretised operator.
 *   - run_adr: evolve an advection-diffusion-reaction profile under
 *     u' = M u by applying exp(tau(y−1)/2)/2 to the block encoding of the
 *     spectrally shifted operator B = (2M + alpha I)/alpha.
 *
 * Both routines compare the post-selected quantum state against a classical
 * dense solution of the same discrete system and report the phase-aligned
 * relative error e_r together with the post-selection success probability.
 *
 * dispatch() is the library-level entry point for the CLI binary: it keeps
 * all observable behaviour (file formats, rounding, ordering) inside the
 * library so experiments are reproducible without the binary. For a fixed
 * ExperimentConfig the emitted files are byte-identical across runs.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "pbe/pde.hpp"
#include "pbe/qsp.hpp"

namespace pbe {

/** Result of one QSVT application (one linear solve or one time point). */
struct QsvtRun {
  std::string problem_id;   ///< Stable identifier, e.g. "elliptic-D1-k3".
  double parameter = 0.0;   ///< Condition-number target k or time t/tau_d.
  double e_r = 0.0;         ///< Phase-aligned relative error vs classical.
  double success_prob = 0.0;  ///< Squared norm of the flagged output block.
  int degree = 0;           ///< Polynomial degree actually applied.
  Eigen::VectorXcd output;  ///< Normalised post-selected work register.
};

/**
 * Elliptic solve via QSVT matrix inversion.
 *
 * The right-hand side is the uniform vector (all entries 1/sqrt(N)). The
 * odd polynomial from approx_poly(inverse_target(kappa), epsilon) is
 * converted to symmetric phase factors; the run aborts with
 * std::runtime_error if the phase-factor residual on a 501-point grid
 * exceeds 1e-8 (a corrupted polynomial must not silently produce plausible
 * but wrong errors). The classical reference is a dense LU solve of the
 * same matrix with the same right-hand side.
 *
 * e_r is relative to the normalised classical solution, so it measures the
 * quantum state quality independent of the known 1/(2 kappa alpha) scale.
 */
QsvtRun run_elliptic(const EllipticSpec& spec, double kappa, double epsilon);

/**
 * ADR time evolution via QSVT applied to B = (2M + alpha I)/alpha.
 *
 * t_list entries are in units of the diffusion time tau_d = dx^2/D; for
 * each t the target exp(alpha_M * t_phys * (y−1)/2)/2 is projected onto
 * Chebyshev polynomials, split by parity, and realised with the two-branch
 * (even/odd) QSVT construction. The initial state is a normalised Gaussian
 * centred at (N−1)/2 with width N/8. The classical reference is a dense
 * matrix exponential applied to the same initial vector.
 *
 * Requires spec.c == 0 for the Reaction variant (symmetric M) so the
 * singular-value transform coincides with the eigenvalue transform; an
 * asymmetric request throws std::invalid_argument.
 */
std::vector<QsvtRun> run_adr(const AdrSpec& spec,
                             const std::vector<double>& t_list,
                             double epsilon);

/**
 * One parsed command invocation.
 *
 * `params` holds the merged key/value options: defaults, then the JSON
 * config file (if any), then explicit command-line flags (highest
 * precedence). Keys not known to the selected command are rejected by
 * dispatch() with std::invalid_argument naming the offending key, so typos
 * fail loudly instead of silently running a default experiment.
 */
struct ExperimentConfig {
  std::string command;          ///< verify, p0-sweep, gate-scaling, ...
  nlohmann::json params = nlohmann::json::object();
  std::string out_dir = ".";    ///< Directory for CSV/JSON artefacts.
  std::uint64_t seed = 0;       ///< RNG seed for randomised inputs.
};

/**
 * Runs one command end to end and writes its artefacts under
 * config.out_dir. Returns the process exit code (0 = success, including
 * "verification ran and passed"; 1 = the command ran but a check failed).
 * Invalid configuration throws. Known commands:
 *
 *   verify        exact block-encoding check for U_C / U_S at (n, omega, phi)
 *   p0-sweep      success probability vs omega, simulated and closed form
 *   gate-scaling  transpiled gate counts, structured vs dense baseline
 *   elliptic      one elliptic solve (CSV row: id, k, e_r, success, degree)
 *   adr           ADR evolution at a list of times (one CSV row per time)
 *   qsp-phases    phase factors for an inverse/exp target, written as JSON
 *   export-circuit  named circuit serialised to the circuit JSON schema
 */
int dispatch(const ExperimentConfig& config);

}  // namespace pbe
