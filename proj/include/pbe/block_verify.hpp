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
 * @file block_verify.hpp
 * @brief Numerical verification that a circuit block-encodes a target matrix.
 */

#include <Eigen/Dense>
#include <string>

#include "pbe/block_encoding.hpp"
#include "pbe/simulate.hpp"

namespace pbe {

/** Outcome of comparing an encoded block against a target matrix. */
struct VerificationReport {
  double max_abs_error = 0.0;      // max_ij |alpha * block_ij - target_ij|.
  double target_norm = 0.0;        // Spectral norm of the target.
  double alpha = 0.0;              // Subnormalisation used for the scaling.
  double success_probability = 0.0;  // Flag probability on the uniform input.
  bool passed = false;

  std::string to_json_string() const;
};

/**
 * The encoded matrix alpha * <flag| U |flag>: simulates one column per work
 * basis state and reads the rows with the ancilla register in |flag>.
 */
Eigen::MatrixXcd extract_block(const BlockEncoding& be);

/**
 * Success probability of post-selecting the ancillas on |flag> when the
 * work register starts in `work_state` (normalised within 1e-9).
 */
double success_probability(const BlockEncoding& be,
                           const Eigen::VectorXcd& work_state);

/** Full comparison: extract, diff against target, fill the report. */
VerificationReport verify_block(const BlockEncoding& be,
                                const Eigen::MatrixXcd& target,
                                double tol = 1e-10);

}  // namespace pbe
