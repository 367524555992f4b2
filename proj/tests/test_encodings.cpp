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

// Sinusoid diagonal encodings U_C / U_S, the phase ladder V, the ancilla
// success probability, the dense baseline, and the cyclic shifts. Encoded
// blocks are compared against diagonal matrices built from the defining
// formulas, through the independent Kronecker-product oracle.

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pbe/block_verify.hpp"
#include "pbe/diag_encodings.hpp"
#include "pbe/shift.hpp"
#include "pbe/simulate.hpp"
#include "pbe/transpile.hpp"

using oracles::Mat;
using pbe::BlockEncoding;
using pbe::Circuit;
using pbe::SinusoidSpec;
using pbe::UcVariant;

namespace {

/** Top-left work block of the oracle unitary (ancillas projected on |0>). */
Mat oracle_block(const BlockEncoding& be) {
  const Eigen::Index dim = Eigen::Index(1) << be.n_work;
  const Mat u = oracles::circuit_unitary(be.circuit);
  const Eigen::Index offset = Eigen::Index(be.flag) << be.n_work;
  return be.alpha * u.block(offset, offset, dim, dim);
}

}  // namespace

TEST_CASE("V is the diagonal phase ladder e^{i omega k}") {
  const int n = 3;
  const double omega = 0.9;
  const Circuit v = pbe::build_V(n, SinusoidSpec{omega, 0.0});
  CHECK(v.gates.size() == n);  // One phase gate per qubit.
  const Mat u = oracles::circuit_unitary(v);
  for (int k = 0; k < 8; ++k) {
    CHECK(std::abs(u(k, k) - std::exp(oracles::cplx(0, omega * k))) < 1e-14);
  }
}

TEST_CASE("U_C encodes diag cos(omega k + phi) exactly, both variants") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const SinusoidSpec spec{dist(rng), dist(rng)};
      for (const UcVariant variant :
           {UcVariant::Select, UcVariant::CnotConjugation}) {
        const BlockEncoding be = pbe::build_UC(n, spec, variant);
        CHECK(be.n_work == n);
        CHECK(be.n_anc == 1);
        CHECK(be.alpha == 1.0);
        CHECK(be.flag == 0);
        const Mat target = oracles::dense_cos(n, spec.omega, spec.phi);
        CHECK(oracles::max_abs_diff(oracle_block(be), target) < 1e-12);
      }
    }
  }
}

TEST_CASE("U_S encodes diag sin(omega k + phi) exactly") {
  const SinusoidSpec spec{0.77, -1.3};
  for (const UcVariant variant :
       {UcVariant::Select, UcVariant::CnotConjugation}) {
    const BlockEncoding be = pbe::build_US(3, spec, variant);
    const Mat target = oracles::dense_sin(3, spec.omega, spec.phi);
    CHECK(oracles::max_abs_diff(oracle_block(be), target) < 1e-12);
  }
}

TEST_CASE("the two U_C variants differ only in gate count, not in action") {
  const int n = 5;
  const SinusoidSpec spec{1.1, 0.0};
  const pbe::GateCounts select =
      pbe::transpile_count(pbe::build_UC(n, spec, UcVariant::Select).circuit);
  const pbe::GateCounts cnot = pbe::transpile_count(
      pbe::build_UC(n, spec, UcVariant::CnotConjugation).circuit);
  // At phi = 0 the conjugation form costs 2 H + 2n CNOT + (n+1) P = 3n+3.
  // The select form pays 7 gates per 0-controlled ladder phase (a
  // singly-controlled phase is 2 CNOT + 3 P, plus 2 X for the polarity)
  // and n phases for the uncontrolled unwind: 2 H + 7n + n = 8n+2.
  CHECK(cnot.total() == 3 * n + 3);
  CHECK(cnot.h == 2);
  CHECK(cnot.cnot == 2 * n);
  CHECK(cnot.phase == n + 1);
  CHECK(select.total() == 8 * n + 2);
  CHECK(select.cnot == 2 * n);
}

TEST_CASE("ancilla probability matches the closed form on random states") {
  std::mt19937_64 rng(55);
  const int n = 4;
  for (int rep = 0; rep < 5; ++rep) {
    const Eigen::VectorXcd psi = oracles::random_state(rng, 1 << n);
    const double omega = 2.0 * M_PI * rep / 5 + 0.1;
    const BlockEncoding be = pbe::build_UC(n, SinusoidSpec{omega, 0.0});
    const double simulated = pbe::success_probability(be, psi);
    // Independent sum: p0 = sum_k |c_k|^2 cos^2(omega k).
    double expected = 0.0;
    for (int k = 0; k < (1 << n); ++k) {
      const double c = std::cos(omega * k);
      expected += std::norm(psi(k)) * c * c;
    }
    CHECK(std::abs(simulated - expected) < 1e-12);
    CHECK(std::abs(pbe::p0_closed_form(psi, omega) - expected) < 1e-12);
  }
  // Unnormalised inputs are rejected rather than silently rescaled.
  CHECK_THROWS(pbe::p0_closed_form(Eigen::VectorXcd::Ones(4), 0.3));
}

TEST_CASE("truncate_V drops only negligible rotations") {
  const int n = 6;
  // Frequency whose high-qubit angles fold to near-multiples of 2 pi.
  const double omega = M_PI / 16.0;
  const SinusoidSpec spec{omega, 0.0};
  const Circuit full = pbe::build_V(n, spec);
  const Circuit cheap = pbe::truncate_V(n, spec, 1e-3);
  CHECK(cheap.gates.size() <= full.gates.size());
  const Mat diff =
      oracles::circuit_unitary(full) - oracles::circuit_unitary(cheap);
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-3);
  // A zero budget keeps the ladder exact.
  const Circuit exact = pbe::truncate_V(n, spec, 0.0);
  CHECK(oracles::max_abs_diff(oracles::circuit_unitary(full),
                              oracles::circuit_unitary(exact)) < 1e-14);
}

TEST_CASE("dense baseline encodes arbitrary diagonals") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int n = 3;
  Eigen::VectorXd values(1 << n);
  for (int k = 0; k < (1 << n); ++k) values(k) = dist(rng);
  const BlockEncoding be = pbe::build_dense_baseline(values);
  CHECK(be.n_work == n);
  CHECK(be.n_anc == 1);
  Mat target = Mat::Zero(1 << n, 1 << n);
  for (int k = 0; k < (1 << n); ++k) target(k, k) = values(k);
  CHECK(oracles::max_abs_diff(oracle_block(be), target) < 1e-12);
  // The multiplexer costs Theta(2^n) two-qubit gates.
  CHECK(pbe::transpile_count(be.circuit).two_qubit() >= (1 << n) / 2);
}

TEST_CASE("multiplexed Ry selects the branch rotation") {
  // Two controls, four branch angles: each control pattern |j> must see
  // exactly e^{i theta_j} Ry(2 theta_j)-style action on the target; here we
  // check the diagonal cosine that the baseline relies on.
  const std::vector<double> betas = {0.3, 1.1, -0.7, 2.2};
  Circuit circ(3);
  pbe::add_multiplexed_ry(circ, 2, {0, 1}, betas);
  const Mat u = oracles::circuit_unitary(circ);
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(u(j, j) - std::cos(betas[j] / 2)) < 1e-12);
  }
}

TEST_CASE("cyclic shifts match the permutation matrices") {
  for (int n = 1; n <= 4; ++n) {
    const Circuit left =
        pbe::build_shift(n, {pbe::ShiftDirection::Left, 1});
    const Circuit right =
        pbe::build_shift(n, {pbe::ShiftDirection::Right, 1});
    CHECK(oracles::max_abs_diff(oracles::circuit_unitary(left),
                                oracles::dense_left(n)) < 1e-14);
    CHECK(oracles::max_abs_diff(oracles::circuit_unitary(right),
                                oracles::dense_right(n)) < 1e-14);
  }
}

TEST_CASE("shift powers reduce modulo the ring size") {
  const int n = 3;
  const Circuit two = pbe::build_shift(n, {pbe::ShiftDirection::Left, 2});
  const Mat l = oracles::dense_left(n);
  CHECK(oracles::max_abs_diff(oracles::circuit_unitary(two), l * l) < 1e-14);
  // power = N is the identity; power = -1 wraps to N - 1.
  const Circuit full = pbe::build_shift(n, {pbe::ShiftDirection::Left, 8});
  CHECK(oracles::max_abs_diff(oracles::circuit_unitary(full),
                              Mat::Identity(8, 8)) < 1e-14);
  const Circuit back = pbe::build_shift(n, {pbe::ShiftDirection::Left, -1});
  CHECK(oracles::max_abs_diff(oracles::circuit_unitary(back),
                              oracles::dense_right(n)) < 1e-14);
}

TEST_CASE("left and right shifts are mutually inverse") {
  const int n = 3;
  const Mat l = oracles::circuit_unitary(
      pbe::build_shift(n, {pbe::ShiftDirection::Left, 1}));
  const Mat r = oracles::circuit_unitary(
      pbe::build_shift(n, {pbe::ShiftDirection::Right, 1}));
  CHECK(oracles::max_abs_diff(l * r, Mat::Identity(8, 8)) < 1e-14);
}
