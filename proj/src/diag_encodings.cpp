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

#include "pbe/diag_encodings.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace pbe {

namespace {

void require_work_qubits(int n) {
  if (n < 1) throw std::invalid_argument("diag encoding: need n >= 1");
}

}  // namespace

Circuit build_V(int n, const SinusoidSpec& spec) {
  require_work_qubits(n);
  Circuit circ(n);
  for (int q = 0; q < n; ++q)
    circ.add(phase(q, std::ldexp(spec.omega, q)));  // P(2^q * omega) on q.
  return circ;
}

Circuit truncate_V(int n, const SinusoidSpec& spec, double eps) {
  require_work_qubits(n);
  if (eps < 0) throw std::invalid_argument("truncate_V: eps must be >= 0");

  // Fold each ladder angle to [-pi, pi]; folding never changes the unitary.
  std::vector<double> folded(n);
  for (int q = 0; q < n; ++q)
    folded[q] = std::remainder(std::ldexp(spec.omega, q), 2 * M_PI);

  // Greedily drop the smallest folded angles while the accumulated magnitude
  // keeps ||V_t - V|| <= sum of dropped |angles| within eps.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(folded[a]) < std::abs(folded[b]);
  });
  std::vector<bool> keep(n, true);
  double budget = eps;
  for (int q : order) {
    if (std::abs(folded[q]) <= budget) {
      budget -= std::abs(folded[q]);
      keep[q] = false;
    } else {
      break;
    }
  }

  Circuit circ(n);
  for (int q = 0; q < n; ++q)
    if (keep[q]) circ.add(phase(q, folded[q]));
  return circ;
}

BlockEncoding build_UC(int n, const SinusoidSpec& spec, UcVariant variant) {
  require_work_qubits(n);
  const int anc = n;
  Circuit circ(n + 1);
  const double omega = spec.omega;
  const double phi = spec.phi;

  circ.add(h(anc));
  if (variant == UcVariant::Select) {
    // |0> branch picks up e^{i(2 omega k + 2 phi)}; the uncontrolled V(-omega)
    // then symmetrises the two branches to e^{+-i(omega k + phi)} up to the
    // scalar e^{i phi}, which the closing global-phase pair removes.
    for (int q = 0; q < n; ++q)
      circ.add(controlled(phase(q, std::ldexp(2 * omega, q)),
                          {Control{anc, 0}}));
    if (phi != 0.0) {
      circ.add(x(anc));
      circ.add(phase(anc, 2 * phi));
      circ.add(x(anc));
    }
    for (int q = 0; q < n; ++q) circ.add(phase(q, -std::ldexp(omega, q)));
    if (phi != 0.0) add_global_phase(circ, anc, -phi);
  } else {
    // CNOT fan-out conjugation: the |1> branch sees V(omega) on the
    // complemented index, i.e. a phase e^{i omega (2^n - 1 - k)}; one ancilla
    // Phase of -((2^n - 1) omega + 2 phi) symmetrises the branches.
    for (int q = 0; q < n; ++q) circ.add(cx(anc, q));
    for (int q = 0; q < n; ++q) circ.add(phase(q, std::ldexp(omega, q)));
    for (int q = 0; q < n; ++q) circ.add(cx(anc, q));
    const double span = std::ldexp(1.0, n) - 1.0;  // 2^n - 1.
    circ.add(phase(anc, -(span * omega + 2 * phi)));
    if (phi != 0.0) add_global_phase(circ, anc, phi);
  }
  circ.add(h(anc));

  BlockEncoding be;
  be.circuit = std::move(circ);
  be.n_work = n;
  be.n_anc = 1;
  be.alpha = 1.0;
  be.flag = 0;
  be.check();
  return be;
}

BlockEncoding build_US(int n, const SinusoidSpec& spec, UcVariant variant) {
  BlockEncoding be = build_UC(n, spec, variant);
  be.circuit.add(y(n));
  return be;
}

double p0_closed_form(const Eigen::VectorXcd& coeffs, double omega) {
  const double nrm = coeffs.norm();
  if (std::abs(nrm - 1.0) > 1e-9)
    throw std::invalid_argument("p0_closed_form: coefficients not normalised");
  double p0 = 0.0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    const double c = std::cos(omega * static_cast<double>(k));
    p0 += std::norm(coeffs[k]) * c * c;
  }
  return p0;
}

void add_multiplexed_ry(Circuit& circ, int target,
                        const std::vector<int>& controls,
                        const std::vector<double>& betas) {
  const int m = static_cast<int>(controls.size());
  const std::size_t K = betas.size();
  if (K != (std::size_t{1} << m))
    throw std::invalid_argument("add_multiplexed_ry: need 2^m angles");

  if (m == 0) {
    add_ry_compound(circ, target, betas[0]);
    add_global_phase(circ, target, -betas[0] / 2);
    return;
  }

  // Gray-code transform: rotated angles th[j] = (1/K) sum_k
  // (-1)^{<bits(k), gray(j)>} beta[k]. Applying them interleaved with the
  // ruler-sequence CNOTs yields Ry(beta_k) on each control branch k.
  std::vector<double> th(K, 0.0);
  for (std::size_t j = 0; j < K; ++j) {
    const std::size_t gray = j ^ (j >> 1);
    double acc = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      const int par = std::popcount(k & gray) & 1;
      acc += par ? -betas[k] : betas[k];
    }
    th[j] = acc / static_cast<double>(K);
  }

  double scalar = 0.0;  // Branch-uniform phase of the rotation compounds.
  for (std::size_t j = 0; j < K; ++j) {
    add_ry_compound(circ, target, th[j]);
    scalar += th[j] / 2;
    const int pos =
        (j + 1 == K) ? m - 1 : std::countr_zero(static_cast<std::uint64_t>(j + 1));
    circ.add(cx(controls[pos], target));
  }
  if (scalar != 0.0) add_global_phase(circ, target, -scalar);
}

BlockEncoding build_dense_baseline(const Eigen::VectorXd& values) {
  const Eigen::Index N = values.size();
  if (N < 2 || (N & (N - 1)) != 0)
    throw std::invalid_argument(
        "build_dense_baseline: length must be a power of two >= 2");
  const int n = std::countr_zero(static_cast<std::uint64_t>(N));

  std::vector<double> betas(static_cast<std::size_t>(N));
  for (Eigen::Index k = 0; k < N; ++k) {
    const double v = values[k];
    if (std::abs(v) > 1.0 + 1e-12)
      throw std::invalid_argument("build_dense_baseline: |value| > 1");
    betas[static_cast<std::size_t>(k)] =
        2.0 * std::acos(std::clamp(v, -1.0, 1.0));
  }

  Circuit circ(n + 1);
  std::vector<int> controls(n);
  std::iota(controls.begin(), controls.end(), 0);
  add_multiplexed_ry(circ, n, controls, betas);

  BlockEncoding be;
  be.circuit = std::move(circ);
  be.n_work = n;
  be.n_anc = 1;
  be.alpha = 1.0;
  be.flag = 0;
  be.check();
  return be;
}

}  // namespace pbe
