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

#include "pbe/lcu.hpp"

#include <cmath>
#include <numeric>

#include "pbe/shift.hpp"

namespace pbe {

namespace {

int ceil_log2(std::size_t j) {
  int w = 0;
  while ((std::size_t{1} << w) < j) ++w;
  return w;
}

/**
 * Pattern-selected -1: multiplies the branch where the data register holds
 * |pattern> by -1 and leaves every other branch untouched. Realised as a
 * Phase(pi) on the first data qubit, controlled on the remaining data qubits
 * at the pattern's polarities, X-conjugated when the pattern's first bit
 * is 0 (so the phase lands on the correct pivot state).
 */
void add_sign_flip(Circuit& circ, const std::vector<int>& data,
                   std::size_t pattern) {
  if (data.empty()) {
    // Single-term LCU: an unconditional -1 via a global-phase pair.
    add_global_phase(circ, 0, M_PI);
    return;
  }
  const int pivot = data[0];
  Gate g = phase(pivot, M_PI);
  for (std::size_t b = 1; b < data.size(); ++b)
    g.controls.push_back(
        Control{data[b], static_cast<int>((pattern >> b) & 1)});
  const bool conjugate = ((pattern & 1) == 0);
  if (conjugate) circ.add(x(pivot));
  circ.add(std::move(g));
  if (conjugate) circ.add(x(pivot));
}

}  // namespace

Circuit build_prep(const std::vector<double>& weights) {
  if (weights.empty())
    throw std::invalid_argument("build_prep: no weights");
  for (double w : weights)
    if (!(w >= 0.0))
      throw std::invalid_argument("build_prep: weights must be >= 0");
  const double alpha = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(alpha > 0.0))
    throw std::invalid_argument("build_prep: weight sum must be positive");

  const int width = ceil_log2(weights.size());
  std::vector<double> w(std::size_t{1} << width, 0.0);
  std::copy(weights.begin(), weights.end(), w.begin());

  Circuit circ(width);
  // Top-down tree: rotate the most significant qubit by the half/half split
  // of the total weight, then each lower qubit multiplexed on those above it.
  for (int q = width - 1; q >= 0; --q) {
    const int m = width - 1 - q;  // Number of already-fixed higher qubits.
    std::vector<int> controls(m);
    for (int b = 0; b < m; ++b) controls[b] = q + 1 + b;
    std::vector<double> betas(std::size_t{1} << m, 0.0);
    for (std::size_t p = 0; p < betas.size(); ++p) {
      double left = 0.0, right = 0.0;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if ((j >> (q + 1)) != p) continue;
        if ((j >> q) & 1)
          right += w[j];
        else
          left += w[j];
      }
      betas[p] = 2.0 * std::atan2(std::sqrt(right), std::sqrt(left));
    }
    add_multiplexed_ry(circ, q, controls, betas);
  }
  return circ;
}

BlockEncoding assemble_lcu(int n_work, int n_anc_inner,
                           std::vector<LcuTerm> terms) {
  if (n_work < 1) throw std::invalid_argument("assemble_lcu: need n_work >= 1");
  if (n_anc_inner < 0)
    throw std::invalid_argument("assemble_lcu: negative inner ancilla count");
  const int n_inner = n_work + n_anc_inner;

  // Zero-weight terms are dropped before the data register is sized.
  std::erase_if(terms, [](const LcuTerm& t) { return t.weight == 0.0; });
  if (terms.empty())
    throw std::invalid_argument("assemble_lcu: all terms have zero weight");

  double alpha = 0.0;
  std::vector<double> weights;
  weights.reserve(terms.size());
  for (const LcuTerm& t : terms) {
    if (!(t.weight > 0.0))
      throw std::invalid_argument("assemble_lcu: weights must be >= 0");
    if (t.sign != 1 && t.sign != -1)
      throw std::invalid_argument("assemble_lcu: sign must be +1 or -1");
    if (t.circuit.num_qubits > n_inner)
      throw std::invalid_argument("assemble_lcu: term wider than the register");
    alpha += t.weight;
    weights.push_back(t.weight);
  }

  const int width = ceil_log2(terms.size());
  const int total = n_inner + width;
  std::vector<int> data(width);
  for (int b = 0; b < width; ++b) data[b] = n_inner + b;

  Circuit circ(total);
  const Circuit prep = build_prep(weights);
  circ.append(shifted(prep, n_inner, total));

  for (std::size_t j = 0; j < terms.size(); ++j) {
    std::vector<Control> pattern;
    pattern.reserve(data.size());
    for (std::size_t b = 0; b < data.size(); ++b)
      pattern.push_back(Control{data[b], static_cast<int>((j >> b) & 1)});
    Circuit placed(total);
    placed.append(terms[j].circuit);
    circ.append(controlled(placed, pattern));
    if (terms[j].sign < 0) add_sign_flip(circ, data, j);
  }

  circ.append(shifted(adjoint(prep), n_inner, total));

  BlockEncoding be;
  be.circuit = std::move(circ);
  be.n_work = n_work;
  be.n_anc = n_anc_inner + width;
  be.alpha = alpha;
  be.flag = 0;
  be.check();
  return be;
}

BlockEncoding build_banded(int n, const BandedSpec& spec) {
  if (n < 2) throw std::invalid_argument("build_banded: need n >= 2");
  // Inner register: n work qubits, plus the sinusoid ancilla slot whenever
  // the cosine term participates.
  const bool has_cos = spec.weights[0] != 0.0;

  std::vector<LcuTerm> terms;
  if (has_cos)
    terms.push_back(LcuTerm{spec.weights[0], spec.signs[0],
                            build_UC(n, spec.sinusoid, spec.uc_variant).circuit});
  if (spec.weights[1] != 0.0)
    terms.push_back(LcuTerm{spec.weights[1], spec.signs[1],
                            build_shift(n, {ShiftDirection::Left, 1})});
  if (spec.weights[2] != 0.0)
    terms.push_back(LcuTerm{spec.weights[2], spec.signs[2],
                            build_shift(n, {ShiftDirection::Right, 1})});
  if (spec.weights[3] != 0.0)
    terms.push_back(LcuTerm{spec.weights[3], spec.signs[3], Circuit(n)});
  return assemble_lcu(n, has_cos ? 1 : 0, std::move(terms));
}

BlockEncoding build_two_frequency(int n, const TwoFrequencySpec& spec) {
  if (n < 2) throw std::invalid_argument("build_two_frequency: need n >= 2");
  // Two sinusoid ancilla slots: qubit n for the first cosine, n+1 for the
  // second, selected on data patterns 00 and 11 respectively.
  std::vector<LcuTerm> terms;
  if (spec.weights[0] != 0.0)
    terms.push_back(LcuTerm{spec.weights[0], spec.signs[0],
                            build_UC(n, spec.first, spec.uc_variant).circuit});
  if (spec.weights[1] != 0.0)
    terms.push_back(LcuTerm{spec.weights[1], spec.signs[1],
                            build_shift(n, {ShiftDirection::Left, 1})});
  if (spec.weights[2] != 0.0)
    terms.push_back(LcuTerm{spec.weights[2], spec.signs[2],
                            build_shift(n, {ShiftDirection::Right, 1})});
  if (spec.weights[3] != 0.0) {
    Circuit second = build_UC(n, spec.second, spec.uc_variant).circuit;
    terms.push_back(
        LcuTerm{spec.weights[3], spec.signs[3],
                remap_qubit(second, n, n + 1, n + 2)});
  }
  return assemble_lcu(n, 2, std::move(terms));
}

BlockEncoding build_fourier_diagonal(int n, const FourierSpec& spec) {
  if (n < 1)
    throw std::invalid_argument("build_fourier_diagonal: need n >= 1");
  if (spec.terms.empty() && spec.a0 == 0.0)
    throw std::invalid_argument(
        "build_fourier_diagonal: need a harmonic or a nonzero mean");
  if (!(spec.period > 0.0))
    throw std::invalid_argument("build_fourier_diagonal: period must be > 0");

  std::vector<LcuTerm> terms;
  bool any_sinusoid = false;
  if (spec.a0 != 0.0)
    terms.push_back(LcuTerm{std::abs(spec.a0) / 2.0,
                            spec.a0 > 0 ? +1 : -1, Circuit(n)});
  for (const FourierTerm& t : spec.terms) {
    if (t.harmonic < 1)
      throw std::invalid_argument("build_fourier_diagonal: harmonic < 1");
    const double omega = 2.0 * M_PI * t.harmonic / spec.period;
    if (t.a != 0.0) {
      terms.push_back(LcuTerm{std::abs(t.a), t.a > 0 ? +1 : -1,
                              build_UC(n, {omega, 0.0}, spec.uc_variant).circuit});
      any_sinusoid = true;
    }
    if (t.b != 0.0) {
      terms.push_back(LcuTerm{std::abs(t.b), t.b > 0 ? +1 : -1,
                              build_US(n, {omega, 0.0}, spec.uc_variant).circuit});
      any_sinusoid = true;
    }
  }
  return assemble_lcu(n, any_sinusoid ? 1 : 0, std::move(terms));
}

}  // namespace pbe
