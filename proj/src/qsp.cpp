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

#include "pbe/qsp.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pbe {

namespace {

using Eigen::Matrix2cd;
using cplx = std::complex<double>;

Matrix2cd phase_z(double phi) {
  Matrix2cd e = Matrix2cd::Zero();
  e(0, 0) = std::polar(1.0, phi);
  e(1, 1) = std::polar(1.0, -phi);
  return e;
}

Matrix2cd signal(double x) {
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  Matrix2cd w;
  w << cplx(x, 0), cplx(0, s), cplx(0, s), cplx(x, 0);
  return w;
}

}  // namespace

double qsp_eval_scalar(const PhaseFactors& phases, double x) {
  return qsp_eval_complex(phases, x).real();
}

std::complex<double> qsp_eval_complex(const PhaseFactors& phases, double x) {
  if (std::abs(x) > 1.0 + 1e-12)
    throw std::invalid_argument("qsp_eval: |x| must be <= 1");
  const int d = phases.degree();
  Matrix2cd u = phase_z(phases.angles[0]);
  const Matrix2cd w = signal(std::clamp(x, -1.0, 1.0));
  for (int j = 1; j <= d; ++j) u = u * w * phase_z(phases.angles[j]);
  return u(0, 0);
}

PhaseFactors qsp_phases(const ChebyshevPoly& poly) {
  const int d = poly.degree();
  if (poly.coeffs.size() == 0)
    throw std::invalid_argument("qsp_phases: empty polynomial");
  if (poly.parity == Parity::None)
    throw std::invalid_argument("qsp_phases: definite parity required");
  for (int i = 0; i <= d; ++i) {
    const bool even_idx = (i % 2 == 0);
    if (poly.coeffs[i] != 0.0 &&
        ((poly.parity == Parity::Even) != even_idx))
      throw std::invalid_argument("qsp_phases: coefficients break the parity");
  }

  // The response is a unitary matrix element, so representable targets must
  // stay strictly inside [-1, 1].
  double sup = 0.0;
  for (int i = 0; i < 2001; ++i) {
    const double x = -1.0 + 2.0 * i / 2000.0;
    sup = std::max(sup, std::abs(cheb_eval(poly, x)));
  }
  if (sup > 1.0 - 1e-6)
    throw std::invalid_argument(
        "qsp_phases: polynomial sup-norm too close to 1");

  // Symmetric phases: phi_j = free[j] for j < nf, free[d-j] above. Value
  // matching at nf positive Chebyshev points gives a square system.
  const int nf = (d + 2) / 2;
  Eigen::VectorXd xs(nf), fs(nf);
  for (int i = 0; i < nf; ++i) {
    xs[i] = std::cos((2.0 * (i + 1) - 1.0) * M_PI / (4.0 * nf));
    fs[i] = cheb_eval(poly, xs[i]);
  }
  std::vector<Matrix2cd> ws(nf);
  for (int i = 0; i < nf; ++i) ws[i] = signal(xs[i]);

  const auto fidx = [&](int j) { return j < nf ? j : d - j; };

  std::vector<Matrix2cd> pre(d + 1), suf(d + 2);
  const auto evaluate = [&](const Eigen::VectorXd& fr, Eigen::VectorXd& F,
                            Eigen::MatrixXd* J) {
    if (J) J->setZero();
    for (int i = 0; i < nf; ++i) {
      // pre[j] = M_0 ... M_j and suf[j] = M_j ... M_d with M_0 = E(phi_0),
      // M_j = W E(phi_j); dU/dphi_j = pre[j] (iZ) suf[j+1].
      pre[0] = phase_z(fr[0]);
      for (int j = 1; j <= d; ++j)
        pre[j] = pre[j - 1] * ws[i] * phase_z(fr[fidx(j)]);
      F[i] = pre[d](0, 0).real() - fs[i];
      if (!J) continue;
      suf[d + 1] = Matrix2cd::Identity();
      for (int j = d; j >= 1; --j)
        suf[j] = ws[i] * phase_z(fr[fidx(j)]) * suf[j + 1];
      suf[0] = phase_z(fr[0]) * suf[1];
      for (int j = 0; j <= d; ++j) {
        const cplx du = cplx(0, 1) * (pre[j](0, 0) * suf[j + 1](0, 0) -
                                      pre[j](0, 1) * suf[j + 1](1, 0));
        (*J)(i, fidx(j)) += du.real();
      }
    }
  };

  Eigen::VectorXd free_phases = Eigen::VectorXd::Zero(nf);
  free_phases[0] = M_PI / 4;

  Eigen::VectorXd F(nf), Fnew(nf);
  Eigen::MatrixXd J(nf, nf);
  evaluate(free_phases, F, nullptr);

  constexpr double kTol = 1e-13;
  constexpr int kMaxIter = 50;
  double residual = F.cwiseAbs().maxCoeff();
  for (int iter = 0; iter < kMaxIter && residual >= kTol; ++iter) {
    evaluate(free_phases, F, &J);
    const Eigen::VectorXd step = J.partialPivLu().solve(-F);
    const double f0 = F.norm();
    double lambda = 1.0;
    bool accepted = false;
    for (int half = 0; half < 30; ++half) {
      const Eigen::VectorXd trial = free_phases + lambda * step;
      evaluate(trial, Fnew, nullptr);
      if (Fnew.norm() < (1.0 - 0.25 * lambda) * f0) {
        free_phases = trial;
        F = Fnew;
        accepted = true;
        break;
      }
      lambda /= 2;
    }
    if (!accepted) break;  // Stalled; reported below.
    residual = F.cwiseAbs().maxCoeff();
  }

  if (residual > 1e-9)
    throw std::runtime_error(
        "qsp_phases: Newton iteration stalled at residual " +
        std::to_string(residual));

  PhaseFactors out;
  out.angles = Eigen::VectorXd(d + 1);
  for (int j = 0; j <= d; ++j) out.angles[j] = free_phases[fidx(j)];
  out.parity = poly.parity;
  out.residual = residual;
  return out;
}

std::string PhaseFactors::to_json_string() const {
  nlohmann::json j;
  j["degree"] = degree();
  j["parity"] = parity == Parity::Even ? "even"
              : parity == Parity::Odd  ? "odd"
                                       : "none";
  j["angles"] = std::vector<double>(angles.data(), angles.data() + angles.size());
  j["residual"] = residual;
  return j.dump(2);
}

PhaseFactors PhaseFactors::from_json_string(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  PhaseFactors p;
  const auto vec = j.at("angles").get<std::vector<double>>();
  p.angles = Eigen::Map<const Eigen::VectorXd>(vec.data(),
                                               static_cast<Eigen::Index>(vec.size()));
  const std::string parity = j.at("parity").get<std::string>();
  p.parity = parity == "even" ? Parity::Even
           : parity == "odd"  ? Parity::Odd
                              : Parity::None;
  if (j.contains("residual")) p.residual = j.at("residual").get<double>();
  if (j.at("degree").get<int>() != p.degree())
    throw std::invalid_argument("PhaseFactors: degree/angles mismatch");
  return p;
}

}  // namespace pbe
