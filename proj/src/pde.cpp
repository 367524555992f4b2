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

#include "pbe/pde.hpp"

#include <bit>
#include <cmath>
#include <iostream>

#include "pbe/shift.hpp"

namespace pbe {

namespace {

int log2_exact(int N, const char* who) {
  if (N < 2 || (N & (N - 1)) != 0)
    throw std::invalid_argument(std::string(who) +
                                ": grid size must be a power of two >= 2");
  return std::countr_zero(static_cast<unsigned>(N));
}

}  // namespace

void EllipticSpec::check() const {
  if (!(D > 0)) throw std::invalid_argument("EllipticSpec: D must be > 0");
  if (!(a0 > 1))
    throw std::invalid_argument("EllipticSpec: need a0 > 1 for positivity");
  log2_exact(N, "EllipticSpec");
}

Eigen::MatrixXd build_elliptic_matrix(const EllipticSpec& spec) {
  spec.check();
  const int N = spec.N;
  const double h = 1.0 / N;
  const double w = spec.D / (h * h);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    const double x = i * h;  // Node x_j = j h - h with j = i + 1.
    A(i, i) = 2 * w + spec.a0 + std::cos(spec.omega_x * x);
    A(i, (i + 1) % N) -= w;
    A(i, (i + N - 1) % N) -= w;
  }
  return A;
}

BandedSpec elliptic_lcu(const EllipticSpec& spec) {
  spec.check();
  const double h = 1.0 / spec.N;
  const double w = spec.D / (h * h);
  BandedSpec b;
  b.sinusoid = SinusoidSpec{spec.omega_x * h, 0.0};
  b.weights[0] = 1.0;               // Cosine part of the reaction.
  b.weights[1] = w;                 // L.
  b.weights[2] = w;                 // R.
  b.weights[3] = 2 * w + spec.a0;   // Identity.
  b.signs[0] = +1;
  b.signs[1] = -1;
  b.signs[2] = -1;
  b.signs[3] = +1;
  return b;
}

BlockEncoding build_elliptic_encoding(const EllipticSpec& spec) {
  const BandedSpec b = elliptic_lcu(spec);
  const int n = log2_exact(spec.N, "build_elliptic_encoding");
  if (n >= 2) return build_banded(n, b);

  // Degenerate two-point ring: L and R coincide, so their weights merge
  // into a single off-diagonal term.
  std::vector<LcuTerm> terms;
  terms.push_back(LcuTerm{b.weights[0], b.signs[0],
                          build_UC(n, b.sinusoid, b.uc_variant).circuit});
  terms.push_back(LcuTerm{b.weights[1] + b.weights[2], b.signs[1],
                          build_shift(n, {ShiftDirection::Left, 1})});
  terms.push_back(LcuTerm{b.weights[3], b.signs[3], Circuit(n)});
  return assemble_lcu(n, 1, std::move(terms));
}

void AdrSpec::check(AdrVariant variant) const {
  if (!(D > 0)) throw std::invalid_argument("AdrSpec: D must be > 0");
  if (!(length > 0)) throw std::invalid_argument("AdrSpec: length must be > 0");
  if (!(dt > 0)) throw std::invalid_argument("AdrSpec: dt must be > 0");
  log2_exact(N, "AdrSpec");
  if (variant == AdrVariant::Reaction) {
    for (int i = 0; i < N; ++i)
      if (!(reaction_at(i) > 0))
        throw std::invalid_argument("AdrSpec: reaction not positive on grid");
  } else {
    if (!(a0 > 0))
      throw std::invalid_argument("AdrSpec: velocity variant needs a0 > 0");
  }
}

double AdrSpec::reaction_at(int i) const {
  // Harmonics are indexed against the domain period measured in nodes.
  double a = a0;
  for (const FourierTerm& t : harmonics) {
    const double angle = 2.0 * M_PI * t.harmonic * i / N;
    a += t.a * std::cos(angle) + t.b * std::sin(angle);
  }
  return a;
}

AdrSystem build_adr_matrix(const AdrSpec& spec, AdrVariant variant) {
  spec.check(variant);
  const int N = spec.N;
  const int n = log2_exact(N, "build_adr_matrix");
  const double dx = spec.dx();
  const double diff = spec.D / (dx * dx);

  AdrSystem sys;
  sys.matrix = Eigen::MatrixXd::Zero(N, N);

  if (variant == AdrVariant::Reaction) {
    const double adv = spec.c / (2 * dx);
    for (int i = 0; i < N; ++i) {
      sys.matrix(i, i) = -2 * diff - spec.reaction_at(i);
      sys.matrix(i, (i + 1) % N) = diff - adv;
      sys.matrix(i, (i + N - 1) % N) = diff + adv;
    }

    // LCU terms in the banded pattern order: sinusoids, L, R, identity.
    // Harmonic values enter the diagonal negated, so their signs flip.
    for (const FourierTerm& t : spec.harmonics) {
      const double omega = 2.0 * M_PI * t.harmonic / N;
      if (t.a != 0.0)
        sys.terms.push_back(LcuTerm{std::abs(t.a), t.a > 0 ? -1 : +1,
                                    build_UC(n, {omega, 0.0}).circuit});
      if (t.b != 0.0)
        sys.terms.push_back(LcuTerm{std::abs(t.b), t.b > 0 ? -1 : +1,
                                    build_US(n, {omega, 0.0}).circuit});
    }
    const double wL = diff + adv;  // Subdiagonal value (column i-1).
    const double wR = diff - adv;  // Superdiagonal value.
    if (wL != 0.0)
      sys.terms.push_back(LcuTerm{std::abs(wL), wL > 0 ? +1 : -1,
                                  build_shift(n, {ShiftDirection::Left, 1})});
    if (wR != 0.0)
      sys.terms.push_back(LcuTerm{std::abs(wR), wR > 0 ? +1 : -1,
                                  build_shift(n, {ShiftDirection::Right, 1})});
    sys.terms.push_back(LcuTerm{2 * diff + spec.a0, -1, Circuit(n)});
  } else {
    // Periodic velocity c(x) = sin(omega x): expanding (c u)' yields the
    // effective reaction a0 + omega cos(omega x) on the diagonal and the
    // row-sampled advection -+ sin(omega x_i)/(2 dx) off the diagonal.
    const double omega_grid = spec.omega_vel * dx;
    const double adv = 1.0 / (2 * dx);
    for (int i = 0; i < N; ++i) {
      const double x = i * dx;
      sys.matrix(i, i) =
          -2 * diff - spec.a0 - spec.omega_vel * std::cos(spec.omega_vel * x);
      sys.matrix(i, (i + 1) % N) = diff - std::sin(spec.omega_vel * x) * adv;
      sys.matrix(i, (i + N - 1) % N) =
          diff + std::sin(spec.omega_vel * x) * adv;
    }

    const Circuit us = build_US(n, {omega_grid, 0.0}).circuit;
    const Circuit left = build_shift(n, {ShiftDirection::Left, 1});
    const Circuit right = build_shift(n, {ShiftDirection::Right, 1});
    // Composite S*L: shift first, then the sine block, so row i samples
    // sin(omega x_i); likewise S*R.
    Circuit sl(n + 1);
    sl.append(left);
    sl.append(us);
    Circuit sr(n + 1);
    sr.append(right);
    sr.append(us);

    if (spec.omega_vel != 0.0)
      sys.terms.push_back(
          LcuTerm{std::abs(spec.omega_vel), spec.omega_vel > 0 ? -1 : +1,
                  build_UC(n, {omega_grid, 0.0}).circuit});
    sys.terms.push_back(LcuTerm{diff, +1, left});
    sys.terms.push_back(LcuTerm{adv, +1, std::move(sl)});
    sys.terms.push_back(LcuTerm{diff, +1, right});
    sys.terms.push_back(LcuTerm{adv, -1, std::move(sr)});
    sys.terms.push_back(LcuTerm{2 * diff + spec.a0, -1, Circuit(n)});
  }

  sys.alpha = 0.0;
  for (const LcuTerm& t : sys.terms) sys.alpha += t.weight;
  return sys;
}

BlockEncoding build_adr_encoding(const AdrSpec& spec, AdrVariant variant) {
  AdrSystem sys = build_adr_matrix(spec, variant);
  const int n = log2_exact(spec.N, "build_adr_encoding");
  return assemble_lcu(n, 1, std::move(sys.terms));
}

BlockEncoding build_adr_shifted_encoding(const AdrSpec& spec,
                                         AdrVariant variant,
                                         double* alpha_out) {
  AdrSystem sys = build_adr_matrix(spec, variant);
  const int n = log2_exact(spec.N, "build_adr_shifted_encoding");
  const double alpha = sys.alpha;
  if (alpha_out) *alpha_out = alpha;

  // B = (2M + alpha I)/alpha: every M term is scaled by 2/alpha and the
  // identity weight is shifted by +1. The identity term is the signed value
  // -(2 diff + a0) * 2/alpha + 1.
  std::vector<LcuTerm> terms;
  double identity_value = 1.0;
  for (LcuTerm& t : sys.terms) {
    if (t.circuit.gates.empty() && t.circuit.num_qubits == n) {
      identity_value += t.sign * t.weight * 2.0 / alpha;
    } else {
      t.weight *= 2.0 / alpha;
      terms.push_back(std::move(t));
    }
  }
  if (identity_value != 0.0)
    terms.push_back(LcuTerm{std::abs(identity_value),
                            identity_value > 0 ? +1 : -1, Circuit(n)});
  return assemble_lcu(n, 1, std::move(terms));
}

Eigen::MatrixXd forward_euler_matrix(const Eigen::MatrixXd& M, double dt) {
  if (!(dt > 0))
    throw std::invalid_argument("forward_euler_matrix: dt must be > 0");
  if (M.rows() != M.cols())
    throw std::invalid_argument("forward_euler_matrix: matrix not square");
  Eigen::MatrixXd A =
      Eigen::MatrixXd::Identity(M.rows(), M.cols()) + dt * M;
  const double radius =
      Eigen::EigenSolver<Eigen::MatrixXd>(A, false).eigenvalues().cwiseAbs().maxCoeff();
  if (radius > 1.0 + 1e-12)
    std::cerr << "forward_euler_matrix: warning: spectral radius " << radius
              << " exceeds 1; the explicit step is unstable\n";
  return A;
}

Eigen::VectorXd classical_solve(const Eigen::MatrixXd& A,
                                const Eigen::VectorXd& f) {
  if (A.rows() != A.cols() || A.rows() != f.size())
    throw std::invalid_argument("classical_solve: dimension mismatch");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (min_pivot < 1e-14)
    throw std::runtime_error("classical_solve: singular matrix (pivot < 1e-14)");
  Eigen::VectorXd u = lu.solve(f);
  const double fnorm = f.norm();
  if (fnorm > 0 && (A * u - f).norm() / fnorm > 1e-10)
    throw std::runtime_error("classical_solve: residual above 1e-10");
  return u;
}

Eigen::VectorXd classical_expm_apply(const Eigen::MatrixXd& M, double t,
                                     const Eigen::VectorXd& g) {
  if (M.rows() != M.cols() || M.rows() != g.size())
    throw std::invalid_argument("classical_expm_apply: dimension mismatch");
  if (M.rows() > 1024)
    throw std::invalid_argument("classical_expm_apply: matrix too large");

  if ((M - M.transpose()).cwiseAbs().maxCoeff() <= 1e-12) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    return es.eigenvectors() *
           (t * es.eigenvalues().array()).exp().matrix().asDiagonal() *
           (es.eigenvectors().transpose() * g);
  }

  // General path: scale so ||tM|| is small, Taylor to 1e-12, square back.
  const double norm = (t * M).cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const Eigen::MatrixXd S = (t / std::ldexp(1.0, squarings)) * M;
  Eigen::MatrixXd E = Eigen::MatrixXd::Identity(M.rows(), M.cols());
  Eigen::MatrixXd term = E;
  for (int k = 1; k <= 40; ++k) {
    term = (S * term) / k;
    E += term;
    if (term.cwiseAbs().maxCoeff() < 1e-12 * 0.5) break;
  }
  for (int s = 0; s < squarings; ++s) E = E * E;
  return E * g;
}

StateVector gaussian_initial(int N, double center, double width) {
  if (!(width > 0))
    throw std::invalid_argument("gaussian_initial: width must be > 0");
  const int n = log2_exact(N, "gaussian_initial");
  StateVector s(n);
  for (int k = 0; k < N; ++k) {
    const double d = (k - center) / width;
    s.amps[k] = std::exp(-0.5 * d * d);
  }
  s.amps /= s.norm();
  return s;
}

double relative_error(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("relative_error: length mismatch");
  const double nu = u.norm(), nv = v.norm();
  if (nu == 0.0 || nv == 0.0)
    throw std::invalid_argument("relative_error: zero vector");
  const Eigen::VectorXcd uh = u / nu, vh = v / nv;
  const cplx overlap = uh.dot(vh);  // <uh, vh>, conjugate-linear in uh.
  const cplx s =
      std::abs(overlap) > 0 ? cplx(std::conj(overlap) / std::abs(overlap)) : cplx(1.0);
  return (uh - s * vh).norm();
}

}  // namespace pbe
