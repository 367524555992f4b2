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

#include "pbe/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pbe/block_verify.hpp"
#include "pbe/chebyshev.hpp"
#include "pbe/circuit_json.hpp"
#include "pbe/csv.hpp"
#include "pbe/diag_encodings.hpp"
#include "pbe/lcu.hpp"
#include "pbe/qsvt.hpp"
#include "pbe/shift.hpp"
#include "pbe/simulate.hpp"
#include "pbe/transpile.hpp"

namespace pbe {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/**
 * Independent residual gate on the phase factors: evaluate the QSP response
 * on a fresh 501-point grid in [-1, 1] (not the solver's collocation nodes)
 * and insist it matches the Chebyshev expansion. A quietly corrupted phase
 * vector would otherwise produce plausible-looking but wrong experiment
 * errors, which is the worst possible failure mode for a verification tool.
 */
void check_phase_residual(const PhaseFactors& phases,
                          const ChebyshevPoly& poly) {
  double worst = 0.0;
  for (int i = 0; i <= 500; ++i) {
    const double x = std::cos(M_PI * i / 500.0);
    worst =
        std::max(worst, std::abs(qsp_eval_scalar(phases, x) - cheb_eval(poly, x)));
  }
  if (worst > 1e-8) {
    throw std::runtime_error(
        "phase factors fail the 501-point residual gate: " +
        format_double(worst));
  }
}

/** Embeds `work_in` at the flag offset, applies U, returns the flag block. */
Eigen::VectorXcd apply_block(const BlockEncoding& be,
                             const Eigen::VectorXcd& work_in) {
  const Eigen::Index n_states = Eigen::Index(1) << be.n_work;
  if (work_in.size() != n_states) {
    throw std::invalid_argument("apply_block: work state has wrong dimension");
  }
  StateVector state(be.total_qubits());
  state.amps.setZero();
  const Eigen::Index offset = static_cast<Eigen::Index>(be.flag) << be.n_work;
  state.amps.segment(offset, n_states) = work_in;
  apply_circuit(state, be.circuit);
  return state.amps.segment(offset, n_states);
}

// ---------------------------------------------------------------------------
// Parameter access. Configs arrive as merged JSON; numbers may be spelled as
// JSON numbers or numeric strings (flag passthrough), everything else is an
// error attributed to the offending key.

double as_double(const json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string& s = v.get<std::string>();
    try {
      std::size_t pos = 0;
      const double d = std::stod(s, &pos);
      if (pos == s.size()) return d;
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("option '" + key + "' must be a number");
}

double num_param(const json& p, const char* key, double dflt) {
  if (!p.contains(key)) return dflt;
  return as_double(p.at(key), key);
}

int int_param(const json& p, const char* key, int dflt) {
  const double d = num_param(p, key, static_cast<double>(dflt));
  const int i = static_cast<int>(std::llround(d));
  if (std::abs(d - i) > 1e-12) {
    throw std::invalid_argument("option '" + std::string(key) +
                                "' must be an integer");
  }
  return i;
}

std::string str_param(const json& p, const char* key,
                      const std::string& dflt) {
  if (!p.contains(key)) return dflt;
  const json& v = p.at(key);
  if (!v.is_string()) {
    throw std::invalid_argument("option '" + std::string(key) +
                                "' must be a string");
  }
  return v.get<std::string>();
}

std::vector<double> list_param(const json& p, const char* key,
                               std::vector<double> dflt) {
  if (!p.contains(key)) return dflt;
  const json& v = p.at(key);
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(as_double(e, key));
  } else if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_string()) {
    std::stringstream ss(v.get<std::string>());  // comma-separated flag form
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      out.push_back(as_double(json(tok), key));
    }
  } else {
    throw std::invalid_argument("option '" + std::string(key) +
                                "' must be a list of numbers");
  }
  if (out.empty()) {
    throw std::invalid_argument("option '" + std::string(key) +
                                "' must not be empty");
  }
  return out;
}

void require_keys(const json& params, const std::string& command,
                  std::initializer_list<const char*> allowed) {
  for (auto it = params.begin(); it != params.end(); ++it) {
    const bool known =
        std::any_of(allowed.begin(), allowed.end(),
                    [&](const char* k) { return it.key() == k; });
    if (!known) {
      throw std::invalid_argument("unknown option '" + it.key() +
                                  "' for command '" + command + "'");
    }
  }
}

/** Reaction profiles around the mean: sine, cosine, square-ish, triangular. */
std::vector<FourierTerm> profile_harmonics(const std::string& profile) {
  if (profile == "a") return {{1, 0.0, 0.01}};
  if (profile == "b") return {{1, 0.01, 0.0}};
  if (profile == "c") return {{1, 0.0, 0.01}, {3, 0.0, 0.01 / 3.0}};
  if (profile == "d") return {{1, 0.0, -0.01}, {3, 0.0, 0.01 / 9.0}};
  throw std::invalid_argument("unknown profile '" + profile +
                              "' (expected a, b, c, or d)");
}

const std::vector<std::string> kResultsHeader = {"problem-id", "k-or-t", "e_r",
                                                 "success_prob", "degree"};

CsvRow results_row(const QsvtRun& run) {
  return {run.problem_id, run.parameter, run.e_r, run.success_prob,
          static_cast<std::int64_t>(run.degree)};
}

// ---------------------------------------------------------------------------
// Commands. Each writes its artefacts under out_dir and returns the exit
// code; argument errors throw std::invalid_argument.

int cmd_verify(const json& p, const fs::path& out_dir) {
  const int n = int_param(p, "n", 3);
  const double omega = num_param(p, "omega", M_PI / 4.0);
  const double phi = num_param(p, "phi", 0.0);
  const SinusoidSpec spec{omega, phi};
  const int n_states = 1 << n;

  Eigen::MatrixXcd cos_target = Eigen::MatrixXcd::Zero(n_states, n_states);
  Eigen::MatrixXcd sin_target = Eigen::MatrixXcd::Zero(n_states, n_states);
  for (int k = 0; k < n_states; ++k) {
    cos_target(k, k) = std::cos(omega * k + phi);
    sin_target(k, k) = std::sin(omega * k + phi);
  }

  struct Check {
    const char* name;
    VerificationReport report;
  };
  const double tol = 1e-12;  // The constructions are exact up to round-off.
  std::vector<Check> checks;
  checks.push_back(
      {"uc-select",
       verify_block(build_UC(n, spec, UcVariant::Select), cos_target, tol)});
  checks.push_back({"uc-cnot", verify_block(build_UC(n, spec), cos_target, tol)});
  checks.push_back({"us", verify_block(build_US(n, spec), sin_target, tol)});

  bool all_passed = true;
  json doc;
  doc["n"] = n;
  doc["omega"] = omega;
  doc["phi"] = phi;
  doc["checks"] = json::array();
  for (const Check& c : checks) {
    all_passed = all_passed && c.report.passed;
    json entry = json::parse(c.report.to_json_string());
    entry["name"] = c.name;
    doc["checks"].push_back(entry);
    std::printf("%-10s max_abs_error=%.3e success_prob=%.6f %s\n", c.name,
                c.report.max_abs_error, c.report.success_probability,
                c.report.passed ? "ok" : "FAILED");
  }
  doc["passed"] = all_passed;

  std::ofstream out(out_dir / "verify_report.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write verify_report.json");
  out << doc.dump(2) << "\n";
  return all_passed ? 0 : 1;
}

int cmd_p0_sweep(const json& p, const fs::path& out_dir, std::uint64_t seed) {
  const int n = int_param(p, "n", 3);
  const int points = int_param(p, "points", 64);
  const std::string state = str_param(p, "state", "uniform");
  const int k = int_param(p, "k", 0);
  if (n < 1 || n > 12) {
    throw std::invalid_argument("p0-sweep: n out of range [1, 12]");
  }
  if (points < 1) throw std::invalid_argument("p0-sweep: points must be >= 1");
  const int n_states = 1 << n;
  if (k < 0 || k >= n_states) {
    throw std::invalid_argument("p0-sweep: basis index k out of range");
  }

  Eigen::VectorXcd psi;
  if (state == "uniform") {
    psi = Eigen::VectorXcd::Constant(n_states,
                                     1.0 / std::sqrt(double(n_states)));
  } else if (state == "basis") {
    psi = Eigen::VectorXcd::Zero(n_states);
    psi(k) = 1.0;
  } else if (state == "random") {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    psi.resize(n_states);
    for (int i = 0; i < n_states; ++i) psi(i) = cplx(dist(rng), dist(rng));
    psi /= psi.norm();
  } else {
    throw std::invalid_argument(
        "p0-sweep: state must be uniform, basis, or random");
  }

  std::vector<CsvRow> rows;
  rows.reserve(points);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double omega = 2.0 * M_PI * i / points;
    const BlockEncoding be = build_UC(n, SinusoidSpec{omega, 0.0});
    const double simulated = success_probability(be, psi);
    const double closed = p0_closed_form(psi, omega);
    worst = std::max(worst, std::abs(simulated - closed));
    rows.push_back({omega, simulated, closed});
  }
  emit_csv({"omega", "p0_simulated", "p0_closed_form"}, rows,
           (out_dir / "p0_sweep.csv").string());
  std::printf("p0-sweep: n=%d %s input, max |simulated - closed| = %.3e\n", n,
              state.c_str(), worst);
  return worst <= 1e-10 ? 0 : 1;
}

int cmd_gate_scaling(const json& p, const fs::path& out_dir) {
  const int n_max = int_param(p, "n-max", 10);
  const double omega = num_param(p, "omega", M_PI / 7.0);
  if (n_max < 2 || n_max > 14) {
    throw std::invalid_argument("gate-scaling: n-max out of range [2, 14]");
  }

  std::vector<CsvRow> rows;
  bool follows_law = true;
  for (int n = 2; n <= n_max; ++n) {
    const GateCounts ours =
        transpile_count(build_UC(n, SinusoidSpec{omega, 0.0}).circuit);
    Eigen::VectorXd values(1 << n);
    for (int i = 0; i < (1 << n); ++i) values(i) = std::cos(omega * i);
    const GateCounts baseline =
        transpile_count(build_dense_baseline(values).circuit);
    follows_law = follows_law && ours.total() == 3 * n + 3;
    rows.push_back({static_cast<std::int64_t>(n),
                    static_cast<std::int64_t>(ours.total()),
                    static_cast<std::int64_t>(baseline.total())});
  }
  emit_csv({"n", "count_ours", "count_baseline"}, rows,
           (out_dir / "gate_scaling.csv").string());
  std::printf("gate-scaling: structured counts %s 3n+3; dense baseline grows "
              "with the grid size\n",
              follows_law ? "match" : "DEVIATE from");
  return follows_law ? 0 : 1;
}

int cmd_elliptic(const json& p, const fs::path& out_dir) {
  EllipticSpec spec;
  spec.D = num_param(p, "D", spec.D);
  spec.a0 = num_param(p, "a0", spec.a0);
  spec.omega_x = num_param(p, "omega-x", spec.omega_x);
  spec.N = int_param(p, "N", spec.N);
  const double kappa = num_param(p, "k", 3.0);
  const double epsilon = num_param(p, "epsilon", 1e-64);

  const QsvtRun run = run_elliptic(spec, kappa, epsilon);
  emit_csv(kResultsHeader, {results_row(run)},
           (out_dir / "elliptic.csv").string());
  std::printf("%s: degree=%d e_r=%.3e success_prob=%.3e\n",
              run.problem_id.c_str(), run.degree, run.e_r, run.success_prob);
  return 0;
}

int cmd_adr(const json& p, const fs::path& out_dir) {
  AdrSpec spec;
  spec.D = num_param(p, "D", spec.D);
  spec.c = num_param(p, "c", spec.c);
  spec.a0 = num_param(p, "a0", spec.a0);
  spec.length = num_param(p, "length", spec.length);
  spec.N = int_param(p, "N", spec.N);
  spec.dt = num_param(p, "dt", spec.dt);
  if (p.contains("harmonics")) {
    const json& h = p.at("harmonics");
    if (!h.is_array()) {
      throw std::invalid_argument("adr: harmonics must be an array");
    }
    for (const auto& e : h) {
      if (!e.is_array() || e.size() != 3) {
        throw std::invalid_argument(
            "adr: each harmonics entry must be [n, a, b]");
      }
      const double hn = as_double(e[0], "harmonics");
      if (hn != std::floor(hn)) {
        throw std::invalid_argument("adr: harmonic index must be an integer");
      }
      spec.harmonics.push_back({static_cast<int>(hn),
                                as_double(e[1], "harmonics"),
                                as_double(e[2], "harmonics")});
    }
  } else {
    spec.harmonics = profile_harmonics(str_param(p, "profile", "a"));
  }
  const std::vector<double> t_list = list_param(p, "t", {1.0, 5.0, 10.0});
  const double epsilon = num_param(p, "epsilon", 1e-12);

  const std::vector<QsvtRun> runs = run_adr(spec, t_list, epsilon);
  std::vector<CsvRow> rows;
  rows.reserve(runs.size());
  for (const QsvtRun& run : runs) {
    rows.push_back(results_row(run));
    std::printf("%s t/tau_d=%g: degree=%d e_r=%.3e success_prob=%.3e\n",
                run.problem_id.c_str(), run.parameter, run.degree, run.e_r,
                run.success_prob);
  }
  emit_csv(kResultsHeader, rows, (out_dir / "adr.csv").string());
  return 0;
}

int cmd_qsp_phases(const json& p, const fs::path& out_dir) {
  const std::string target = str_param(p, "target", "inverse");
  json doc;
  if (target == "inverse") {
    const double kappa = num_param(p, "k", 3.0);
    const double epsilon = num_param(p, "epsilon", 1e-8);
    const ChebyshevPoly poly = approx_poly(inverse_target(kappa), epsilon);
    const PhaseFactors phases = qsp_phases(poly);
    check_phase_residual(phases, poly);
    doc = json::parse(phases.to_json_string());
    std::printf("qsp-phases: inverse k=%g degree=%d residual=%.3e\n", kappa,
                phases.degree(), phases.residual);
  } else if (target == "exp") {
    const double tau = num_param(p, "tau", 5.0);
    const double epsilon = num_param(p, "epsilon", 1e-12);
    const ChebyshevPoly q = approx_poly(exp_target(tau), epsilon);
    const auto [even, odd] = parity_split(q);
    const PhaseFactors ph_even = qsp_phases(even);
    check_phase_residual(ph_even, even);
    doc["even"] = json::parse(ph_even.to_json_string());
    if (odd.coeffs(odd.coeffs.size() - 1) != 0.0) {
      const PhaseFactors ph_odd = qsp_phases(odd);
      check_phase_residual(ph_odd, odd);
      doc["odd"] = json::parse(ph_odd.to_json_string());
    } else {
      doc["odd"] = nullptr;
    }
    std::printf("qsp-phases: exp tau=%g even degree=%d%s\n", tau,
                ph_even.degree(),
                doc["odd"].is_null() ? " (odd part vanishes)" : "");
  } else {
    throw std::invalid_argument("qsp-phases: target must be inverse or exp");
  }
  std::ofstream out(out_dir / "phases.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write phases.json");
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_export_circuit(const json& p, const fs::path& out_dir) {
  const std::string name = str_param(p, "circuit", "uc-cnot");
  const int n = int_param(p, "n", 3);
  const double omega = num_param(p, "omega", M_PI / 4.0);
  const double phi = num_param(p, "phi", 0.0);
  const int power = int_param(p, "power", 1);
  const SinusoidSpec spec{omega, phi};

  Circuit circ(1);
  if (name == "v") {
    circ = build_V(n, spec);
  } else if (name == "uc-select") {
    circ = build_UC(n, spec, UcVariant::Select).circuit;
  } else if (name == "uc-cnot") {
    circ = build_UC(n, spec).circuit;
  } else if (name == "us") {
    circ = build_US(n, spec).circuit;
  } else if (name == "shift-left") {
    circ = build_shift(n, ShiftSpec{ShiftDirection::Left, power});
  } else if (name == "shift-right") {
    circ = build_shift(n, ShiftSpec{ShiftDirection::Right, power});
  } else if (name == "banded-example") {
    // The worked tridiagonal example: (1/2) C(pi/2) + (1/4) L + (1/4) R.
    BandedSpec banded;
    banded.sinusoid = SinusoidSpec{M_PI / 2.0, 0.0};
    banded.weights[0] = 0.5;
    banded.weights[1] = 0.25;
    banded.weights[2] = 0.25;
    circ = build_banded(std::max(n, 2), banded).circuit;
  } else {
    throw std::invalid_argument(
        "export-circuit: unknown circuit '" + name +
        "' (expected v, uc-select, uc-cnot, us, shift-left, shift-right, or "
        "banded-example)");
  }

  const fs::path path = out_dir / (name + ".json");
  save_circuit(circ, path.string());
  std::printf("export-circuit: wrote %s (%d qubits, %zu gates)\n",
              path.string().c_str(), circ.num_qubits, circ.gates.size());
  return 0;
}

}  // namespace

QsvtRun run_elliptic(const EllipticSpec& spec, double kappa, double epsilon) {
  spec.check();
  if (!(kappa > 1.0)) {
    throw std::invalid_argument("run_elliptic: kappa must exceed 1");
  }

  const Eigen::MatrixXd A = build_elliptic_matrix(spec);
  const BlockEncoding be = build_elliptic_encoding(spec);

  const ChebyshevPoly poly = approx_poly(inverse_target(kappa), epsilon);
  const PhaseFactors phases = qsp_phases(poly);
  check_phase_residual(phases, poly);

  const BlockEncoding enc = qsvt_real_encoding(be, phases);

  const int n_states = spec.N;
  const Eigen::VectorXcd rhs =
      Eigen::VectorXcd::Constant(n_states, 1.0 / std::sqrt(double(n_states)));
  Eigen::VectorXcd out = apply_block(enc, rhs);

  QsvtRun run;
  char id[64];
  std::snprintf(id, sizeof id, "elliptic-D%g-k%g", spec.D, kappa);
  run.problem_id = id;
  run.parameter = kappa;
  run.success_prob = out.squaredNorm();
  run.degree = phases.degree();

  const Eigen::VectorXd u =
      classical_solve(A, Eigen::VectorXd::Ones(n_states));
  run.e_r = relative_error(u.cast<cplx>(), out);
  if (out.norm() > 0) out /= out.norm();
  run.output = std::move(out);
  return run;
}

std::vector<QsvtRun> run_adr(const AdrSpec& spec,
                             const std::vector<double>& t_list,
                             double epsilon) {
  spec.check(AdrVariant::Reaction);
  if (spec.c != 0.0) {
    throw std::invalid_argument(
        "run_adr: advection must vanish (the resolvent of the singular-value "
        "transform matches the eigenvalue transform only for a symmetric "
        "generator)");
  }

  const AdrSystem sys = build_adr_matrix(spec, AdrVariant::Reaction);
  double alpha_m = 0.0;
  const BlockEncoding be =
      build_adr_shifted_encoding(spec, AdrVariant::Reaction, &alpha_m);

  const StateVector g0 =
      gaussian_initial(spec.N, (spec.N - 1) / 2.0, spec.N / 8.0);
  const Eigen::VectorXd g_real = g0.amps.real();

  char id[96];
  std::snprintf(id, sizeof id, "adr-D%g-a%g-N%d", spec.D, spec.a0, spec.N);

  std::vector<QsvtRun> runs;
  runs.reserve(t_list.size());
  for (double t : t_list) {
    if (t < 0) throw std::invalid_argument("run_adr: negative time");
    const double t_phys = t * spec.tau_d();
    // q(y) = exp(tau (y-1)/2) / 2 with tau = alpha_M t turns the shifted
    // encoding B = (2M + alpha I)/alpha into exp(M t)/2 on the work block.
    const double tau = alpha_m * t_phys;

    const ChebyshevPoly q = approx_poly(exp_target(tau), epsilon);
    const auto [even, odd] = parity_split(q);
    const PhaseFactors ph_even = qsp_phases(even);
    check_phase_residual(ph_even, even);

    const bool has_odd = odd.coeffs(odd.coeffs.size() - 1) != 0.0;
    PhaseFactors ph_odd;
    if (has_odd) {
      ph_odd = qsp_phases(odd);
      check_phase_residual(ph_odd, odd);
    }

    const BlockEncoding enc =
        qsvt_exp_encoding(be, ph_even, has_odd ? &ph_odd : nullptr);
    Eigen::VectorXcd out = apply_block(enc, g0.amps);

    QsvtRun run;
    run.problem_id = id;
    run.parameter = t;
    run.success_prob = out.squaredNorm();
    run.degree = std::max(ph_even.degree(), has_odd ? ph_odd.degree() : 0);

    const Eigen::VectorXd u = classical_expm_apply(sys.matrix, t_phys, g_real);
    run.e_r = relative_error(u.cast<cplx>(), out);
    if (out.norm() > 0) out /= out.norm();
    run.output = std::move(out);
    runs.push_back(std::move(run));
  }
  return runs;
}

int dispatch(const ExperimentConfig& config) {
  const json& p = config.params;
  if (!p.is_object()) {
    throw std::invalid_argument("dispatch: params must be a JSON object");
  }
  const fs::path out_dir(config.out_dir.empty() ? "." : config.out_dir);
  fs::create_directories(out_dir);

  if (config.command == "verify") {
    require_keys(p, config.command, {"n", "omega", "phi"});
    return cmd_verify(p, out_dir);
  }
  if (config.command == "p0-sweep") {
    require_keys(p, config.command, {"n", "points", "state", "k"});
    return cmd_p0_sweep(p, out_dir, config.seed);
  }
  if (config.command == "gate-scaling") {
    require_keys(p, config.command, {"n-max", "omega"});
    return cmd_gate_scaling(p, out_dir);
  }
  if (config.command == "elliptic") {
    require_keys(p, config.command, {"k", "epsilon", "D", "a0", "omega-x", "N"});
    return cmd_elliptic(p, out_dir);
  }
  if (config.command == "adr") {
    require_keys(p, config.command, {"t", "profile", "harmonics", "epsilon",
                                     "D", "a0", "c", "length", "N", "dt"});
    return cmd_adr(p, out_dir);
  }
  if (config.command == "qsp-phases") {
    require_keys(p, config.command, {"target", "k", "tau", "epsilon"});
    return cmd_qsp_phases(p, out_dir);
  }
  if (config.command == "export-circuit") {
    require_keys(p, config.command, {"circuit", "n", "omega", "phi", "power"});
    return cmd_export_circuit(p, out_dir);
  }
  throw std::invalid_argument("unknown command '" + config.command + "'");
}

}  // namespace pbe
