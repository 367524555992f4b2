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

// End-to-end experiment drivers, the dispatch layer (option validation,
// artefact determinism), and CSV formatting.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pbe/circuit_json.hpp"
#include "pbe/csv.hpp"
#include "pbe/experiments.hpp"
#include "pbe/qsp.hpp"

namespace fs = std::filesystem;
using pbe::ExperimentConfig;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::path("tmp_tests") / name) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("format_double is lossless and stable") {
  CHECK(pbe::format_double(1.0) == "1");
  CHECK(pbe::format_double(0.1) == "0.10000000000000001");
  CHECK(pbe::format_double(-2.5e-300) == "-2.5e-300");
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 50; ++i) {
    const double x = dist(rng);
    CHECK(std::stod(pbe::format_double(x)) == x);
  }
}

TEST_CASE("emit_csv writes RFC-4180 rows") {
  TempDir dir("csv");
  const fs::path path = dir.path / "t.csv";
  pbe::emit_csv({"name", "value", "count"},
                {{std::string("plain"), 0.5, std::int64_t(3)},
                 {std::string("needs,\"quotes\""), 1.0, std::int64_t(-1)}},
                path.string());
  CHECK(slurp(path) ==
        "name,value,count\n"
        "plain,0.5,3\n"
        "\"needs,\"\"quotes\"\"\",1,-1\n");
  CHECK_THROWS(pbe::emit_csv({"a"}, {{0.5, 0.5}}, path.string()));
}

TEST_CASE("run_elliptic solves the model problem") {
  pbe::EllipticSpec spec;
  const pbe::QsvtRun run = pbe::run_elliptic(spec, 2.5, 1e-3);
  CHECK(run.problem_id == "elliptic-D1-k2.5");
  CHECK(run.parameter == 2.5);
  CHECK(run.degree % 2 == 1);
  CHECK(run.e_r < 0.2);  // Loose polynomial, loose solve.
  CHECK(run.success_prob > 0.0);
  CHECK(run.success_prob <= 1.0 + 1e-12);
  CHECK(run.output.norm() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(pbe::run_elliptic(spec, 0.5, 1e-3), std::invalid_argument);
}

TEST_CASE("run_adr evolves the reaction profile") {
  pbe::AdrSpec spec;
  spec.harmonics.push_back({1, 0.0, 0.01});
  const std::vector<pbe::QsvtRun> runs = pbe::run_adr(spec, {0.0, 1.0}, 1e-12);
  REQUIRE(runs.size() == 2);
  // t = 0 is the identity evolution: the output must be the input.
  CHECK(runs[0].e_r < 1e-8);
  CHECK(runs[0].degree == 0);
  CHECK(runs[1].e_r < 1e-6);
  CHECK(runs[1].parameter == 1.0);
  CHECK(runs[1].success_prob > 0.0);

  pbe::AdrSpec advective = spec;
  advective.c = 0.05;
  CHECK_THROWS_AS(pbe::run_adr(advective, {1.0}, 1e-12),
                  std::invalid_argument);
}

TEST_CASE("dispatch rejects unknown commands and options") {
  ExperimentConfig config;
  config.command = "frobnicate";
  CHECK_THROWS_AS(pbe::dispatch(config), std::invalid_argument);

  TempDir dir("reject");
  config.command = "elliptic";
  config.out_dir = dir.path.string();
  config.params = {{"k", 2.5}, {"bogus", 1}};
  CHECK_THROWS_WITH_AS(pbe::dispatch(config),
                       "unknown option 'bogus' for command 'elliptic'",
                       std::invalid_argument);

  // Wrongly typed values are attributed to their key.
  config.params = {{"k", "not-a-number"}};
  CHECK_THROWS_AS(pbe::dispatch(config), std::invalid_argument);
}

TEST_CASE("dispatch artefacts are byte-identical for a fixed config") {
  TempDir dir_a("det_a");
  TempDir dir_b("det_b");

  ExperimentConfig sweep;
  sweep.command = "p0-sweep";
  sweep.params = {{"n", 3}, {"points", 16}, {"state", "random"}};
  sweep.seed = 42;
  sweep.out_dir = dir_a.path.string();
  CHECK(pbe::dispatch(sweep) == 0);
  sweep.out_dir = dir_b.path.string();
  CHECK(pbe::dispatch(sweep) == 0);
  CHECK(slurp(dir_a.path / "p0_sweep.csv") ==
        slurp(dir_b.path / "p0_sweep.csv"));
  // A different seed draws a different random state.
  sweep.seed = 43;
  sweep.out_dir = dir_a.path.string();
  CHECK(pbe::dispatch(sweep) == 0);
  CHECK(slurp(dir_a.path / "p0_sweep.csv") !=
        slurp(dir_b.path / "p0_sweep.csv"));

  ExperimentConfig ell;
  ell.command = "elliptic";
  ell.params = {{"k", 2.5}, {"epsilon", 1e-3}};
  ell.out_dir = dir_a.path.string();
  CHECK(pbe::dispatch(ell) == 0);
  ell.out_dir = dir_b.path.string();
  CHECK(pbe::dispatch(ell) == 0);
  CHECK(slurp(dir_a.path / "elliptic.csv") ==
        slurp(dir_b.path / "elliptic.csv"));
  // Five columns: problem id, parameter, error, success, degree.
  const std::string csv = slurp(dir_a.path / "elliptic.csv");
  CHECK(csv.rfind("problem-id,k-or-t,e_r,success_prob,degree\n", 0) == 0);
}

TEST_CASE("dispatch writes loadable artefacts") {
  TempDir dir("artefacts");

  ExperimentConfig phases;
  phases.command = "qsp-phases";
  phases.params = {{"target", "inverse"}, {"k", 2.5}, {"epsilon", 1e-2}};
  phases.out_dir = dir.path.string();
  CHECK(pbe::dispatch(phases) == 0);
  const pbe::PhaseFactors loaded =
      pbe::PhaseFactors::from_json_string(slurp(dir.path / "phases.json"));
  CHECK(loaded.degree() > 0);
  CHECK(loaded.parity == pbe::Parity::Odd);

  ExperimentConfig circ;
  circ.command = "export-circuit";
  circ.params = {{"circuit", "uc-cnot"}, {"n", 3}, {"omega", 0.4}};
  circ.out_dir = dir.path.string();
  CHECK(pbe::dispatch(circ) == 0);
  const pbe::Circuit back =
      pbe::load_circuit((dir.path / "uc-cnot.json").string());
  CHECK(back.num_qubits == 4);  // Three work qubits plus the ancilla.
  CHECK(back.gates.size() == 3 * 3 + 3);

  ExperimentConfig ver;
  ver.command = "verify";
  ver.params = {{"n", 2}, {"omega", 1.1}, {"phi", 0.2}};
  ver.out_dir = dir.path.string();
  CHECK(pbe::dispatch(ver) == 0);
  const std::string report = slurp(dir.path / "verify_report.json");
  CHECK(report.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("adr dispatch accepts explicit harmonics") {
  TempDir dir("adr_harm");
  ExperimentConfig config;
  config.command = "adr";
  config.params = {{"t", "1"},
                   {"epsilon", 1e-10},
                   {"harmonics", nlohmann::json::array(
                                     {nlohmann::json::array({1, 0.0, 0.01})})}};
  config.out_dir = dir.path.string();
  CHECK(pbe::dispatch(config) == 0);
  const std::string csv = slurp(dir.path / "adr.csv");
  CHECK(csv.find("adr-D0.2-a0.1-N16,1,") != std::string::npos);
}
