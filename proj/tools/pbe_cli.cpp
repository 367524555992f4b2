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

/**
 * @file pbe_cli.cpp
 * @brief Thin command-line front end over pbe::dispatch.
 *
 * All observable behaviour lives in the library; this binary only parses
 * flags, merges them over an optional JSON config file (flags win), and
 * forwards the result. Option values are recorded only when explicitly
 * passed, so library defaults and config-file values are not clobbered.
 */

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "pbe/experiments.hpp"

using nlohmann::json;

int main(int argc, char** argv) {
  CLI::App app{
      "pbe: block encodings of periodic-banded matrices and QSVT "
      "experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  app.add_option("--config", config_path,
                 "JSON config file; explicit flags take precedence")
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory (default: .)");
  app.add_option("--seed", seed, "seed for randomised inputs (default: 0)");

  json flag_params = json::object();
  const auto num = [&flag_params](CLI::App* cmd, const char* flag,
                                  const char* key, const char* desc) {
    cmd->add_option_function<double>(
        flag, [&flag_params, key](const double& v) { flag_params[key] = v; },
        desc);
  };
  const auto integer = [&flag_params](CLI::App* cmd, const char* flag,
                                      const char* key, const char* desc) {
    cmd->add_option_function<int>(
        flag, [&flag_params, key](const int& v) { flag_params[key] = v; },
        desc);
  };
  const auto text = [&flag_params](CLI::App* cmd, const char* flag,
                                   const char* key, const char* desc) {
    cmd->add_option_function<std::string>(
        flag,
        [&flag_params, key](const std::string& v) { flag_params[key] = v; },
        desc);
  };

  CLI::App* verify =
      app.add_subcommand("verify", "exact block check of U_C / U_S");
  integer(verify, "--n", "n", "work qubits");
  num(verify, "--omega", "omega", "sinusoid frequency");
  num(verify, "--phi", "phi", "sinusoid phase offset");

  CLI::App* p0 = app.add_subcommand(
      "p0-sweep", "ancilla success probability vs omega, simulated + closed");
  integer(p0, "--n", "n", "work qubits");
  integer(p0, "--points", "points", "omega samples over [0, 2pi)");
  text(p0, "--state", "state", "input state: uniform | basis | random");
  integer(p0, "--k", "k", "basis index for --state basis");

  CLI::App* scaling = app.add_subcommand(
      "gate-scaling", "transpiled counts: structured vs dense baseline");
  integer(scaling, "--n-max", "n-max", "largest work-register size");
  num(scaling, "--omega", "omega", "sinusoid frequency");

  CLI::App* elliptic =
      app.add_subcommand("elliptic", "QSVT solve of the elliptic problem");
  num(elliptic, "--k", "k", "condition-number target kappa");
  num(elliptic, "--epsilon", "epsilon", "polynomial approximation accuracy");
  num(elliptic, "--D", "D", "diffusion constant");
  num(elliptic, "--a0", "a0", "reaction offset");
  num(elliptic, "--omega-x", "omega-x", "spatial reaction frequency");
  integer(elliptic, "--N", "N", "grid size (power of two)");

  CLI::App* adr = app.add_subcommand(
      "adr", "QSVT time evolution of the advection-diffusion-reaction model");
  text(adr, "--t", "t", "comma list of times in units of tau_d");
  text(adr, "--profile", "profile", "reaction profile preset: a | b | c | d");
  num(adr, "--epsilon", "epsilon", "polynomial approximation accuracy");
  num(adr, "--D", "D", "diffusion constant");
  num(adr, "--a0", "a0", "mean reaction value");
  num(adr, "--c", "c", "advection speed (must be 0 for evolution)");
  num(adr, "--length", "length", "domain length");
  integer(adr, "--N", "N", "grid size (power of two)");
  num(adr, "--dt", "dt", "forward-Euler cross-check step");

  CLI::App* phases =
      app.add_subcommand("qsp-phases", "phase factors for a target function");
  text(phases, "--target", "target", "inverse | exp");
  num(phases, "--k", "k", "condition-number target (inverse)");
  num(phases, "--tau", "tau", "exponent scale (exp)");
  num(phases, "--epsilon", "epsilon", "polynomial approximation accuracy");

  CLI::App* exp_circ =
      app.add_subcommand("export-circuit", "serialise a named circuit as JSON");
  text(exp_circ, "--circuit", "circuit",
       "v | uc-select | uc-cnot | us | shift-left | shift-right | "
       "banded-example");
  integer(exp_circ, "--n", "n", "work qubits");
  num(exp_circ, "--omega", "omega", "sinusoid frequency");
  num(exp_circ, "--phi", "phi", "sinusoid phase offset");
  integer(exp_circ, "--power", "power", "shift power");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // Prints the usage message.
    return 2;
  }

  try {
    json file_params = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        throw std::runtime_error("cannot open config file " + config_path);
      }
      file_params = json::parse(in);
      if (!file_params.is_object()) {
        throw std::runtime_error("config file must hold a JSON object");
      }
    }
    // "out" and "seed" are CLI-level settings; lift them out of the config
    // so per-command key validation sees only experiment options.
    if (file_params.contains("out")) {
      if (app.count("--out") == 0) {
        out_dir = file_params.at("out").get<std::string>();
      }
      file_params.erase("out");
    }
    if (file_params.contains("seed")) {
      if (app.count("--seed") == 0) {
        seed = file_params.at("seed").get<std::uint64_t>();
      }
      file_params.erase("seed");
    }

    json params = std::move(file_params);
    params.update(flag_params);

    pbe::ExperimentConfig config;
    config.command = app.get_subcommands().front()->get_name();
    config.params = std::move(params);
    config.out_dir = out_dir;
    config.seed = seed;
    return pbe::dispatch(config);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
