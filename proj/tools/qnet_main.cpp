// Copyright qnet authors
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

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnet/algorithms.hpp"
#include "qnet/compiler.hpp"
#include "qnet/error.hpp"
#include "qnet/json_io.hpp"
#include "qnet/linalg.hpp"
#include "qnet/network.hpp"
#include "qnet/registers.hpp"
#include "qnet/reports.hpp"
#include "qnet/rng.hpp"
#include "qnet/schrodinger.hpp"
#include "qnet/verify.hpp"

namespace {

using qnet::Json;

struct GlobalFlags {
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  std::string output = "json";
};

void print_report(const Json& j, const GlobalFlags& flags) {
  std::cout << qnet::emit_report(j, flags.output == "pretty") << '\n';
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

qnet::Potential parse_potential(const std::string& spec) {
  qnet::Potential pot;
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "zero") {
    pot.kind = qnet::Potential::Kind::Zero;
  } else if (name == "const") {
    pot.kind = qnet::Potential::Kind::Constant;
    pot.constant = std::stod(args);
  } else if (name == "harmonic") {
    pot.kind = qnet::Potential::Kind::Harmonic;
    pot.omega = std::stod(args);
  } else if (name == "well") {
    const std::vector<double> v = parse_numbers(args);
    if (v.size() != 2) {
      throw qnet::InvalidInput("well potential needs depth,width");
    }
    pot.kind = qnet::Potential::Kind::Well;
    pot.depth = v[0];
    pot.width = v[1];
  } else if (name == "file") {
    pot.kind = qnet::Potential::Kind::Tabulated;
    const Json j = qnet::load_json_file(args);
    pot.table = j.at("values").get<std::vector<double>>();
  } else {
    throw qnet::InvalidInput("unknown potential form '" + name + "'");
  }
  return pot;
}

qnet::CVec parse_initial(const std::string& spec, const qnet::Grid& grid) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "gaussian") {
    double x0 = 0.5 * grid.length_l;
    double sigma = 0.1 * grid.length_l;
    double k0 = 0.0;
    if (!args.empty()) {
      const std::vector<double> v = parse_numbers(args);
      if (v.size() != 3) {
        throw qnet::InvalidInput("gaussian initial needs x0,sigma,k0");
      }
      x0 = v[0];
      sigma = v[1];
      k0 = v[2];
    }
    return qnet::gaussian_packet(grid, x0, sigma, k0);
  }
  if (name == "basis") {
    const std::size_t m = std::stoul(args);
    return qnet::basis_vector(grid.points_n, m);
  }
  if (name == "file") {
    const qnet::AugmentedState s =
        qnet::state_from_json(qnet::load_json_file(args));
    return qnet::project_aux(s, 0);
  }
  throw qnet::InvalidInput("unknown initial form '" + name + "'");
}

Json amplitudes_json(const qnet::CVec& v) {
  Json out = Json::array();
  for (const qnet::Complex& z : v) {
    out.push_back(Json::array({z.real(), z.imag()}));
  }
  return out;
}

int run_verify(const GlobalFlags& flags, const std::string& scope) {
  const qnet::VerificationReport report =
      qnet::run_verify_suite(scope, flags.seed);
  print_report(qnet::verification_to_json(report), flags);
  return report.all_passed() ? 0 : 1;
}

int run_compile(const GlobalFlags& flags, const std::string& input,
                const std::string& output, const std::string& form) {
  const qnet::Matrix u = qnet::matrix_from_json(qnet::load_json_file(input));
  qnet::Network net =
      form == "exchange" ? qnet::exchange_form(u) : qnet::q_of(u);
  qnet::save_json_file(output, qnet::network_to_json(net));
  Json j;
  j["input"] = input;
  j["output"] = output;
  j["form"] = form;
  j["dim"] = net.dim();
  j["elements"] = net.size();
  print_report(j, flags);
  return 0;
}

int run_qft(const GlobalFlags& flags, std::size_t qubits, bool verify) {
  const qnet::Network net = qnet::qft_network(qubits);
  const qnet::Matrix f = qnet::qft_matrix(qubits);
  Json j;
  j["qubits"] = qubits;
  j["dim"] = f.rows();
  j["elements"] = net.size();
  bool passed = true;
  if (verify) {
    const qnet::Matrix gram =
        qnet::conj_transpose(f) * f;
    const double unitarity_err =
        qnet::max_abs_diff(gram, qnet::Matrix::identity(f.rows()));
    qnet::Rng rng(flags.seed);
    double action_err = 0.0;
    const qnet::RegisterLayout layout({f.rows()}, true);
    for (int rep = 0; rep < 10; ++rep) {
      const qnet::CVec psi = qnet::random_state(rng, f.rows());
      const qnet::AugmentedState out =
          qnet::evaluate(net, qnet::make_augmented(psi, layout));
      action_err = std::max(
          action_err, qnet::max_abs_diff(qnet::project_aux(out, 1),
                                         qnet::mat_apply(f, psi)));
    }
    j["unitarity_error"] = unitarity_err;
    j["network_vs_dense_error"] = action_err;
    j["tolerance"] = flags.tolerance;
    passed = unitarity_err <= flags.tolerance &&
             action_err <= flags.tolerance;
    j["passed"] = passed;
  }
  print_report(j, flags);
  return passed ? 0 : 1;
}

int run_grover(const GlobalFlags& flags, std::size_t qubits,
               std::size_t target, std::optional<std::size_t> iterations,
               bool trace) {
  const qnet::GroverReport report =
      qnet::grover_run(qubits, target, iterations);
  Json j = qnet::grover_report_to_json(report);
  if (!trace) j.erase("per_iteration_probs");
  print_report(j, flags);
  return 0;
}

int run_shor(const GlobalFlags& flags, std::uint64_t n, std::uint64_t a,
             std::optional<std::size_t> qubits,
             std::optional<std::uint64_t> seed,
             std::optional<std::uint64_t> fixed_m, bool distribution) {
  const std::size_t k = qubits.value_or(qnet::shor_default_qubits(n));
  qnet::ShorMeasurement mode;
  if (distribution) {
    mode.kind = qnet::ShorMeasurement::Kind::Distribution;
  } else if (fixed_m.has_value()) {
    mode.kind = qnet::ShorMeasurement::Kind::FixedM;
    mode.exponent_m = *fixed_m;
  } else {
    mode.kind = qnet::ShorMeasurement::Kind::Sample;
    mode.seed = seed.value_or(flags.seed);
  }
  const qnet::ShorReport report = qnet::shor_run(n, a, k, mode);
  print_report(qnet::shor_report_to_json(report), flags);
  return 0;
}

int run_schrodinger(const GlobalFlags& flags, std::size_t grid_n,
                    double length, double mass, const std::string& potential,
                    double dt, double total_t, const std::string& initial,
                    bool compare, bool renormalize) {
  const qnet::Grid grid(grid_n, length);
  qnet::EvolutionSpec spec;
  spec.mass_mu = mass;
  spec.dt = dt;
  spec.total_t = total_t;
  spec.potential = parse_potential(potential);

  const qnet::CVec psi0 = parse_initial(initial, grid);
  const std::size_t steps = spec.steps();

  // Step the evolution through the euler-step subnetwork so the norm
  // history comes from the network path itself.
  const qnet::Network step_net = qnet::euler_step_network(grid, spec);
  const qnet::RegisterLayout layout({grid.points_n}, true);
  qnet::CVec psi = psi0;
  std::vector<double> norms{qnet::norm2(psi)};
  for (std::size_t s = 0; s < steps; ++s) {
    const qnet::AugmentedState out =
        qnet::evaluate(step_net, qnet::make_augmented(psi, layout));
    psi = qnet::project_aux(out, 1, renormalize);
    norms.push_back(qnet::norm2(psi));
  }

  Json j;
  j["grid"] = grid.points_n;
  j["length"] = grid.length_l;
  j["mass"] = mass;
  j["dt"] = dt;
  j["t"] = total_t;
  j["steps"] = steps;
  j["potential"] = potential;
  j["renormalize"] = renormalize;
  j["norm_history"] = norms;
  j["final_state"] = amplitudes_json(psi);
  if (compare) {
    j["comparison"] = qnet::comparison_to_json(
        qnet::compare_exact(grid, spec, psi0));
  }
  print_report(j, flags);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scalable uniform quantum network construction toolkit"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "global random seed");
  app.add_option("--tolerance", flags.tolerance,
                 "pass/fail tolerance for --verify style checks");
  app.add_option("--output", flags.output, "report style")
      ->check(CLI::IsMember({"json", "pretty"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  std::string scope = "all";
  verify_cmd->add_option("--scope", scope, "suite scope")
      ->check(CLI::IsMember(qnet::verify_scopes()));

  // compile
  auto* compile_cmd =
      app.add_subcommand("compile", "matrix JSON -> network IR JSON");
  std::string compile_in, compile_out;
  std::string form = "natural";
  compile_cmd->add_option("input", compile_in, "matrix JSON file")
      ->required();
  compile_cmd->add_option("output", compile_out, "network IR output file")
      ->required();
  compile_cmd->add_option("--form", form, "element form")
      ->check(CLI::IsMember({"natural", "exchange"}));

  // qft
  auto* qft_cmd = app.add_subcommand("qft", "Fourier-transform network");
  std::size_t qft_qubits = 3;
  bool qft_verify = false;
  qft_cmd->add_option("--qubits", qft_qubits, "register qubits")->required();
  qft_cmd->add_flag("--verify", qft_verify, "run the dense-oracle diff");

  // grover
  auto* grover_cmd = app.add_subcommand("grover", "search pipeline");
  std::size_t grover_qubits = 3;
  std::size_t grover_target = 0;
  std::optional<std::size_t> grover_iterations;
  bool grover_trace = false;
  grover_cmd->add_option("--qubits", grover_qubits)->required();
  grover_cmd->add_option("--target", grover_target)->required();
  grover_cmd->add_option("--iterations", grover_iterations);
  grover_cmd->add_flag("--trace", grover_trace,
                       "include the per-iteration probabilities");

  // shor
  auto* shor_cmd = app.add_subcommand("shor", "factoring pipeline");
  std::uint64_t shor_n = 15;
  std::uint64_t shor_a = 7;
  std::optional<std::size_t> shor_qubits;
  std::optional<std::uint64_t> shor_seed;
  std::optional<std::uint64_t> shor_fixed_m;
  bool shor_distribution = false;
  shor_cmd->add_option("--n", shor_n, "number to factor")->required();
  shor_cmd->add_option("--a", shor_a, "base")->required();
  shor_cmd->add_option("--qubits", shor_qubits, "first-register qubits");
  auto* seed_opt = shor_cmd->add_option("--seed", shor_seed,
                                        "sample both measurements");
  auto* fixed_opt = shor_cmd->add_option(
      "--fixed-m", shor_fixed_m, "fix the second register to a^m mod N");
  auto* dist_opt = shor_cmd->add_flag("--distribution", shor_distribution,
                                      "exact peak distribution");
  seed_opt->excludes(fixed_opt)->excludes(dist_opt);
  fixed_opt->excludes(dist_opt);

  // schrodinger
  auto* sch_cmd = app.add_subcommand("schrodinger", "discretized evolution");
  std::size_t sch_grid = 64;
  double sch_length = 8.0;
  double sch_mass = 1.0;
  std::string sch_potential = "zero";
  double sch_dt = 0.001;
  double sch_t = 0.1;
  std::string sch_initial = "gaussian";
  bool sch_compare = false;
  bool sch_renorm = false;
  sch_cmd->add_option("--grid", sch_grid, "grid points (power of two)")
      ->required();
  sch_cmd->add_option("--length", sch_length, "box length")->required();
  sch_cmd->add_option("--mass", sch_mass, "particle mass")->required();
  sch_cmd->add_option("--potential", sch_potential,
                      "zero|const:c|harmonic:omega|well:depth,width|file:p");
  sch_cmd->add_option("--dt", sch_dt, "time step")->required();
  sch_cmd->add_option("--t", sch_t, "total time")->required();
  sch_cmd->add_option("--initial", sch_initial,
                      "gaussian:x0,sigma,k0|basis:m|file:p");
  sch_cmd->add_flag("--compare-exact", sch_compare,
                    "error report against the exact propagator");
  sch_cmd->add_flag("--renormalize", sch_renorm,
                    "normalize the state after every step");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_cmd->parsed()) return run_verify(flags, scope);
    if (compile_cmd->parsed()) {
      return run_compile(flags, compile_in, compile_out, form);
    }
    if (qft_cmd->parsed()) return run_qft(flags, qft_qubits, qft_verify);
    if (grover_cmd->parsed()) {
      return run_grover(flags, grover_qubits, grover_target,
                        grover_iterations, grover_trace);
    }
    if (shor_cmd->parsed()) {
      return run_shor(flags, shor_n, shor_a, shor_qubits, shor_seed,
                      shor_fixed_m, shor_distribution);
    }
    if (sch_cmd->parsed()) {
      return run_schrodinger(flags, sch_grid, sch_length, sch_mass,
                             sch_potential, sch_dt, sch_t, sch_initial,
                             sch_compare, sch_renorm);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
