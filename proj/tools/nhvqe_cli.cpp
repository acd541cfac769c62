// Copyright 2026 The nhvqe Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nhvqe/errors.hpp"
#include "nhvqe/exact.hpp"
#include "nhvqe/model.hpp"
#include "nhvqe/solver.hpp"
#include "nhvqe/sweep.hpp"

namespace {

using namespace nhvqe;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitThreshold = 2;

struct Flags {
  std::string config;
  std::string model;
  std::string n;
  double gamma = 0.0;
  double gamma_start = 0.0;
  double gamma_end = 0.0;
  std::size_t steps = 0;
  std::string method;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::size_t restarts = 0;
  std::string out;
  bool plot = false;
  std::size_t workers = 0;
  std::string energy_seed;

  CLI::Option* gamma_opt = nullptr;
  CLI::Option* gamma_start_opt = nullptr;
  CLI::Option* gamma_end_opt = nullptr;
  CLI::Option* steps_opt = nullptr;
  CLI::Option* method_opt = nullptr;
  CLI::Option* epsilon_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* depth_opt = nullptr;
  CLI::Option* restarts_opt = nullptr;
  CLI::Option* workers_opt = nullptr;
  CLI::Option* plot_opt = nullptr;
};

void add_model_flags(CLI::App& app, Flags& f) {
  app.add_option("--model", f.model, "tim or nh-tim");
  app.add_option("--n", f.n, "spin count, or comma-separated list for sweeps");
  f.gamma_opt = app.add_option("--gamma", f.gamma,
                               "field strength (Gamma or Gamma_I)");
  f.gamma_start_opt = app.add_option("--gamma-start", f.gamma_start);
}

void add_solver_flags(CLI::App& app, Flags& f) {
  f.epsilon_opt = app.add_option("--epsilon", f.epsilon,
                                 "uniform measurement-noise half-width");
  f.seed_opt = app.add_option("--seed", f.seed, "master RNG seed");
  f.depth_opt = app.add_option("--depth", f.depth, "ansatz layers");
  f.restarts_opt = app.add_option("--restarts", f.restarts);
  app.add_option("--energy-seed", f.energy_seed, "ground (default) or rayleigh");
}

void add_sweep_flags(CLI::App& app, Flags& f) {
  app.add_option("--config", f.config, "flat key = value config file");
  f.gamma_end_opt = app.add_option("--gamma-end", f.gamma_end);
  f.steps_opt = app.add_option("--steps", f.steps, "grid points");
  f.method_opt = app.add_option("--method", f.method, "vqe, exact or both");
  app.add_option("--out", f.out, "output CSV path");
  f.plot_opt = app.add_flag("--plot", f.plot, "also write SVG plots");
  f.workers_opt = app.add_option("--workers", f.workers, "parallel workers");
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma - start);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw DomainError("--n: '" + item + "' is not a spin count");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

SolverConfig solver_from(const Flags& f, SolverConfig base = {}) {
  if (f.restarts_opt->count()) base.restarts = f.restarts;
  if (f.epsilon_opt->count()) base.noise.epsilon = f.epsilon;
  if (f.seed_opt->count()) {
    base.init_seed = f.seed;
    base.noise.seed = f.seed;
  }
  if (f.energy_seed == "rayleigh") {
    base.energy_seed = EnergySeed::rayleigh();
  } else if (!f.energy_seed.empty() && f.energy_seed != "ground") {
    throw DomainError("--energy-seed must be ground or rayleigh");
  }
  return base;
}

SweepConfig sweep_from(const Flags& f) {
  SweepConfig cfg;
  if (!f.config.empty()) cfg = read_config_file(f.config, cfg);
  if (!f.model.empty()) cfg.model = parse_model_kind(f.model);
  if (!f.n.empty()) cfg.n_list = parse_n_list(f.n);
  if (f.gamma_start_opt->count()) cfg.gamma_start = f.gamma_start;
  if (f.gamma_end_opt->count()) cfg.gamma_end = f.gamma_end;
  if (f.steps_opt->count()) cfg.gamma_steps = f.steps;
  if (f.method_opt->count()) cfg.method = parse_method(f.method);
  if (f.epsilon_opt->count()) cfg.noise.epsilon = f.epsilon;
  if (f.seed_opt->count()) cfg.master_seed = f.seed;
  if (f.depth_opt->count()) cfg.depth = f.depth;
  if (!f.out.empty()) cfg.output_path = f.out;
  if (f.plot_opt->count()) cfg.plot = f.plot;
  if (f.workers_opt->count()) cfg.workers = f.workers;
  cfg.solver = solver_from(f, cfg.solver);
  return cfg;
}

ModelConfig model_from(const Flags& f) {
  ModelConfig m;
  m.kind = f.model.empty() ? ModelKind::TIM : parse_model_kind(f.model);
  const auto ns = parse_n_list(f.n.empty() ? "5" : f.n);
  if (ns.size() != 1) throw DomainError("--n takes a single value here");
  m.n = ns.front();
  const double g = f.gamma_opt->count() ? f.gamma : f.gamma_start;
  m.gamma = g;
  m.gamma_i = g;
  return m;
}

void print_complex(const char* label, Complex z) {
  std::printf("%-14s %.12g %+.12gi\n", label, z.real(), z.imag());
}

int run_solve(const Flags& f, const std::string& history_path) {
  const ModelConfig m = model_from(f);
  if (m.n > kMaxStateQubits) throw DomainError("--n too large for the VQE");
  const PauliSum h = build_hamiltonian(m);
  const Circuit circuit =
      build_ansatz(m.n, f.depth_opt->count() ? f.depth : default_depth(m.n));
  const SolverConfig cfg = solver_from(f);
  const SolveResult r = solve(h, circuit, cfg);
  const PauliSum mx = build_mx(m.n);
  const RestartResult& g = r.ground();

  std::printf("model          %s n=%zu field=%g\n",
              std::string(to_string(m.kind)).c_str(), m.n,
              m.kind == ModelKind::TIM ? m.gamma : m.gamma_i);
  std::printf("parameters     %zu (depth %zu)\n", circuit.param_count(),
              f.depth_opt->count() ? f.depth : default_depth(m.n));
  print_complex("energy", r.energy);
  std::printf("final_cost     %.6e\n", r.final_cost);
  std::printf("restart        %zu of %zu%s\n", r.restart_index, r.restarts.size(),
              r.is_ground() ? " (ground)" : "");
  std::printf("seed           %llu\n", static_cast<unsigned long long>(r.seed));
  print_complex("ground_energy", g.energy);
  std::printf("ground_cost    %.6e (restart %zu)\n", g.final_cost, r.ground_index);
  std::printf("mx             %.12g\n", observable(g.state.amplitudes(), mx).real());
  std::printf("chi_x          %.12g\n", susceptibility(g.state.amplitudes(), mx));

  if (!history_path.empty()) {
    std::ofstream out(history_path, std::ios::binary);
    if (!out) throw IoError("cannot open " + history_path + " for writing");
    out << "iteration,cost\n";
    char buf[64];
    for (std::size_t k = 0; k < r.cost_history.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", k, r.cost_history[k]);
      out << buf;
    }
  }
  return kExitOk;
}

int run_exact(const Flags& f, bool biorthogonal) {
  const ModelConfig m = model_from(f);
  const PauliSum h = build_hamiltonian(m);
  const Spectrum spectrum = diagonalize(h);
  const EigenPair& g = ground_pair(spectrum);
  const PauliSum mx = build_mx(m.n);
  std::printf("model          %s n=%zu field=%g\n",
              std::string(to_string(m.kind)).c_str(), m.n,
              m.kind == ModelKind::TIM ? m.gamma : m.gamma_i);
  print_complex("ground_energy", g.value);
  std::printf("residual       %.3e\n", g.residual);
  std::printf("mx             %.12g\n", observable(g, mx).real());
  std::printf("chi_x          %.12g\n", susceptibility(g, mx));
  if (biorthogonal) {
    print_complex("mx_biorth", biorthogonal_observable(h, g, mx));
  }
  return kExitOk;
}

void emit(const SweepResult& result, const SweepConfig& cfg) {
  if (cfg.output_path.empty()) {
    std::cout << to_csv(result);
    return;
  }
  write_csv(result, cfg.output_path);
  if (cfg.plot && !result.rows.empty()) {
    std::filesystem::path base(cfg.output_path);
    base.replace_extension();
    render_svg(result, Quantity::MX, base.string() + ".mx.svg");
    render_svg(result, Quantity::CHI_X, base.string() + ".chi_x.svg");
  }
}

int run_sweep_cmd(const Flags& f) {
  const SweepConfig cfg = sweep_from(f);
  emit(run_sweep(cfg), cfg);
  return kExitOk;
}

int run_compare(const Flags& f, const std::string& input, double threshold) {
  SweepResult result;
  if (!input.empty()) {
    result = read_csv(input);
  } else {
    SweepConfig cfg = sweep_from(f);
    cfg.method = Method::BOTH;
    result = run_sweep(cfg);
    if (!cfg.output_path.empty()) emit(result, cfg);
  }
  const ComparisonSummary summary = compare(result);
  std::cout << summary.to_string();
  std::printf("max |dMx| %.6e (threshold %.6g)\n", summary.max_mx_deviation,
              threshold);
  return summary.max_mx_deviation > threshold ? kExitThreshold : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-Hermitian VQE for transverse-field Ising chains"};
  app.require_subcommand(1);

  Flags solve_flags, exact_flags, sweep_flags, compare_flags;
  std::string history_path, compare_input;
  bool biorthogonal = false;
  double threshold = 0.1;

  auto* solve_cmd = app.add_subcommand("solve", "run the VQE on one instance");
  add_model_flags(*solve_cmd, solve_flags);
  add_solver_flags(*solve_cmd, solve_flags);
  solve_cmd->add_option("--history", history_path, "write the cost history CSV");

  auto* exact_cmd = app.add_subcommand("exact", "diagonalize one instance");
  add_model_flags(*exact_cmd, exact_flags);
  exact_cmd->add_flag("--biorthogonal", biorthogonal,
                      "also print the left/right <Mx>");

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a field grid");
  add_model_flags(*sweep_cmd, sweep_flags);
  add_solver_flags(*sweep_cmd, sweep_flags);
  add_sweep_flags(*sweep_cmd, sweep_flags);

  auto* compare_cmd =
      app.add_subcommand("compare", "audit VQE against exact diagonalization");
  add_model_flags(*compare_cmd, compare_flags);
  add_solver_flags(*compare_cmd, compare_flags);
  add_sweep_flags(*compare_cmd, compare_flags);
  compare_cmd->add_option("--in", compare_input, "audit an existing sweep CSV");
  compare_cmd->add_option("--threshold", threshold, "max allowed |dMx|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*solve_cmd) return run_solve(solve_flags, history_path);
    if (*exact_cmd) return run_exact(exact_flags, biorthogonal);
    if (*sweep_cmd) return run_sweep_cmd(sweep_flags);
    if (*compare_cmd) return run_compare(compare_flags, compare_input, threshold);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
