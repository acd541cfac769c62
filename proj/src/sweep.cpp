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

#include "nhvqe/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "nhvqe/errors.hpp"
#include "nhvqe/random.hpp"

namespace nhvqe {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("config key '" + std::string(key) + "': '" +
                    std::string(text) + "' is not a number");
}

std::uint64_t parse_uint(std::string_view key, std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("config key '" + std::string(key) + "': '" +
                      std::string(text) + "' is not a non-negative integer");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw DomainError("config key '" + std::string(key) + "': '" +
                    std::string(text) + "' is not a boolean");
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::EXACT: return "exact";
    case Method::VQE: return "vqe";
    case Method::BOTH: return "both";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "exact" || text == "EXACT") return Method::EXACT;
  if (text == "vqe" || text == "VQE") return Method::VQE;
  if (text == "both" || text == "BOTH") return Method::BOTH;
  throw DomainError("unknown method '" + std::string(text) + "'");
}

void SweepConfig::validate() const {
  if (n_list.empty()) throw DomainError("n_list is empty");
  if (gamma_steps < 2) throw DomainError("gamma_steps must be >= 2");
  if (!(gamma_start < gamma_end)) {
    throw DomainError("gamma_start must be below gamma_end");
  }
  if (workers < 1) throw DomainError("workers must be >= 1");
  if (!(noise.epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  if (depth && *depth < 1) throw DomainError("depth must be >= 1");
  const bool vqe = method != Method::EXACT;
  const bool exact = method != Method::VQE;
  for (std::size_t n : n_list) {
    if (n < 2) throw DomainError("spin counts must be >= 2");
    if (vqe && n > vqe_qubit_cap) {
      throw DomainError("VQE is capped at " + std::to_string(vqe_qubit_cap) +
                        " spins, got " + std::to_string(n));
    }
    if (exact && n > kExactQubitLimit) {
      throw DomainError("exact diagonalization is capped at " +
                        std::to_string(kExactQubitLimit) + " spins, got " +
                        std::to_string(n));
    }
  }
  if (vqe) solver.validate();
}

std::vector<double> SweepConfig::grid() const {
  std::vector<double> g(gamma_steps);
  const double step =
      (gamma_end - gamma_start) / static_cast<double>(gamma_steps - 1);
  for (std::size_t i = 0; i < gamma_steps; ++i) {
    g[i] = gamma_start + step * static_cast<double>(i);
  }
  g.back() = gamma_end;
  return g;
}

SweepRow evaluate_exact(ModelKind model, std::size_t n, double gamma,
                        std::uint64_t seed) {
  const PauliSum h = build_hamiltonian({n, gamma, gamma, model});
  const PauliSum mx = build_mx(n);
  const Spectrum spectrum = diagonalize(h);
  const EigenPair& ground = ground_pair(spectrum);
  SweepRow row;
  row.model = model;
  row.n = n;
  row.gamma = gamma;
  row.method = Method::EXACT;
  row.energy_re = ground.value.real();
  row.energy_im = ground.value.imag();
  row.mx = observable(ground, mx).real();
  row.chi_x = susceptibility(ground, mx);
  row.final_cost = ground.residual * ground.residual;
  row.seed = seed;
  return row;
}

SweepRow evaluate_vqe(ModelKind model, std::size_t n, double gamma,
                      const SweepConfig& config, std::uint64_t seed) {
  const PauliSum h = build_hamiltonian({n, gamma, gamma, model});
  const PauliSum mx = build_mx(n);
  const PauliSum mx2 = multiply_sums(mx, mx);
  const Circuit circuit =
      build_ansatz(n, config.depth.value_or(default_depth(n)));

  SolverConfig solver = config.solver;
  solver.init_seed = RngStream::derive_seed(seed, 0);
  solver.noise = {config.noise.epsilon, RngStream::derive_seed(seed, 1)};
  const SolveResult result = solve(h, circuit, solver);
  const RestartResult& ground = result.ground();

  NoiseSource measure(config.noise.epsilon, RngStream(seed).split(2));
  const double m1 = expectation(ground.state, mx, measure).real();
  const double m2 = expectation(ground.state, mx2, measure).real();

  SweepRow row;
  row.model = model;
  row.n = n;
  row.gamma = gamma;
  row.method = Method::VQE;
  row.energy_re = ground.energy.real();
  row.energy_im = ground.energy.imag();
  row.mx = m1;
  row.chi_x = m2 - m1 * m1;
  row.final_cost = ground.final_cost;
  row.seed = seed;
  return row;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<std::size_t> ns = config.n_list;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  const std::vector<double> gammas = config.grid();

  struct Job {
    std::size_t n;
    double gamma;
  };
  std::vector<Job> jobs;
  for (std::size_t n : ns) {
    for (double g : gammas) jobs.push_back({n, g});
  }

  std::vector<std::vector<SweepRow>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        const std::uint64_t seed = RngStream::derive_seed(config.master_seed, k);
        const Job& job = jobs[k];
        if (config.method != Method::VQE) {
          slots[k].push_back(evaluate_exact(config.model, job.n, job.gamma, seed));
        }
        if (config.method != Method::EXACT) {
          slots[k].push_back(
              evaluate_vqe(config.model, job.n, job.gamma, config, seed));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };

  const std::size_t threads = std::min(config.workers, jobs.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult out;
  for (auto& slot : slots) {
    for (auto& row : slot) out.rows.push_back(row);
  }
  return out;
}

SweepConfig parse_config(std::string_view text, SweepConfig base) {
  SweepConfig cfg = std::move(base);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "model") {
      cfg.model = parse_model_kind(value);
    } else if (key == "n_list" || key == "n") {
      cfg.n_list.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        cfg.n_list.push_back(static_cast<std::size_t>(
            parse_uint(key, trim(rest.substr(0, comma)))));
        rest = comma == std::string_view::npos ? std::string_view{}
                                               : rest.substr(comma + 1);
      }
    } else if (key == "gamma_start") {
      cfg.gamma_start = parse_double(key, value);
    } else if (key == "gamma_end") {
      cfg.gamma_end = parse_double(key, value);
    } else if (key == "gamma_steps" || key == "steps") {
      cfg.gamma_steps = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key == "method") {
      cfg.method = parse_method(value);
    } else if (key == "epsilon") {
      cfg.noise.epsilon = parse_double(key, value);
    } else if (key == "master_seed" || key == "seed") {
      cfg.master_seed = parse_uint(key, value);
    } else if (key == "depth") {
      cfg.depth = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key == "restarts") {
      cfg.solver.restarts = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key == "output_path" || key == "out") {
      cfg.output_path = std::string(value);
    } else if (key == "plot") {
      cfg.plot = parse_bool(key, value);
    } else if (key == "workers") {
      cfg.workers = static_cast<std::size_t>(parse_uint(key, value));
    } else {
      throw DomainError("config line " + std::to_string(line_no) +
                        ": unknown key '" + std::string(key) + "'");
    }
  }
  return cfg;
}

SweepConfig read_config_file(const std::filesystem::path& path,
                             SweepConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

}  // namespace nhvqe
