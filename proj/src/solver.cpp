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

#include "nhvqe/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nhvqe/errors.hpp"
#include "nhvqe/random.hpp"

namespace nhvqe {
namespace {

PauliSum shifted(const PauliSum& h, Energy e) {
  return add_sums(h, PauliSum::identity(h.num_qubits(), -e));
}

double l2_norm(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

void check_sizes(const PauliSum& h, const Circuit& circuit) {
  if (h.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("operator acts on " + std::to_string(h.num_qubits()) +
                         " qubits, circuit on " +
                         std::to_string(circuit.num_qubits()));
  }
}

NoiseSource exact_source() { return NoiseSource(NoiseConfig{}); }

class Adam {
 public:
  Adam(std::size_t size, const SolverConfig& config)
      : b1_(config.adam_beta1), b2_(config.adam_beta2), eps_(config.adam_eps),
        m_(size, 0.0), v_(size, 0.0) {}

  void step(std::vector<double>& theta, std::span<const double> grad,
            double lr) {
    ++t_;
    const double c1 = 1.0 - std::pow(b1_, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(b2_, static_cast<double>(t_));
    for (std::size_t k = 0; k < theta.size(); ++k) {
      m_[k] = b1_ * m_[k] + (1.0 - b1_) * grad[k];
      v_[k] = b2_ * v_[k] + (1.0 - b2_) * grad[k] * grad[k];
      theta[k] -= lr * (m_[k] / c1) / (std::sqrt(v_[k] / c2) + eps_);
    }
  }

 private:
  double b1_, b2_, eps_;
  std::vector<double> m_, v_;
  std::size_t t_ = 0;
};

RestartResult run_restart(const MPlusFactory& factory, const Circuit& circuit,
                          const SolverConfig& config, std::size_t restart) {
  const PauliSum& h = factory.hamiltonian();
  RngStream init = RngStream(config.init_seed).split(restart);
  NoiseSource noise(config.noise.epsilon,
                    RngStream(config.noise.seed).split(restart));

  ParameterVector theta(circuit.param_count());
  for (auto& t : theta) t = init.uniform(-std::numbers::pi, std::numbers::pi);

  const auto kind = config.energy_seed.kind;
  const bool hold_first = kind != EnergySeed::Kind::Rayleigh;
  Energy e = kind == EnergySeed::Kind::Target ? config.energy_seed.target
             : kind == EnergySeed::Kind::Ground
                 ? ground_target(h)
                 : optimal_energy(theta, h, circuit, noise);

  std::vector<double> history;
  for (std::size_t s = 0; s < config.stages.size(); ++s) {
    const Stage& stage = config.stages[s];
    const bool hold_energy = hold_first && s == 0;
    Adam adam(theta.size(), config);
    for (std::size_t it = 0; it < stage.iterations; ++it) {
      const PauliSum m = factory(e);
      const double cost = cost_of(m, circuit, theta, noise);
      const auto grad = parameter_shift_gradient(m, circuit, theta, noise);
      history.push_back(cost);
      const bool converged =
          (!hold_energy && cost < config.convergence_cost) ||
          l2_norm(grad) < config.convergence_grad;
      if (converged) break;
      if (stage.optimizer == OptimizerKind::ADAM) {
        adam.step(theta, grad, stage.learning_rate);
      } else {
        for (std::size_t k = 0; k < theta.size(); ++k) {
          theta[k] -= stage.learning_rate * grad[k];
        }
      }
      if (!hold_energy) e = optimal_energy(theta, h, circuit, noise);
    }
    if (hold_energy) e = optimal_energy(theta, h, circuit, noise);
  }

  RestartResult out{e, theta, prepare(circuit, theta), 0.0, {},
                    init.seed()};
  out.final_cost = cost_plus(theta, e, h, circuit);
  history.push_back(out.final_cost);
  out.cost_history = std::move(history);
  return out;
}

}  // namespace

PauliSum build_m_plus(const PauliSum& h, Energy e) {
  return multiply_sums(shifted(adjoint(h), std::conj(e)), shifted(h, e));
}

PauliSum build_m_minus(const PauliSum& h, Energy e) {
  return multiply_sums(shifted(h, e), shifted(adjoint(h), std::conj(e)));
}

MPlusFactory::MPlusFactory(PauliSum h)
    : h_(std::move(h)), h_dag_(adjoint(h_)), h_dag_h_(multiply_sums(h_dag_, h_)) {}

PauliSum MPlusFactory::operator()(Energy e) const {
  const std::size_t n = h_.num_qubits();
  std::vector<PauliTerm> terms(h_dag_h_.terms().begin(), h_dag_h_.terms().end());
  for (const auto& t : h_.terms()) {
    terms.push_back({-std::conj(e) * t.coefficient, t.string});
  }
  for (const auto& t : h_dag_.terms()) {
    terms.push_back({-e * t.coefficient, t.string});
  }
  terms.push_back({std::norm(e), PauliString(n)});
  return PauliSum(n, std::move(terms));
}

double cost_of(const PauliSum& m, const Circuit& circuit,
               std::span<const double> theta, NoiseSource& noise) {
  check_sizes(m, circuit);
  return expectation(prepare(circuit, theta), m, noise).real();
}

double cost_plus(std::span<const double> theta, Energy e, const PauliSum& h,
                 const Circuit& circuit, NoiseSource& noise) {
  check_sizes(h, circuit);
  return cost_of(build_m_plus(h, e), circuit, theta, noise);
}

double cost_plus(std::span<const double> theta, Energy e, const PauliSum& h,
                 const Circuit& circuit) {
  auto noise = exact_source();
  return cost_plus(theta, e, h, circuit, noise);
}

double residual_cost(std::span<const double> theta, Energy e,
                     const PauliSum& h, const Circuit& circuit) {
  check_sizes(h, circuit);
  const StateVector phi = prepare(circuit, theta);
  return squared_norm(apply_pauli_sum(phi, shifted(h, e)));
}

Energy optimal_energy(std::span<const double> theta, const PauliSum& h,
                      const Circuit& circuit, NoiseSource& noise) {
  check_sizes(h, circuit);
  return expectation(prepare(circuit, theta), h, noise);
}

Energy optimal_energy(std::span<const double> theta, const PauliSum& h,
                      const Circuit& circuit) {
  auto noise = exact_source();
  return optimal_energy(theta, h, circuit, noise);
}

std::vector<double> parameter_shift_gradient(const PauliSum& m,
                                             const Circuit& circuit,
                                             std::span<const double> theta,
                                             NoiseSource& noise) {
  check_sizes(m, circuit);
  if (theta.size() != circuit.param_count()) {
    throw DimensionError("gradient: parameter count mismatch");
  }
  std::vector<double> shifted_theta(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  constexpr double kShift = std::numbers::pi / 2;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    shifted_theta[k] = theta[k] + kShift;
    const double plus = cost_of(m, circuit, shifted_theta, noise);
    shifted_theta[k] = theta[k] - kShift;
    const double minus = cost_of(m, circuit, shifted_theta, noise);
    shifted_theta[k] = theta[k];
    grad[k] = 0.5 * (plus - minus);
  }
  return grad;
}

std::vector<double> gradient(std::span<const double> theta, Energy e,
                             const PauliSum& h, const Circuit& circuit,
                             NoiseSource& noise) {
  return parameter_shift_gradient(build_m_plus(h, e), circuit, theta, noise);
}

std::vector<double> gradient(std::span<const double> theta, Energy e,
                             const PauliSum& h, const Circuit& circuit) {
  auto noise = exact_source();
  return gradient(theta, e, h, circuit, noise);
}

std::vector<Stage> SolverConfig::default_stages() {
  return {{300, 0.1, OptimizerKind::ADAM},
          {500, 0.02, OptimizerKind::ADAM},
          {500, 0.005, OptimizerKind::ADAM},
          {2000, 0.001, OptimizerKind::ADAM}};
}

void SolverConfig::validate() const {
  if (stages.empty()) throw DomainError("solver needs at least one stage");
  for (const auto& s : stages) {
    if (!(s.learning_rate > 0.0)) {
      throw DomainError("learning rates must be positive");
    }
  }
  if (restarts < 1) throw DomainError("restarts must be >= 1");
  if (!(convergence_cost > 0.0) || !(convergence_grad > 0.0)) {
    throw DomainError("convergence thresholds must be positive");
  }
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0) ||
      !(adam_beta2 >= 0.0 && adam_beta2 < 1.0) || !(adam_eps > 0.0)) {
    throw DomainError("invalid Adam constants");
  }
  if (!(noise.epsilon >= 0.0)) throw DomainError("noise epsilon must be >= 0");
  if (!(ground_cost_tolerance > 0.0) || !(ground_tie_tolerance >= 0.0)) {
    throw DomainError("ground-selection tolerances must be positive");
  }
}

SolveResult solve(const PauliSum& h, const Circuit& circuit,
                  const SolverConfig& config) {
  config.validate();
  check_sizes(h, circuit);
  const MPlusFactory factory(h);

  std::vector<RestartResult> restarts;
  restarts.reserve(config.restarts);
  for (std::size_t r = 0; r < config.restarts; ++r) {
    restarts.push_back(run_restart(factory, circuit, config, r));
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts.size(); ++r) {
    if (restarts[r].final_cost < restarts[best].final_cost) best = r;
  }
  const double tie = config.ground_tie_tolerance;
  auto lower = [tie](Energy a, Energy b) {
    if (a.real() < b.real() - tie) return true;
    if (a.real() > b.real() + tie) return false;
    const double abs_a = std::abs(a.imag());
    const double abs_b = std::abs(b.imag());
    if (abs_a < abs_b - tie) return true;
    if (abs_a > abs_b + tie) return false;
    return a.imag() < b.imag();
  };
  std::optional<std::size_t> ground;
  for (std::size_t r = 0; r < restarts.size(); ++r) {
    if (restarts[r].final_cost > config.ground_cost_tolerance) continue;
    if (!ground || lower(restarts[r].energy, restarts[*ground].energy)) {
      ground = r;
    }
  }

  const RestartResult& win = restarts[best];
  SolveResult out{win.energy,     win.theta, win.state,
                  win.final_cost, win.cost_history, best,
                  win.seed,       {},        ground.value_or(best)};
  out.restarts = std::move(restarts);
  return out;
}

Energy ground_target(const PauliSum& h) { return {-h.one_norm(), 0.0}; }

}  // namespace nhvqe
