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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nhvqe/ansatz.hpp"
#include "nhvqe/pauli.hpp"
#include "nhvqe/statevector.hpp"

namespace nhvqe {

/// Complex energy estimate E.
using Energy = Complex;

/// (H^dagger - E*)(H - E). Hermitian and positive semi-definite; its
/// expectation vanishes exactly on right eigenpairs of H.
PauliSum build_m_plus(const PauliSum& h, Energy e);

/// (H - E)(H^dagger - E*). Vanishes on left eigenpairs.
PauliSum build_m_minus(const PauliSum& h, Energy e);

/// Caches H^dagger H so that M+(E) can be rebuilt cheaply as E moves:
/// M+(E) = H^dagger H - E* H - E H^dagger + |E|^2.
class MPlusFactory {
 public:
  explicit MPlusFactory(PauliSum h);

  [[nodiscard]] const PauliSum& hamiltonian() const { return h_; }
  [[nodiscard]] PauliSum operator()(Energy e) const;

 private:
  PauliSum h_;
  PauliSum h_dag_;
  PauliSum h_dag_h_;
};

/// <phi(theta)|M|phi(theta)>, real part. `m` must be Hermitian.
double cost_of(const PauliSum& m, const Circuit& circuit,
               std::span<const double> theta, NoiseSource& noise);

/// C+(theta, E) = <phi(theta)|M+(E)|phi(theta)>.
double cost_plus(std::span<const double> theta, Energy e, const PauliSum& h,
                 const Circuit& circuit);
double cost_plus(std::span<const double> theta, Energy e, const PauliSum& h,
                 const Circuit& circuit, NoiseSource& noise);

/// ||(H - E)|phi(theta)>||^2, evaluated without expanding M+.
double residual_cost(std::span<const double> theta, Energy e,
                     const PauliSum& h, const Circuit& circuit);

/// argmin_E C+(theta, E) = <phi(theta)|H|phi(theta)>.
Energy optimal_energy(std::span<const double> theta, const PauliSum& h,
                      const Circuit& circuit);
Energy optimal_energy(std::span<const double> theta, const PauliSum& h,
                      const Circuit& circuit, NoiseSource& noise);

/// Parameter-shift gradient of <phi(theta)|M|phi(theta)>:
/// dC/dtheta_k = [C(theta_k + pi/2) - C(theta_k - pi/2)] / 2.
std::vector<double> parameter_shift_gradient(const PauliSum& m,
                                             const Circuit& circuit,
                                             std::span<const double> theta,
                                             NoiseSource& noise);

/// dC+/dtheta at fixed E.
std::vector<double> gradient(std::span<const double> theta, Energy e,
                             const PauliSum& h, const Circuit& circuit);
std::vector<double> gradient(std::span<const double> theta, Energy e,
                             const PauliSum& h, const Circuit& circuit,
                             NoiseSource& noise);

enum class OptimizerKind { GD, ADAM };

struct Stage {
  std::size_t iterations = 0;
  double learning_rate = 0.0;
  OptimizerKind optimizer = OptimizerKind::GD;
};

/// How E is initialized before the first stage.
///
/// `Rayleigh` starts from optimal_energy of the random initial state and
/// tracks the closed-form optimum throughout; it lands on whichever
/// eigenpair is nearest the random start. `Target` holds E at `target` for
/// the whole first stage, pulling the state towards the eigenvalue nearest
/// the target, then switches to the closed form. `Ground` is `Target` at
/// ground_target(h).
struct EnergySeed {
  enum class Kind { Rayleigh, Target, Ground };
  Kind kind = Kind::Ground;
  Energy target{0.0, 0.0};

  static EnergySeed rayleigh() { return {Kind::Rayleigh, {}}; }
  static EnergySeed at(Energy e) { return {Kind::Target, e}; }
  static EnergySeed ground() { return {}; }
};

struct SolverConfig {
  std::vector<Stage> stages = default_stages();
  std::size_t restarts = 5;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  double convergence_cost = 1e-8;
  double convergence_grad = 1e-6;
  /// Restarts whose noise-free final cost is at or below this count as
  /// converged when picking the ground-labelled eigenpair.
  double ground_cost_tolerance = 1e-6;
  /// Converged energies whose real parts (then |Im|) differ by less than
  /// this are treated as tied in the ground pick.
  double ground_tie_tolerance = 1e-3;
  NoiseConfig noise;
  std::uint64_t init_seed = 0;
  EnergySeed energy_seed;

  static std::vector<Stage> default_stages();

  /// Throws DomainError on a malformed configuration.
  void validate() const;
};

struct RestartResult {
  Energy energy;
  ParameterVector theta;
  StateVector state;
  double final_cost = 0.0;  // noise-free C+ at (theta, energy)
  std::vector<double> cost_history;
  std::uint64_t seed = 0;
};

struct SolveResult {
  Energy energy;
  ParameterVector theta;
  StateVector state;
  double final_cost = 0.0;
  std::vector<double> cost_history;
  std::size_t restart_index = 0;  // lowest noise-free final cost
  std::uint64_t seed = 0;

  std::vector<RestartResult> restarts;
  /// Converged restart with the smallest Re E, near-ties broken by smaller
  /// |Im E| then smaller Im E. Falls back to restart_index when no restart
  /// converged.
  std::size_t ground_index = 0;

  [[nodiscard]] bool is_ground() const { return ground_index == restart_index; }
  [[nodiscard]] const RestartResult& ground() const {
    return restarts.at(ground_index);
  }
};

/// Staged minimization of C+ over theta with E tracked in closed form.
/// Restarts are ranked by noise-free final cost even for noisy training.
SolveResult solve(const PauliSum& h, const Circuit& circuit,
                  const SolverConfig& config);

/// A real energy below every eigenvalue's real part, -sum_k |c_k|.
Energy ground_target(const PauliSum& h);

}  // namespace nhvqe
