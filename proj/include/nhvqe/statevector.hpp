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
#include <span>
#include <vector>

#include "nhvqe/gate.hpp"
#include "nhvqe/pauli.hpp"
#include "nhvqe/random.hpp"

namespace nhvqe {

inline constexpr std::size_t kMaxStateQubits = 14;

/// Tolerance on | ||psi|| - 1 | accepted as "normalized".
inline constexpr double kNormTolerance = 1e-10;

/// Unnormalized complex vector, e.g. the image of a state under a PauliSum.
using Amplitudes = std::vector<Complex>;

/// A normalized n-qubit pure state; basis index bit j is qubit j.
class StateVector {
 public:
  /// |0...0>.
  static StateVector zero(std::size_t num_qubits);

  /// Validates length 2^n and unit norm.
  static StateVector from_amplitudes(std::size_t num_qubits, Amplitudes amps);

  /// Rescales `amps` to unit norm first; throws on a zero vector.
  static StateVector normalized(std::size_t num_qubits, Amplitudes amps);

  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::size_t dimension() const { return amps_.size(); }
  [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
  [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }
  [[nodiscard]] double norm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

  friend StateVector apply_gate(StateVector state, const Gate& gate,
                                double angle);

 private:
  StateVector(std::size_t n, Amplitudes amps)
      : num_qubits_(n), amps_(std::move(amps)) {}

  std::size_t num_qubits_ = 0;
  Amplitudes amps_;
};

/// |0...0> on `num_qubits` qubits.
StateVector new_zero_state(std::size_t num_qubits);

/// Applies one gate. `angle` is used by rotations and ignored by CNOT.
StateVector apply_gate(StateVector state, const Gate& gate, double angle = 0.0);

/// sum_k c_k P_k |v>, term by term without a dense matrix.
Amplitudes apply_pauli_sum(std::span<const Complex> v, const PauliSum& s);
Amplitudes apply_pauli_sum(const StateVector& state, const PauliSum& s);

/// <u|v>.
Complex inner_product(std::span<const Complex> u, std::span<const Complex> v);
double squared_norm(std::span<const Complex> v);

/// <psi|P|psi> for a single string. Real because P is Hermitian.
double string_expectation(const StateVector& state, const PauliString& p);

struct NoiseConfig {
  double epsilon = 0.0;  // half-width of the uniform interval; 0 = exact
  std::uint64_t seed = 0;
};

/// Per-measurement noise: every non-identity string expectation gets an
/// independent draw from Uniform(-epsilon, epsilon).
class NoiseSource {
 public:
  explicit NoiseSource(const NoiseConfig& config)
      : epsilon_(config.epsilon), rng_(config.seed) {}
  NoiseSource(double epsilon, RngStream rng)
      : epsilon_(epsilon), rng_(std::move(rng)) {}

  [[nodiscard]] double epsilon() const { return epsilon_; }
  [[nodiscard]] bool active() const { return epsilon_ > 0.0; }

  double draw() { return active() ? rng_.uniform(-epsilon_, epsilon_) : 0.0; }

 private:
  double epsilon_;
  RngStream rng_;
};

/// Exact sum_k c_k <psi|P_k|psi>.
Complex expectation(const StateVector& state, const PauliSum& s);

/// Noisy estimate drawing from a caller-owned stream.
Complex expectation(const StateVector& state, const PauliSum& s,
                    NoiseSource& noise);

/// Noisy estimate from a fresh stream seeded by `noise.seed`.
Complex expectation(const StateVector& state, const PauliSum& s,
                    const NoiseConfig& noise);

}  // namespace nhvqe
