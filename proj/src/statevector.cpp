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

#include "nhvqe/statevector.hpp"

#include <bit>
#include <cmath>

#include "nhvqe/errors.hpp"

namespace nhvqe {
namespace {

void check_state_qubits(std::size_t n) {
  if (n < 1) throw DomainError("state needs at least one qubit");
  if (n > kMaxStateQubits) {
    throw ResourceError("state on " + std::to_string(n) +
                        " qubits exceeds the limit of " +
                        std::to_string(kMaxStateQubits));
  }
}

void check_qubit(const StateVector& s, std::size_t q) {
  if (q >= s.num_qubits()) {
    throw DomainError("qubit " + std::to_string(q) + " out of range for " +
                      std::to_string(s.num_qubits()) + "-qubit state");
  }
}

void check_dimension(std::size_t dim, const PauliSum& s) {
  if (s.num_qubits() >= 64 || dim != (std::size_t{1} << s.num_qubits())) {
    throw DimensionError("vector of length " + std::to_string(dim) +
                         " does not match " + std::to_string(s.num_qubits()) +
                         "-qubit operator");
  }
}

Complex y_phase(int y_count) {
  switch (y_count & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void apply_single(std::span<Complex> amps, std::size_t target,
                  const Complex (&u)[2][2]) {
  const std::size_t bit = std::size_t{1} << target;
  for (std::size_t i0 = 0; i0 < amps.size(); ++i0) {
    if (i0 & bit) continue;
    const std::size_t i1 = i0 | bit;
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = u[0][0] * a0 + u[0][1] * a1;
    amps[i1] = u[1][0] * a0 + u[1][1] * a1;
  }
}

}  // namespace

std::string to_string(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::RX: return "RX(q" + std::to_string(gate.target) + ")";
    case GateKind::RY: return "RY(q" + std::to_string(gate.target) + ")";
    case GateKind::RZ: return "RZ(q" + std::to_string(gate.target) + ")";
    case GateKind::CNOT:
      return "CNOT(q" + std::to_string(gate.control.value_or(0)) + "->q" +
             std::to_string(gate.target) + ")";
  }
  return "?";
}

StateVector StateVector::zero(std::size_t num_qubits) {
  check_state_qubits(num_qubits);
  Amplitudes amps(std::size_t{1} << num_qubits, Complex(0.0, 0.0));
  amps[0] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits,
                                         Amplitudes amps) {
  check_state_qubits(num_qubits);
  if (amps.size() != (std::size_t{1} << num_qubits)) {
    throw DimensionError("expected " +
                         std::to_string(std::size_t{1} << num_qubits) +
                         " amplitudes, got " + std::to_string(amps.size()));
  }
  const double norm = std::sqrt(squared_norm(amps));
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw DomainError("state is not normalized (norm " + std::to_string(norm) +
                      ")");
  }
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::normalized(std::size_t num_qubits, Amplitudes amps) {
  const double norm = std::sqrt(squared_norm(amps));
  if (!(norm > 0.0)) throw DomainError("cannot normalize a zero vector");
  for (auto& a : amps) a /= norm;
  return from_amplitudes(num_qubits, std::move(amps));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

StateVector new_zero_state(std::size_t num_qubits) {
  return StateVector::zero(num_qubits);
}

StateVector apply_gate(StateVector state, const Gate& gate, double angle) {
  check_qubit(state, gate.target);
  std::span<Complex> amps(state.amps_);
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  switch (gate.kind) {
    case GateKind::RX: {
      const Complex u[2][2] = {{c, Complex(0.0, -s)}, {Complex(0.0, -s), c}};
      apply_single(amps, gate.target, u);
      break;
    }
    case GateKind::RY: {
      const Complex u[2][2] = {{c, -s}, {s, c}};
      apply_single(amps, gate.target, u);
      break;
    }
    case GateKind::RZ: {
      const Complex lo(c, -s);
      const Complex hi(c, s);
      const std::size_t bit = std::size_t{1} << gate.target;
      for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= (i & bit) ? hi : lo;
      }
      break;
    }
    case GateKind::CNOT: {
      if (!gate.control) throw DomainError("CNOT without a control qubit");
      check_qubit(state, *gate.control);
      if (*gate.control == gate.target) {
        throw DomainError("CNOT control equals target");
      }
      const std::size_t cbit = std::size_t{1} << *gate.control;
      const std::size_t tbit = std::size_t{1} << gate.target;
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
      }
      break;
    }
  }
  return state;
}

Amplitudes apply_pauli_sum(std::span<const Complex> v, const PauliSum& s) {
  check_dimension(v.size(), s);
  Amplitudes out(v.size(), Complex(0.0, 0.0));
  for (const auto& t : s.terms()) {
    const Complex base = t.coefficient * y_phase(t.string.y_count());
    const std::uint64_t x = t.string.x_mask();
    const std::uint64_t z = t.string.z_mask();
    for (std::uint64_t b = 0; b < v.size(); ++b) {
      const Complex w = (std::popcount(b & z) & 1) ? -base : base;
      out[b ^ x] += w * v[b];
    }
  }
  return out;
}

Amplitudes apply_pauli_sum(const StateVector& state, const PauliSum& s) {
  return apply_pauli_sum(state.amplitudes(), s);
}

Complex inner_product(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionError("inner_product: size mismatch");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double squared_norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& a : v) acc += std::norm(a);
  return acc;
}

double string_expectation(const StateVector& state, const PauliString& p) {
  const auto amps = state.amplitudes();
  if (p.num_qubits() != state.num_qubits()) {
    throw DimensionError("string_expectation: qubit counts differ");
  }
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  Complex acc(0.0, 0.0);
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    const Complex term = std::conj(amps[b ^ x]) * amps[b];
    acc += (std::popcount(b & z) & 1) ? -term : term;
  }
  return (y_phase(p.y_count()) * acc).real();
}

Complex expectation(const StateVector& state, const PauliSum& s,
                    NoiseSource& noise) {
  check_dimension(state.dimension(), s);
  if (std::abs(state.norm() - 1.0) > kNormTolerance) {
    throw DomainError("expectation requires a normalized state");
  }
  Complex total(0.0, 0.0);
  for (const auto& t : s.terms()) {
    double value = string_expectation(state, t.string);
    // The identity is never measured, so it carries no shot noise.
    if (!t.string.is_identity()) value += noise.draw();
    total += t.coefficient * value;
  }
  return total;
}

Complex expectation(const StateVector& state, const PauliSum& s) {
  NoiseSource exact(NoiseConfig{0.0, 0});
  return expectation(state, s, exact);
}

Complex expectation(const StateVector& state, const PauliSum& s,
                    const NoiseConfig& noise) {
  NoiseSource source(noise);
  return expectation(state, s, source);
}

}  // namespace nhvqe
