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

#include "nhvqe/ansatz.hpp"

#include <cmath>

#include "nhvqe/errors.hpp"

namespace nhvqe {

Circuit::Circuit(std::size_t num_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
  if (num_qubits == 0) throw DomainError("circuit needs at least one qubit");
  std::vector<int> owners;
  for (const auto& g : gates_) {
    if (g.target >= num_qubits) throw DomainError("gate target out of range");
    if (g.kind == GateKind::CNOT) {
      if (!g.control || *g.control >= num_qubits || *g.control == g.target) {
        throw DomainError("CNOT needs a distinct in-range control");
      }
      if (g.param_index) throw DomainError("CNOT takes no parameter");
      continue;
    }
    if (g.control) throw DomainError("rotation gates take no control");
    if (!g.param_index) throw DomainError("rotation gate without a parameter");
    if (*g.param_index >= owners.size()) owners.resize(*g.param_index + 1, 0);
    ++owners[*g.param_index];
  }
  for (std::size_t k = 0; k < owners.size(); ++k) {
    if (owners[k] != 1) {
      throw DomainError("parameter " + std::to_string(k) + " is used by " +
                        std::to_string(owners[k]) + " gates");
    }
  }
  param_count_ = owners.size();
}

Circuit build_ansatz(std::size_t num_qubits, std::size_t depth) {
  if (num_qubits < 1) throw DomainError("ansatz needs n >= 1");
  if (depth < 1) throw DomainError("ansatz needs depth >= 1");
  std::vector<Gate> gates;
  std::size_t param = 0;
  auto rotation_layer = [&] {
    for (std::size_t q = 0; q < num_qubits; ++q) {
      gates.push_back(Gate::ry(q, param++));
      gates.push_back(Gate::rz(q, param++));
    }
  };
  for (std::size_t layer = 0; layer < depth; ++layer) {
    rotation_layer();
    if (num_qubits > 1) {
      for (std::size_t j = 0; j < num_qubits; ++j) {
        gates.push_back(Gate::cnot(j, (j + 1) % num_qubits));
      }
    }
  }
  rotation_layer();
  return Circuit(num_qubits, std::move(gates));
}

std::size_t default_depth(std::size_t num_qubits) {
  if (num_qubits < 1) throw DomainError("default_depth needs n >= 1");
  if (num_qubits > kMaxStateQubits) {
    throw ResourceError("default_depth: too many qubits");
  }
  const std::size_t manifold = (std::size_t{1} << (num_qubits + 1)) - 2;
  std::size_t depth = 1;
  while (2 * num_qubits * (depth + 1) < manifold) ++depth;
  return depth + 1;
}

StateVector prepare(const Circuit& circuit, std::span<const double> theta) {
  if (theta.size() != circuit.param_count()) {
    throw DomainError("expected " + std::to_string(circuit.param_count()) +
                      " parameters, got " + std::to_string(theta.size()));
  }
  StateVector state = new_zero_state(circuit.num_qubits());
  for (const auto& g : circuit.gates()) {
    const double angle = g.param_index ? theta[*g.param_index] : 0.0;
    if (!std::isfinite(angle)) throw DomainError("non-finite circuit parameter");
    state = apply_gate(std::move(state), g, angle);
  }
  return state;
}

}  // namespace nhvqe
