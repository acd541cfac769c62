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

#include <cstddef>
#include <span>
#include <vector>

#include "nhvqe/gate.hpp"
#include "nhvqe/statevector.hpp"

namespace nhvqe {

/// Rotation angles in radians, indexed by Gate::param_index.
using ParameterVector = std::vector<double>;

/// An ordered gate list on a fixed register.
///
/// Every rotation owns exactly one parameter and every parameter index in
/// [0, param_count) is owned by exactly one rotation.
class Circuit {
 public:
  Circuit(std::size_t num_qubits, std::vector<Gate> gates);

  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::span<const Gate> gates() const { return gates_; }
  [[nodiscard]] std::size_t param_count() const { return param_count_; }

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
  std::size_t param_count_ = 0;
};

/// Hardware-efficient ansatz: `depth` layers of [Ry, Rz on every qubit,
/// then CNOT j -> (j+1) mod n], followed by a closing Ry, Rz layer.
/// The ring is omitted for a single qubit. Uses 2n(depth+1) parameters.
Circuit build_ansatz(std::size_t num_qubits, std::size_t depth);

/// One layer beyond the smallest depth whose parameter count reaches the
/// 2^(n+1) - 2 real dimensions of the n-qubit state manifold.
std::size_t default_depth(std::size_t num_qubits);

/// G(theta)|0...0>.
StateVector prepare(const Circuit& circuit, std::span<const double> theta);

}  // namespace nhvqe
