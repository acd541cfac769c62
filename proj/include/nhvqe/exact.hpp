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

#include <Eigen/Dense>

#include "nhvqe/pauli.hpp"

namespace nhvqe {

/// Largest system the dense oracle diagonalizes by default.
inline constexpr std::size_t kExactQubitLimit = 12;

struct EigenPair {
  Complex value;
  Eigen::VectorXcd vector;  // unit 2-norm right eigenvector
  double residual = 0.0;    // ||H v - value v||
};

/// All 2^n right eigenpairs sorted by (Re value, Im value).
struct Spectrum {
  std::vector<EigenPair> pairs;
  double spectral_scale = 0.0;  // sum_k |c_k| of the diagonalized sum
};

/// Dense eigendecomposition. Hermitian sums (all coefficients real) use a
/// self-adjoint solver so degenerate eigenvectors come out orthonormal.
/// Throws NumericalError if any residual exceeds 1e-9 (1 + spectral scale).
Spectrum diagonalize(const PauliSum& h,
                     std::size_t max_qubits = kExactQubitLimit);

/// Smallest Re value; near-ties go to smaller |Im|, then smaller Im.
const EigenPair& ground_pair(const Spectrum& spectrum);

/// v^H O v.
Complex observable(std::span<const Complex> v, const PauliSum& obs);
Complex observable(const EigenPair& pair, const PauliSum& obs);

/// <Mx^2> - <Mx>^2, real part.
double susceptibility(std::span<const Complex> v, const PauliSum& mx);
double susceptibility(const EigenPair& pair, const PauliSum& mx);

/// w^H O v / w^H v with w the left eigenvector of `h` paired with
/// `right`. Exploration only; the sweeps use the self inner product.
Complex biorthogonal_observable(const PauliSum& h, const EigenPair& right,
                                const PauliSum& obs);

}  // namespace nhvqe
