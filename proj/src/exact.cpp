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

#include "nhvqe/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <lapacke.h>

#include "nhvqe/errors.hpp"
#include "nhvqe/statevector.hpp"

namespace nhvqe {
namespace {

std::span<const Complex> as_span(const Eigen::VectorXcd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

lapack_complex_double* lapack_ptr(Complex* p) {
  return reinterpret_cast<lapack_complex_double*>(p);
}

// Right eigenpairs of a general complex matrix via zgeev. Eigen's
// ComplexEigenSolver is an order of magnitude slower at 2^9 and above.
void general_eigen(DenseMatrix a, Eigen::VectorXcd& values,
                   Eigen::MatrixXcd& vectors) {
  const auto dim = static_cast<lapack_int>(a.rows());
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'V', dim, lapack_ptr(a.data()), dim,
      lapack_ptr(values.data()), nullptr, 1, lapack_ptr(vectors.data()), dim);
  if (info != 0) {
    throw NumericalError("zgeev failed with info " + std::to_string(info));
  }
}

}  // namespace

Spectrum diagonalize(const PauliSum& h, std::size_t max_qubits) {
  if (h.num_qubits() > max_qubits) {
    throw ResourceError("exact diagonalization of " +
                        std::to_string(h.num_qubits()) +
                        " qubits exceeds the limit of " +
                        std::to_string(max_qubits));
  }
  const DenseMatrix m = to_matrix(h, max_qubits);
  const Eigen::Index dim = m.rows();

  Eigen::VectorXcd values(dim);
  Eigen::MatrixXcd vectors(dim, dim);
  if (h.is_hermitian()) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("self-adjoint eigensolver did not converge");
    }
    values = solver.eigenvalues().cast<Complex>();
    vectors = solver.eigenvectors();
  } else {
    general_eigen(m, values, vectors);
  }

  Spectrum out;
  out.spectral_scale = h.one_norm();
  const double bound = 1e-9 * (1.0 + out.spectral_scale);
  out.pairs.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k) {
    Eigen::VectorXcd v = vectors.col(k);
    v.normalize();
    const double residual = (m * v - values(k) * v).norm();
    if (!(residual <= bound)) {
      throw NumericalError("eigenpair " + std::to_string(k) + " has residual " +
                           std::to_string(residual) + " above bound " +
                           std::to_string(bound));
    }
    out.pairs.push_back({values(k), std::move(v), residual});
  }
  std::stable_sort(out.pairs.begin(), out.pairs.end(),
                   [](const EigenPair& a, const EigenPair& b) {
                     if (a.value.real() != b.value.real()) {
                       return a.value.real() < b.value.real();
                     }
                     return a.value.imag() < b.value.imag();
                   });
  return out;
}

const EigenPair& ground_pair(const Spectrum& spectrum) {
  if (spectrum.pairs.empty()) throw DomainError("empty spectrum");
  const double tol = 1e-9 * (1.0 + spectrum.spectral_scale);
  double min_re = std::numeric_limits<double>::infinity();
  for (const auto& p : spectrum.pairs) min_re = std::min(min_re, p.value.real());

  const EigenPair* best = nullptr;
  for (const auto& p : spectrum.pairs) {
    if (p.value.real() > min_re + tol) continue;
    if (best == nullptr) {
      best = &p;
      continue;
    }
    const double abs_p = std::abs(p.value.imag());
    const double abs_b = std::abs(best->value.imag());
    if (abs_p < abs_b - tol ||
        (abs_p <= abs_b + tol && p.value.imag() < best->value.imag() - tol)) {
      best = &p;
    }
  }
  return *best;
}

Complex observable(std::span<const Complex> v, const PauliSum& obs) {
  const Amplitudes ov = apply_pauli_sum(v, obs);
  return inner_product(v, ov);
}

Complex observable(const EigenPair& pair, const PauliSum& obs) {
  return observable(as_span(pair.vector), obs);
}

double susceptibility(std::span<const Complex> v, const PauliSum& mx) {
  const Complex m1 = observable(v, mx);
  const Complex m2 = observable(v, multiply_sums(mx, mx));
  return (m2 - m1 * m1).real();
}

double susceptibility(const EigenPair& pair, const PauliSum& mx) {
  return susceptibility(as_span(pair.vector), mx);
}

Complex biorthogonal_observable(const PauliSum& h, const EigenPair& right,
                                const PauliSum& obs) {
  const Spectrum adj = diagonalize(adjoint(h), h.num_qubits());
  const Complex target = std::conj(right.value);
  const EigenPair* left = &adj.pairs.front();
  for (const auto& p : adj.pairs) {
    if (std::abs(p.value - target) < std::abs(left->value - target)) left = &p;
  }
  const auto w = as_span(left->vector);
  const auto v = as_span(right.vector);
  const Complex overlap = inner_product(w, v);
  if (std::abs(overlap) < 1e-14) {
    throw NumericalError("left/right eigenvectors are orthogonal "
                         "(exceptional point?)");
  }
  return inner_product(w, apply_pauli_sum(v, obs)) / overlap;
}

}  // namespace nhvqe
