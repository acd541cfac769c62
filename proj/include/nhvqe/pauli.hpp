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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace nhvqe {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

/// Coefficients with magnitude below this are dropped after every
/// add/multiply.
inline constexpr double kMergeThreshold = 1e-12;

/// Largest qubit count `to_matrix` will realize by default.
inline constexpr std::size_t kDenseMatrixLimit = 14;

/// Hard cap imposed by the bitmask representation.
inline constexpr std::size_t kMaxPauliQubits = 64;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// A tensor product of single-qubit Pauli letters.
///
/// Stored in symplectic form: bit j of `x_mask` / `z_mask` says whether
/// the letter on qubit j has an X / Z component (Y has both). Strings never
/// carry a phase; any phase produced by an operation is returned separately
/// and folded into the owning coefficient.
class PauliString {
 public:
  /// Identity on `num_qubits` qubits.
  explicit PauliString(std::size_t num_qubits);

  /// Letter k of `letters` acts on qubit k, e.g. "XIZ" = X0 Z2 on 3 qubits.
  static PauliString from_letters(std::string_view letters);

  /// A single non-trivial letter on `qubit`.
  static PauliString single(std::size_t num_qubits, std::size_t qubit,
                            Pauli letter);

  /// Bit j of `x` / `z` sets the X / Z component on qubit j.
  static PauliString from_masks(std::size_t num_qubits, std::uint64_t x,
                                std::uint64_t z);

  [[nodiscard]] PauliString with(std::size_t qubit, Pauli letter) const;

  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::uint64_t x_mask() const { return x_mask_; }
  [[nodiscard]] std::uint64_t z_mask() const { return z_mask_; }
  [[nodiscard]] Pauli at(std::size_t qubit) const;
  [[nodiscard]] bool is_identity() const { return (x_mask_ | z_mask_) == 0; }

  /// Number of Y letters; the string acts as i^{#Y} X^x Z^z.
  [[nodiscard]] int y_count() const;

  /// Compact form listing non-identity letters with their qubit, "X0Z2";
  /// the identity renders as "I".
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  PauliString(std::size_t num_qubits, std::uint64_t x, std::uint64_t z)
      : num_qubits_(num_qubits), x_mask_(x), z_mask_(z) {}

  std::size_t num_qubits_;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
};

struct PhasedString {
  Complex phase;  // one of +1, -1, +i, -i
  PauliString string;
};

/// matrix(a) * matrix(b) == phase * matrix(string).
PhasedString multiply_strings(const PauliString& a, const PauliString& b);

struct PauliTerm {
  Complex coefficient;
  PauliString string;
};

/// A complex linear combination of Pauli strings on a fixed qubit count.
///
/// Always held in merged form: terms are sorted by string, no string
/// appears twice and no coefficient is below `kMergeThreshold`.
class PauliSum {
 public:
  /// The zero operator.
  explicit PauliSum(std::size_t num_qubits);

  /// Merges duplicate strings and prunes negligible coefficients.
  PauliSum(std::size_t num_qubits, std::vector<PauliTerm> terms);

  static PauliSum identity(std::size_t num_qubits, Complex scale = 1.0);
  static PauliSum from_term(Complex coefficient, const PauliString& string);

  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::span<const PauliTerm> terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  /// Coefficient of `string`, zero when absent.
  [[nodiscard]] Complex coefficient(const PauliString& string) const;

  /// Sum of |c_k|; bounds the operator norm.
  [[nodiscard]] double one_norm() const;

  [[nodiscard]] bool is_hermitian(double tol = 0.0) const;

  /// e.g. "(-1+0i)*Z0Z1 + (0-0.5i)*X0". Informational only.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PauliSum& a, const PauliSum& b);

 private:
  std::size_t num_qubits_;
  std::vector<PauliTerm> terms_;
};

PauliSum adjoint(const PauliSum& s);
PauliSum add_sums(const PauliSum& a, const PauliSum& b);
PauliSum scale(const PauliSum& s, Complex c);
PauliSum multiply_sums(const PauliSum& a, const PauliSum& b);

inline PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  return add_sums(a, b);
}
inline PauliSum operator-(const PauliSum& a, const PauliSum& b) {
  return add_sums(a, scale(b, -1.0));
}
inline PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  return multiply_sums(a, b);
}
inline PauliSum operator*(Complex c, const PauliSum& s) { return scale(s, c); }

/// True when both sums have the same strings and every coefficient pair
/// differs by at most `tol`.
bool approx_equal(const PauliSum& a, const PauliSum& b, double tol);

/// Dense 2^n x 2^n realization. Basis index bit j is the state of qubit j.
DenseMatrix to_matrix(const PauliSum& s,
                      std::size_t max_qubits = kDenseMatrixLimit);

}  // namespace nhvqe
