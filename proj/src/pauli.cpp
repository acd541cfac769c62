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

#include "nhvqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>

#include "nhvqe/errors.hpp"

namespace nhvqe {
namespace {

void check_qubits(std::size_t n) {
  if (n == 0) throw DomainError("Pauli string needs at least one qubit");
  if (n > kMaxPauliQubits) {
    throw ResourceError("Pauli string on " + std::to_string(n) +
                        " qubits exceeds the limit of " +
                        std::to_string(kMaxPauliQubits));
  }
}

void check_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": qubit counts differ (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// i^k for k taken mod 4.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::vector<PauliTerm> merge(std::size_t num_qubits,
                             std::vector<PauliTerm> terms) {
  std::map<PauliString, Complex> merged;
  for (auto& t : terms) {
    check_same_size(num_qubits, t.string.num_qubits(), "PauliSum term");
    merged[t.string] += t.coefficient;
  }
  std::vector<PauliTerm> out;
  out.reserve(merged.size());
  for (const auto& [string, c] : merged) {
    if (std::abs(c) >= kMergeThreshold) out.push_back({c, string});
  }
  return out;
}

std::string format_coefficient(Complex c) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "(%g%+gi)", c.real(), c.imag());
  return buf;
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
}

PauliString PauliString::from_masks(std::size_t num_qubits, std::uint64_t x,
                                    std::uint64_t z) {
  check_qubits(num_qubits);
  if (num_qubits < 64) {
    const std::uint64_t outside = ~((std::uint64_t{1} << num_qubits) - 1);
    if ((x | z) & outside) {
      throw DimensionError("Pauli mask has bits beyond qubit count " +
                           std::to_string(num_qubits));
    }
  }
  return PauliString(num_qubits, x, z);
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString s(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': s = s.with(q, Pauli::X); break;
      case 'Y': s = s.with(q, Pauli::Y); break;
      case 'Z': s = s.with(q, Pauli::Z); break;
      default:
        throw DomainError(std::string("unknown Pauli letter '") + letters[q] +
                          "'");
    }
  }
  return s;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit,
                                Pauli letter) {
  return PauliString(num_qubits).with(qubit, letter);
}

PauliString PauliString::with(std::size_t qubit, Pauli letter) const {
  if (qubit >= num_qubits_) {
    throw DomainError("qubit " + std::to_string(qubit) +
                      " out of range for " + std::to_string(num_qubits_) +
                      "-qubit string");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  PauliString out = *this;
  out.x_mask_ &= ~bit;
  out.z_mask_ &= ~bit;
  if (letter == Pauli::X || letter == Pauli::Y) out.x_mask_ |= bit;
  if (letter == Pauli::Z || letter == Pauli::Y) out.z_mask_ |= bit;
  return out;
}

Pauli PauliString::at(std::size_t qubit) const {
  if (qubit >= num_qubits_) throw DomainError("qubit index out of range");
  const bool x = (x_mask_ >> qubit) & 1U;
  const bool z = (z_mask_ >> qubit) & 1U;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

int PauliString::y_count() const { return std::popcount(x_mask_ & z_mask_); }

std::string PauliString::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    const Pauli p = at(q);
    if (p == Pauli::I) continue;
    out += to_char(p);
    out += std::to_string(q);
  }
  return out;
}

// With P = i^{x.z} X^x Z^z, commuting Z^z1 past X^x2 costs (-1)^{z1.x2}.
PhasedString multiply_strings(const PauliString& a, const PauliString& b) {
  check_same_size(a.num_qubits(), b.num_qubits(), "multiply_strings");
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  const int k = a.y_count() + b.y_count() +
                2 * std::popcount(a.z_mask() & b.x_mask()) -
                std::popcount(x & z);
  return {i_power(k), PauliString::from_masks(a.num_qubits(), x, z)};
}

PauliSum::PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
}

PauliSum::PauliSum(std::size_t num_qubits, std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
  terms_ = merge(num_qubits, std::move(terms));
}

PauliSum PauliSum::identity(std::size_t num_qubits, Complex scale) {
  return PauliSum(num_qubits, {{scale, PauliString(num_qubits)}});
}

PauliSum PauliSum::from_term(Complex coefficient, const PauliString& string) {
  return PauliSum(string.num_qubits(), {{coefficient, string}});
}

Complex PauliSum::coefficient(const PauliString& string) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), string,
      [](const PauliTerm& t, const PauliString& s) { return t.string < s; });
  if (it != terms_.end() && it->string == string) return it->coefficient;
  return 0.0;
}

double PauliSum::one_norm() const {
  double total = 0.0;
  for (const auto& t : terms_) total += std::abs(t.coefficient);
  return total;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const PauliTerm& t) {
    return std::abs(t.coefficient.imag()) <= tol;
  });
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) out += " + ";
    out += format_coefficient(terms_[k].coefficient);
    out += '*';
    out += terms_[k].string.to_string();
  }
  return out;
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits_ != b.num_qubits_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].string != b.terms_[k].string ||
        a.terms_[k].coefficient != b.terms_[k].coefficient) {
      return false;
    }
  }
  return true;
}

PauliSum adjoint(const PauliSum& s) {
  std::vector<PauliTerm> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) {
    terms.push_back({std::conj(t.coefficient), t.string});
  }
  return PauliSum(s.num_qubits(), std::move(terms));
}

PauliSum add_sums(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.num_qubits(), b.num_qubits(), "add_sums");
  std::vector<PauliTerm> terms(a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return PauliSum(a.num_qubits(), std::move(terms));
}

PauliSum scale(const PauliSum& s, Complex c) {
  std::vector<PauliTerm> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) terms.push_back({c * t.coefficient, t.string});
  return PauliSum(s.num_qubits(), std::move(terms));
}

PauliSum multiply_sums(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.num_qubits(), b.num_qubits(), "multiply_sums");
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      auto [phase, string] = multiply_strings(ta.string, tb.string);
      terms.push_back({phase * ta.coefficient * tb.coefficient, string});
    }
  }
  return PauliSum(a.num_qubits(), std::move(terms));
}

bool approx_equal(const PauliSum& a, const PauliSum& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  for (const auto& t : a.terms()) {
    if (std::abs(t.coefficient - b.coefficient(t.string)) > tol) return false;
  }
  for (const auto& t : b.terms()) {
    if (std::abs(t.coefficient - a.coefficient(t.string)) > tol) return false;
  }
  return true;
}

// P|b> = i^{#Y} (-1)^{|b & z|} |b ^ x>, so column b of P has one entry.
DenseMatrix to_matrix(const PauliSum& s, std::size_t max_qubits) {
  const std::size_t n = s.num_qubits();
  if (n > max_qubits) {
    throw ResourceError("dense realization of " + std::to_string(n) +
                        " qubits exceeds the limit of " +
                        std::to_string(max_qubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  for (const auto& t : s.terms()) {
    const Complex base = t.coefficient * i_power(t.string.y_count());
    const std::uint64_t x = t.string.x_mask();
    const std::uint64_t z = t.string.z_mask();
    for (std::uint64_t col = 0; col < dim; ++col) {
      const Complex v = (std::popcount(col & z) & 1) ? -base : base;
      m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) += v;
    }
  }
  return m;
}

}  // namespace nhvqe
