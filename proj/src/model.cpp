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

#include "nhvqe/model.hpp"

#include <vector>

#include "nhvqe/errors.hpp"

namespace nhvqe {
namespace {

PauliSum ising_ring(std::size_t n, Complex field) {
  if (n < 2) {
    throw DomainError("Ising ring needs n >= 2, got " + std::to_string(n));
  }
  std::vector<PauliTerm> terms;
  terms.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto zz = PauliString::single(n, j, Pauli::Z).with((j + 1) % n,
                                                            Pauli::Z);
    terms.push_back({-1.0, zz});
    terms.push_back({-field, PauliString::single(n, j, Pauli::X)});
  }
  return PauliSum(n, std::move(terms));
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::TIM ? "tim" : "nh-tim";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "tim" || text == "TIM") return ModelKind::TIM;
  if (text == "nh-tim" || text == "NH_TIM" || text == "nh_tim") {
    return ModelKind::NH_TIM;
  }
  throw DomainError("unknown model '" + std::string(text) + "'");
}

PauliSum build_tim(std::size_t n, double gamma) {
  return ising_ring(n, Complex(gamma, 0.0));
}

PauliSum build_nh_tim(std::size_t n, double gamma_i) {
  return ising_ring(n, Complex(0.0, gamma_i));
}

PauliSum build_mx(std::size_t n) {
  if (n < 1) throw DomainError("magnetization needs n >= 1");
  std::vector<PauliTerm> terms;
  terms.reserve(n);
  const double w = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    terms.push_back({w, PauliString::single(n, j, Pauli::X)});
  }
  return PauliSum(n, std::move(terms));
}

PauliSum build_hamiltonian(const ModelConfig& config) {
  return config.kind == ModelKind::TIM ? build_tim(config.n, config.gamma)
                                       : build_nh_tim(config.n, config.gamma_i);
}

}  // namespace nhvqe
