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
#include <string>
#include <string_view>

#include "nhvqe/pauli.hpp"

namespace nhvqe {

/// TIM: -sum_j [Z_j Z_{j+1} + gamma X_j].
/// NH_TIM: -sum_j [Z_j Z_{j+1} + i gamma_i X_j].
enum class ModelKind { TIM, NH_TIM };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);

struct ModelConfig {
  std::size_t n = 2;
  double gamma = 0.0;
  double gamma_i = 0.0;
  ModelKind kind = ModelKind::TIM;
};

/// Transverse-field Ising ring. Bonds run j -> (j+1) mod n for every
/// j = 0..n-1, so n = 2 counts its single bond twice.
PauliSum build_tim(std::size_t n, double gamma);

/// Ising ring in a purely imaginary transverse field.
PauliSum build_nh_tim(std::size_t n, double gamma_i);

/// Transverse magnetization per site, (1/n) sum_j X_j.
PauliSum build_mx(std::size_t n);

/// Dispatches on `config.kind`; the unused field strength is ignored.
PauliSum build_hamiltonian(const ModelConfig& config);

}  // namespace nhvqe
