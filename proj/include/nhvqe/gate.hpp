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
#include <optional>
#include <string>

namespace nhvqe {

enum class GateKind { RX, RY, RZ, CNOT };

/// One circuit element. Rotations R_a(theta) = exp(-i theta sigma_a / 2)
/// read their angle from `param_index`; CNOT uses `control` and `target`.
struct Gate {
  GateKind kind = GateKind::RY;
  std::size_t target = 0;
  std::optional<std::size_t> control;
  std::optional<std::size_t> param_index;

  static Gate rx(std::size_t target, std::size_t param) {
    return {GateKind::RX, target, std::nullopt, param};
  }
  static Gate ry(std::size_t target, std::size_t param) {
    return {GateKind::RY, target, std::nullopt, param};
  }
  static Gate rz(std::size_t target, std::size_t param) {
    return {GateKind::RZ, target, std::nullopt, param};
  }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, target, control, std::nullopt};
  }

  [[nodiscard]] bool is_rotation() const { return kind != GateKind::CNOT; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::string to_string(const Gate& gate);

}  // namespace nhvqe
