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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nhvqe/exact.hpp"
#include "nhvqe/model.hpp"
#include "nhvqe/solver.hpp"

namespace nhvqe {

/// Row methods are EXACT or VQE; BOTH only appears in a SweepConfig.
enum class Method { EXACT, VQE, BOTH };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

enum class Quantity { MX, CHI_X };

/// Largest chain the VQE path accepts in a sweep.
inline constexpr std::size_t kVqeQubitCap = 5;

struct SweepConfig {
  ModelKind model = ModelKind::TIM;
  std::vector<std::size_t> n_list = {5};
  double gamma_start = 0.0;
  double gamma_end = 2.0;
  std::size_t gamma_steps = 41;
  Method method = Method::EXACT;
  SolverConfig solver;
  /// Ansatz depth; default_depth(n) when unset.
  std::optional<std::size_t> depth;
  /// Only epsilon is read; per-point noise seeds derive from master_seed.
  NoiseConfig noise;
  std::string output_path;
  bool plot = false;
  std::size_t workers = 1;
  std::uint64_t master_seed = 0;
  std::size_t vqe_qubit_cap = kVqeQubitCap;

  /// Throws DomainError describing the first problem found.
  void validate() const;

  /// gamma_steps evenly spaced values from gamma_start to gamma_end.
  [[nodiscard]] std::vector<double> grid() const;
};

struct SweepRow {
  ModelKind model = ModelKind::TIM;
  std::size_t n = 0;
  double gamma = 0.0;
  Method method = Method::EXACT;
  double energy_re = 0.0;
  double energy_im = 0.0;
  double mx = 0.0;
  double chi_x = 0.0;
  /// VQE: noise-free C+ of the reported pair. EXACT: squared residual.
  double final_cost = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by (n, gamma, method)
};

/// Ground pair of the dense oracle and its observables.
SweepRow evaluate_exact(ModelKind model, std::size_t n, double gamma,
                        std::uint64_t seed);

/// Non-Hermitian VQE at one grid point. Training and measurement noise
/// streams are both derived from `seed`.
SweepRow evaluate_vqe(ModelKind model, std::size_t n, double gamma,
                      const SweepConfig& config, std::uint64_t seed);

/// Evaluates every (n, gamma) point with the configured method(s). Point k
/// (n-major, gamma-minor) uses seed RngStream::derive_seed(master_seed, k),
/// so output does not depend on `workers`.
SweepResult run_sweep(const SweepConfig& config);

inline constexpr std::string_view kCsvHeader =
    "model,n,gamma,method,energy_re,energy_im,mx,chi_x,final_cost,seed";

std::string to_csv(const SweepResult& result);
SweepResult parse_csv(std::string_view text);
void write_csv(const SweepResult& result, const std::filesystem::path& path);
SweepResult read_csv(const std::filesystem::path& path);

/// Self-contained SVG with one polyline per (n, method).
std::string to_svg(const SweepResult& result, Quantity quantity);
void render_svg(const SweepResult& result, Quantity quantity,
                const std::filesystem::path& path);

struct ComparisonRow {
  std::size_t n = 0;
  std::size_t points = 0;
  double max_mx_deviation = 0.0;
  double mean_mx_deviation = 0.0;
  double max_energy_deviation = 0.0;
  double mean_energy_deviation = 0.0;
};

struct ComparisonSummary {
  std::vector<ComparisonRow> rows;  // ascending n
  double max_mx_deviation = 0.0;

  [[nodiscard]] std::string to_string() const;
};

/// VQE-vs-EXACT deviations per n. Throws DomainError unless every grid
/// point carries both methods.
ComparisonSummary compare(const SweepResult& result);

struct Peak {
  double location = 0.0;
  double height = 0.0;
  bool interior = false;  // false when the maximum sits on a grid endpoint
};

/// Vertex of the parabola through the grid maximum and its neighbours.
Peak find_peak(std::span<const double> xs, std::span<const double> ys);

/// Applies flat `key = value` lines (keys mirror SweepConfig fields, `#`
/// starts a comment) on top of `base`.
SweepConfig parse_config(std::string_view text, SweepConfig base = {});
SweepConfig read_config_file(const std::filesystem::path& path,
                             SweepConfig base = {});

}  // namespace nhvqe
