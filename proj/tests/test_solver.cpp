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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nhvqe/ansatz.hpp"
#include "nhvqe/errors.hpp"
#include "nhvqe/model.hpp"
#include "nhvqe/solver.hpp"
#include "oracle.hpp"

namespace {

using nhvqe::Circuit;
using nhvqe::Complex;
using nhvqe::Gate;
using nhvqe::PauliSum;

std::vector<double> random_theta(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> theta(count);
  for (auto& t : theta) t = u(rng);
  return theta;
}

PauliSum random_model(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> field(0.0, 2.0);
  return (rng() & 1) ? nhvqe::build_tim(n, field(rng)) : nhvqe::build_nh_tim(n, field(rng));
}

Complex random_energy(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  return {u(rng), u(rng)};
}

TEST(MPlus, MatchesDenseProducts) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto h = random_model(rng, n);
    const Complex e = random_energy(rng);
    const oracle::Mat a = oracle::dense(h) -
                          e * oracle::Mat::Identity(1 << n, 1 << n);
    EXPECT_LT(oracle::max_abs_diff(oracle::dense(nhvqe::build_m_plus(h, e)),
                                   a.adjoint() * a), 1e-12);
    EXPECT_LT(oracle::max_abs_diff(oracle::dense(nhvqe::build_m_minus(h, e)),
                                   a * a.adjoint()), 1e-12);
    EXPECT_TRUE(nhvqe::approx_equal(nhvqe::MPlusFactory(h)(e),
                                    nhvqe::build_m_plus(h, e), 1e-12));
  }
}

TEST(MPlus, HermitianAndPositiveSemidefinite) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = random_model(rng, 2 + trial % 2);
    const auto m = nhvqe::build_m_plus(h, random_energy(rng));
    EXPECT_TRUE(nhvqe::approx_equal(nhvqe::adjoint(m), m, 1e-12));
    EXPECT_GE(oracle::min_hermitian_eigenvalue(oracle::dense(m)), -1e-10);
  }
}

TEST(MPlus, VanishesOnRightEigenvector) {
  const auto h = nhvqe::build_nh_tim(3, 0.6);
  Eigen::ComplexEigenSolver<oracle::Mat> es(oracle::dense(h));
  const oracle::Vec v = es.eigenvectors().col(0).normalized();
  const oracle::Mat m = oracle::dense(nhvqe::build_m_plus(h, es.eigenvalues()(0)));
  EXPECT_LT(std::abs(v.dot(m * v)), 1e-10);
}

TEST(Cost, SingleRyExample) {
  const auto h = PauliSum::from_term(1.0, nhvqe::PauliString::from_letters("Z"));
  const Circuit c(1, {Gate::ry(0, 0)});
  const std::vector<double> theta{std::numbers::pi / 2};
  const auto g = nhvqe::gradient(theta, 1.0, h, c);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_NEAR(g[0], 2.0, 1e-12);
  EXPECT_NEAR(nhvqe::cost_plus(theta, 1.0, h, c), 2.0, 1e-12);
}

TEST(Cost, ExpansionEqualsResidualNorm) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto h = random_model(rng, n);
    const auto c = nhvqe::build_ansatz(n, 2);
    const auto theta = random_theta(rng, c.param_count());
    const Complex e = random_energy(rng);
    EXPECT_NEAR(nhvqe::cost_plus(theta, e, h, c),
                nhvqe::residual_cost(theta, e, h, c), 1e-9);
  }
}

TEST(Cost, ParameterShiftMatchesFiniteDifferences) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto h = n == 1 ? PauliSum(1, {{Complex(0.3, 0.2), nhvqe::PauliString::from_letters("X")},
                                         {1.0, nhvqe::PauliString::from_letters("Z")}})
                          : random_model(rng, n);
    const auto c = nhvqe::build_ansatz(n, 2);
    const auto theta = random_theta(rng, c.param_count());
    const Complex e = random_energy(rng);
    const auto g = nhvqe::gradient(theta, e, h, c);
    for (std::size_t k = 0; k < theta.size(); ++k) {
      auto p = theta, m = theta;
      p[k] += 1e-5;
      m[k] -= 1e-5;
      const double fd = (nhvqe::cost_plus(p, e, h, c) - nhvqe::cost_plus(m, e, h, c)) / 2e-5;
      EXPECT_NEAR(g[k], fd, std::max(1e-8, 1e-5 * std::abs(fd)));
    }
  }
}

TEST(Cost, ClosedFormEnergyIsExpectationAndMinimizer) {
  std::mt19937_64 rng(35);
  std::normal_distribution<double> d(0.0, 0.5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto h = random_model(rng, n);
    const auto c = nhvqe::build_ansatz(n, 2);
    const auto theta = random_theta(rng, c.param_count());
    const Complex e = nhvqe::optimal_energy(theta, h, c);
    const auto psi = nhvqe::prepare(c, theta);
    EXPECT_LT(std::abs(e - nhvqe::expectation(psi, h)), 1e-12);
    const double best = nhvqe::cost_plus(theta, e, h, c);
    for (int k = 0; k < 20; ++k) {
      const Complex delta(d(rng), d(rng));
      const double other = nhvqe::cost_plus(theta, e + delta, h, c);
      // C+(E + d) = C+(E) + |d|^2 exactly.
      EXPECT_NEAR(other - best, std::norm(delta), 1e-10);
    }
  }
}

TEST(Cost, NoisyEvaluationIsReproducible) {
  const auto h = nhvqe::build_tim(2, 0.7);
  const auto c = nhvqe::build_ansatz(2, 1);
  std::mt19937_64 rng(36);
  const auto theta = random_theta(rng, c.param_count());
  nhvqe::NoiseSource a(0.05, nhvqe::RngStream(4));
  nhvqe::NoiseSource b(0.05, nhvqe::RngStream(4));
  EXPECT_EQ(nhvqe::cost_plus(theta, -1.0, h, c, a), nhvqe::cost_plus(theta, -1.0, h, c, b));
  EXPECT_EQ(nhvqe::gradient(theta, -1.0, h, c, a), nhvqe::gradient(theta, -1.0, h, c, b));
}

TEST(Cost, RejectsMismatchedSizes) {
  const auto h = nhvqe::build_tim(3, 0.7);
  const auto c = nhvqe::build_ansatz(2, 1);
  const std::vector<double> theta(c.param_count(), 0.0);
  EXPECT_THROW(nhvqe::cost_plus(theta, 0.0, h, c), nhvqe::DimensionError);
}

TEST(SolverConfig, ValidationCatchesBadSettings) {
  nhvqe::SolverConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), nhvqe::DomainError);
  cfg = {};
  cfg.stages.clear();
  EXPECT_THROW(cfg.validate(), nhvqe::DomainError);
  cfg = {};
  cfg.stages[0].learning_rate = -0.1;
  EXPECT_THROW(cfg.validate(), nhvqe::DomainError);
  cfg = {};
  cfg.noise.epsilon = -1.0;
  EXPECT_THROW(cfg.validate(), nhvqe::DomainError);
}

std::vector<Complex> spectrum(const PauliSum& h) { return oracle::eigenvalues(oracle::dense(h)); }

Complex oracle_ground(const PauliSum& h) {
  auto values = spectrum(h);
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
    return std::abs(a.imag()) < std::abs(b.imag());
  });
  return values.front();
}

TEST(Solve, FindsTimGround) {
  nhvqe::SolverConfig cfg;
  cfg.restarts = 3;
  cfg.init_seed = 5;
  for (double g : {0.3, 1.0, 1.6}) {
    const auto h = nhvqe::build_tim(2, g);
    const auto r = nhvqe::solve(h, nhvqe::build_ansatz(2, nhvqe::default_depth(2)), cfg);
    EXPECT_LE(r.final_cost, 1e-6);
    EXPECT_LT(std::abs(r.ground().energy - oracle_ground(h)), 1e-3) << g;
    EXPECT_EQ(r.restarts.size(), 3u);
    EXPECT_FALSE(r.cost_history.empty());
  }
}

TEST(Solve, FindsNonHermitianEigenpair) {
  nhvqe::SolverConfig cfg;
  cfg.restarts = 3;
  cfg.init_seed = 6;
  const auto h = nhvqe::build_nh_tim(2, 0.5);
  const auto r = nhvqe::solve(h, nhvqe::build_ansatz(2, nhvqe::default_depth(2)), cfg);
  EXPECT_LE(r.final_cost, 1e-6);
  double nearest = 1e9;
  for (auto v : spectrum(h)) nearest = std::min(nearest, std::abs(v - r.energy));
  EXPECT_LT(nearest, 1e-3);
  EXPECT_LT(std::abs(r.ground().energy - oracle_ground(h)), 1e-3);
}

TEST(Solve, RestartsAreReproducible) {
  nhvqe::SolverConfig cfg;
  cfg.restarts = 2;
  cfg.init_seed = 7;
  cfg.stages = {{50, 0.05, nhvqe::OptimizerKind::ADAM}, {50, 0.05, nhvqe::OptimizerKind::GD}};
  const auto h = nhvqe::build_tim(2, 0.8);
  const auto c = nhvqe::build_ansatz(2, 2);
  const auto a = nhvqe::solve(h, c, cfg);
  const auto b = nhvqe::solve(h, c, cfg);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.cost_history, b.cost_history);
  EXPECT_EQ(a.energy, b.energy);
}

TEST(Solve, CostHistoryDecreasesOverall) {
  nhvqe::SolverConfig cfg;
  cfg.restarts = 1;
  cfg.energy_seed = nhvqe::EnergySeed::rayleigh();
  const auto h = nhvqe::build_tim(2, 1.0);
  const auto r = nhvqe::solve(h, nhvqe::build_ansatz(2, 2), cfg);
  ASSERT_GE(r.cost_history.size(), 2u);
  EXPECT_LT(r.cost_history.back(), r.cost_history.front());
}

TEST(Solve, GroundTargetBoundsSpectrum) {
  const auto h = nhvqe::build_nh_tim(3, 1.2);
  const Complex t = nhvqe::ground_target(h);
  for (auto v : spectrum(h)) EXPECT_LT(t.real(), v.real());
}

}  // namespace
