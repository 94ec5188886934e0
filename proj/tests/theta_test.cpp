// Copyright 2026 The lattice-cft Authors
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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lattice_cft/catalog.hpp"
#include "lattice_cft/heisenberg.hpp"
#include "lattice_cft/oracles.hpp"
#include "lattice_cft/theta.hpp"

namespace lcft {
namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using Eigen::VectorXi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

SiegelPoint tau_i() { return SiegelPoint(MatrixXcd::Constant(1, 1, Complex(0, 1))); }

VectorXcd random_z(int g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  VectorXcd z(g);
  for (int i = 0; i < g; ++i) z(i) = Complex(u(rng), u(rng));
  return z;
}

TEST(Theta, SiegelPointValidation) {
  EXPECT_EQ(kind_of([] { SiegelPoint(MatrixXcd::Constant(1, 1, Complex(0, -1))); }),
            ErrorKind::InvalidInput);
  MatrixXcd asym(2, 2);
  asym << Complex(0, 1), 0.1, 0.2, Complex(0, 1);
  EXPECT_EQ(kind_of([&] { SiegelPoint{asym}; }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { SiegelPoint(MatrixXcd::Zero(2, 3)); }), ErrorKind::InvalidInput);
}

TEST(Theta, SpecValidation) {
  ThetaSpec s = ThetaSpec::zero(2);
  s.type = {2, 3};
  EXPECT_EQ(kind_of([&] { validate(s); }), ErrorKind::InvalidInput);
  s.type = {0, 1};
  EXPECT_EQ(kind_of([&] { validate(s); }), ErrorKind::InvalidInput);
  s.type = {1, 3};
  EXPECT_NO_THROW(validate(s));
  s.b = VectorXd::Zero(3);
  EXPECT_EQ(kind_of([&] { validate(s); }), ErrorKind::InvalidInput);
}

TEST(Theta, ThetaThreeAtI) {
  const auto v = theta(ThetaSpec::zero(1), VectorXcd::Zero(1), tau_i(), 1e-15);
  EXPECT_NEAR(v.value.real(), 1.0864348112133080, 1e-15);
  EXPECT_NEAR(v.value.imag(), 0.0, 1e-15);
  EXPECT_LT(v.tail_bound, 1e-15);
  const Complex direct = oracle::theta_direct(VectorXd::Zero(1), VectorXd::Zero(1),
                                              VectorXcd::Zero(1), tau_i().tau(), 20);
  EXPECT_NEAR(std::abs(v.value - direct), 0.0, 1e-15);
}

TEST(Theta, OddCharacteristicVanishesAtZero) {
  std::mt19937_64 rng(1);
  for (int g = 1; g <= 2; ++g) {
    const auto tau = random_siegel_point(g, rng);
    ThetaSpec s{VectorXd::Constant(g, 0.5), VectorXd::Constant(g, 0.5), {}};
    if (g == 2) s.b(1) = 0.0;  // a^T b = 1/4 + 0 is odd only with one half in b
    const auto v = theta(s, VectorXcd::Zero(g), tau);
    EXPECT_LT(std::abs(v.value), 1e-13);
  }
}

TEST(Theta, IntegerShiftInvariant) {
  std::mt19937_64 rng(2);
  const auto tau = random_siegel_point(2, rng);
  for (int t = 0; t < 10; ++t) {
    const VectorXcd z = random_z(2, rng);
    VectorXcd z1 = z;
    z1(t % 2) += 1.0;
    const auto a = theta(ThetaSpec::zero(2), z, tau).value;
    const auto b = theta(ThetaSpec::zero(2), z1, tau).value;
    EXPECT_LT(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST(Theta, MatchesDirectSum) {
  std::mt19937_64 rng(3);
  for (int g = 1; g <= 3; ++g) {
    const auto tau = random_siegel_point(g, rng);
    for (int t = 0; t < 5; ++t) {
      ThetaSpec s = ThetaSpec::zero(g);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (int i = 0; i < g; ++i) {
        s.a(i) = u(rng);
        s.b(i) = u(rng);
      }
      const VectorXcd z = random_z(g, rng);
      const auto v = theta(s, z, tau, 1e-14);
      const Complex direct = oracle::theta_direct(s.a, s.b, z, tau.tau(), g == 3 ? 8 : 15);
      EXPECT_LT(std::abs(v.value - direct), 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST(Theta, TruncationHonesty) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const int g = 1 + t % 2;
    const auto tau = random_siegel_point(g, rng);
    ASSERT_GE(tau.lambda_min(), 0.5);
    const VectorXcd z = random_z(g, rng);
    const auto v = theta(ThetaSpec::zero(g), z, tau, 1e-6);
    const auto wider = theta_fixed_radius(ThetaSpec::zero(g), z, tau, v.radius + 2);
    EXPECT_LE(std::abs(v.value - wider.value), v.tail_bound + 1e-15);
  }
}

TEST(Theta, TruncationOverflow) {
  const SiegelPoint thin(MatrixXcd::Constant(1, 1, Complex(0, 1e-4)));
  EXPECT_EQ(kind_of([&] { theta(ThetaSpec::zero(1), VectorXcd::Zero(1), thin, 1e-14); }),
            ErrorKind::TruncationOverflow);
}

TEST(Theta, TranslateByZeroIsIdentity) {
  std::mt19937_64 rng(5);
  const auto tau = random_siegel_point(2, rng);
  const Section s = canonical_section(ThetaSpec::zero(2), tau);
  const Section u = heisenberg_translate(tau, VectorXcd::Zero(2), s);
  for (int t = 0; t < 5; ++t) {
    const VectorXcd w = random_z(2, rng);
    EXPECT_LT(std::abs(u(w) - s(w)), 1e-14 * std::abs(s(w)));
  }
}

TEST(Theta, HeisenbergCocycle) {
  std::mt19937_64 rng(6);
  for (int g = 1; g <= 2; ++g) {
    const auto tau = random_siegel_point(g, rng);
    const Section s = canonical_section(ThetaSpec::zero(g), tau);
    for (int t = 0; t < 100; ++t) {
      const VectorXcd v1 = random_z(g, rng), v2 = random_z(g, rng), w = random_z(g, rng);
      EXPECT_LT(cocycle_residual(tau, s, v1, v2, w), 1e-10);
    }
  }
}

TEST(Theta, QuasiPeriodicity) {
  std::mt19937_64 rng(7);
  for (int g = 1; g <= 2; ++g) {
    const auto tau = random_siegel_point(g, rng);
    ThetaSpec s = ThetaSpec::zero(g);
    s.a(0) = 0.25;
    s.b(g - 1) = 1.0 / 3.0;
    std::uniform_int_distribution<int> k(-2, 2);
    for (int t = 0; t < 20; ++t) {
      VectorXi m(g), n(g);
      for (int i = 0; i < g; ++i) {
        m(i) = k(rng);
        n(i) = k(rng);
      }
      const auto r = automorphy_residual(s, tau, random_z(g, rng), m, n);
      EXPECT_LT(r.classical, 1e-8);
      EXPECT_LT(r.metric, 1e-8);
    }
  }
}

TEST(Theta, SpaceDimension) {
  std::mt19937_64 rng(8);
  EXPECT_EQ(theta_space_dimension({1, 1}), 1);
  EXPECT_EQ(theta_space_dimension({2}), 2);
  EXPECT_EQ(theta_space_dimension({1, 3}), 3);
  for (const std::vector<std::int64_t>& type :
       {std::vector<std::int64_t>{1}, {2}, {3}, {1, 1}, {1, 3}, {2, 2}, {1, 1, 2}}) {
    const auto tau = random_siegel_point(static_cast<int>(type.size()), rng);
    const auto r = verify_theta_space_dimension(type, tau, 99);
    EXPECT_EQ(r.numerical_rank, r.dimension);
  }
}

// A lattice with discriminant Z/d: the theta space of type (d) has the
// dimension of the genus-1 Heisenberg irrep.
TEST(Theta, SpaceDimensionMatchesIrrep) {
  std::mt19937_64 rng(9);
  for (const char* name : {"A1", "A2", "L4", "L6"}) {
    const auto disc = discriminant_group(validate_even_lattice(*find_bundled(name)));
    const auto r = verify_theta_space_dimension({disc.order()}, random_siegel_point(1, rng), 1);
    EXPECT_EQ(r.numerical_rank, schroedinger_irrep(disc, 1).dimension());
  }
}

TEST(Theta, HeatEquationExample) {
  VectorXcd z(1);
  z(0) = Complex(0.3, 0.2);
  EXPECT_LT(heat_equation_residual(ThetaSpec::zero(1), z, tau_i(), 1e-3), 1e-6);
  const double slope =
      heat_convergence_slope(ThetaSpec::zero(1), z, tau_i(), {0.04, 0.02, 0.01});
  EXPECT_GT(slope, 1.8);
  EXPECT_LT(slope, 2.2);
}

TEST(Theta, HeatEquationSample) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    const int g = 1 + t % 2;
    const auto tau = random_siegel_point(g, rng);
    ThetaSpec s = ThetaSpec::zero(g);
    s.a(0) = 0.5 * (t % 3);
    const VectorXcd z = random_z(g, rng);
    EXPECT_LT(heat_equation_residual(s, z, tau, 1e-3), 1e-6) << t;
  }
}

}  // namespace
}  // namespace lcft
