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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "lattice_cft/catalog.hpp"
#include "lattice_cft/fock.hpp"
#include "lattice_cft/oracles.hpp"

namespace lcft {
namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXd;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

EvenLattice lattice(const std::string& name) { return validate_even_lattice(*find_bundled(name)); }

std::vector<std::int64_t> head(const std::vector<std::int64_t>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

TrigLoop random_loop(int rank, int modes, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  auto vec = [&] {
    VectorXd v(rank);
    for (int i = 0; i < rank; ++i) v(i) = n(rng);
    return v;
  };
  TrigLoop l{vec(), {}, {}};
  for (int m = 1; m <= modes; ++m) {
    l.cos_modes[m] = vec();
    l.sin_modes[m] = vec();
  }
  return l;
}

TEST(LoopCocycle, Examples) {
  const TrigLoop cos1{VectorXd::Zero(1), {{1, VectorXd::Ones(1)}}, {}};
  const TrigLoop sin1{VectorXd::Zero(1), {}, {{1, VectorXd::Ones(1)}}};
  EXPECT_NEAR(loop_cocycle(cos1, sin1), std::numbers::pi, 1e-14);
  EXPECT_NEAR(oracle::loop_cocycle_quadrature(cos1, sin1, Eigen::MatrixXd()), std::numbers::pi,
              1e-12);
  const TrigLoop constant{VectorXd::Ones(1), {}, {}};
  EXPECT_EQ(loop_cocycle(constant, sin1), 0.0);
  EXPECT_EQ(loop_cocycle(cos1, cos1), 0.0);
}

TEST(LoopCocycle, AntisymmetricAndMatchesQuadrature) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const int r = 1 + t % 3;
    const auto xi = random_loop(r, 4, rng), eta = random_loop(r, 3, rng);
    Eigen::MatrixXd form = Eigen::MatrixXd::Identity(r, r);
    if (r == 2) form << 2, -1, -1, 2;
    const double w = loop_cocycle(xi, eta, form);
    EXPECT_NEAR(w, -loop_cocycle(eta, xi, form), 1e-12);
    EXPECT_NEAR(loop_cocycle(xi, xi, form), 0.0, 1e-12);
    EXPECT_NEAR(w, oracle::loop_cocycle_quadrature(xi, eta, form), 1e-9 * (1 + std::abs(w)));
  }
}

TEST(Modes, VacuumAndGrading) {
  const auto ops = mode_operators({2, 3, 4});
  ASSERT_EQ(ops.basis.front(), Occupation(6, 0));
  for (int m = 1; m <= 3; ++m) {
    for (int c = 0; c < 2; ++c) {
      EXPECT_EQ(Eigen::VectorXd(ops.a(m, c).col(0)).norm(), 0.0);
    }
  }
  Eigen::VectorXd vac = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ops.basis.size()));
  vac(0) = 1.0;
  const Eigen::VectorXd two = ops.a_dag(1, 0) * (ops.a_dag(1, 0) * vac);
  ASSERT_GT(two.norm(), 0.0);
  for (Eigen::Index i = 0; i < two.size(); ++i) {
    if (two(i) != 0.0) EXPECT_EQ(ops.energy[i], 2);
  }
  EXPECT_NEAR(two.squaredNorm(), 2.0, 1e-12);  // <0|a a a+ a+|0> = 2 for m = 1
}

TEST(Modes, CommutatorInterior) {
  int previous_interior = -1;
  for (int e = 2; e <= 6; ++e) {
    const auto ops = mode_operators({2, 3, e});
    const auto r = commutator_check(ops);
    EXPECT_LT(r.max_deviation, 1e-12);
    EXPECT_GT(r.interior_states, previous_interior);
    EXPECT_EQ(r.interior_states + r.boundary_states, static_cast<int>(ops.basis.size()));
    previous_interior = r.interior_states;
  }
}

TEST(Modes, BasisEnergiesBounded) {
  const ModeTruncation tr{2, 4, 5};
  const auto basis = oscillator_basis(tr);
  for (std::size_t i = 1; i < basis.size(); ++i) {
    EXPECT_LE(oscillator_energy(basis[i - 1], 2), oscillator_energy(basis[i], 2));
    EXPECT_LE(oscillator_energy(basis[i], 2), 5);
  }
  // Parts <= 4 in 2 colours; up to energy 5 that is all 2-coloured partitions but 5.
  const auto p = colored_partitions(2, 5);
  std::int64_t total = 0;
  for (auto c : p) total += c;
  EXPECT_EQ(static_cast<std::int64_t>(basis.size()), total - 2);
}

TEST(Sectors, ColoredPartitions) {
  EXPECT_EQ(colored_partitions(1, 6), (std::vector<std::int64_t>{1, 1, 2, 3, 5, 7, 11}));
  EXPECT_EQ(colored_partitions(2, 4), (std::vector<std::int64_t>{1, 2, 5, 10, 20}));
}

TEST(Sectors, A1Examples) {
  const auto lat = lattice("A1");
  const auto vac = sector_character(lat, {0}, 3);
  EXPECT_EQ(vac.ground_energy, Rational(0));
  EXPECT_EQ(vac.coefficients, (std::vector<std::int64_t>{1, 3, 4, 7}));
  const auto half = sector_character(lat, {1}, 2);
  EXPECT_EQ(half.ground_energy, Rational(1, 4));
  EXPECT_EQ(half.coefficients, (std::vector<std::int64_t>{2, 2, 6}));
}

TEST(Sectors, VacuumAtZeroEnergy) {
  for (const auto& named : bundled_lattices()) {
    const auto lat = validate_even_lattice(named.gram);
    if (lat.rank() > 4) continue;
    EXPECT_EQ(sector_character(lat, discriminant_group(lat).zero(), 0).coefficients,
              std::vector<std::int64_t>{1})
        << named.name;
  }
}

TEST(Sectors, MinimalLiftIsShortest) {
  const auto lat = lattice("A2");
  const auto disc = discriminant_group(lat);
  for (std::int64_t i = 0; i < disc.order(); ++i) {
    const auto lift = minimal_lift(lat, disc, disc.element_at(i));
    const auto vs = coset_vectors(lat, lift, Rational(2));
    ASSERT_FALSE(vs.empty());
    Rational best = vs.front().second, at_lift{-1};
    for (const auto& v : vs) {
      best = std::min(best, v.second);
      if (v.first == lift) at_lift = v.second;
    }
    EXPECT_EQ(at_lift, best);
  }
}

// Generating-function coefficients against an explicit state enumeration.
TEST(Sectors, MatchBruteForce) {
  for (const auto& named : bundled_lattices()) {
    const auto lat = validate_even_lattice(named.gram);
    const auto disc = discriminant_group(lat);
    if (disc.order() > 9 || lat.rank() > 2) continue;
    for (std::int64_t i = 0; i < disc.order(); ++i) {
      const auto phi = disc.element_at(i);
      const auto fast = sector_character(lat, phi, 10);
      const auto slow = oracle::sector_states(lat, disc, phi, 10);
      EXPECT_EQ(fast.ground_energy, slow.ground) << named.name << " " << i;
      EXPECT_EQ(fast.coefficients, slow.counts) << named.name << " " << i;
    }
  }
}

TEST(Sectors, PositiveEnergy) {
  const auto lat = lattice("A1");
  const auto vac = positive_energy_check(sector_energy_levels(lat, {0}, 4));
  EXPECT_TRUE(vac.positive);
  EXPECT_EQ(vac.ground, Rational(0));
  auto levels = sector_energy_levels(lat, {1}, 4);
  const auto half = positive_energy_check(levels);
  EXPECT_TRUE(half.positive);
  EXPECT_EQ(half.ground, Rational(1, 4));
  for (auto& l : levels) l = -l;
  EXPECT_FALSE(positive_energy_check(levels).positive);
}

TEST(Sewing, Examples) {
  for (const auto& [name, e] :
       std::vector<std::pair<std::string, int>>{{"A1", 0}, {"A1", 4}, {"A1^2", 3}, {"A2", 6}, {"L6", 8}}) {
    const auto r = annulus_sewing_check(lattice(name), e);
    EXPECT_TRUE(r.equal) << name;
    EXPECT_FALSE(r.sector_side.empty());
    if (e == 0) {
      EXPECT_EQ(r.sector_side.size(), 1u);
      EXPECT_EQ(r.sector_side.begin()->second, 1);
    }
  }
}

TEST(Overlap, Examples) {
  EXPECT_NEAR(bogoliubov_overlap(MatrixXcd::Zero(2, 2)), 1.0, 1e-15);
  const MatrixXcd half = MatrixXcd::Constant(1, 1, 0.5);
  EXPECT_NEAR(bogoliubov_overlap(half), std::pow(0.75, 0.25), 1e-15);
  EXPECT_NEAR(bogoliubov_overlap(half), 0.93060, 1e-5);
  EXPECT_NEAR(oracle::gaussian_overlap(half), std::pow(0.75, 0.25), 1e-8);
  EXPECT_EQ(kind_of([] { bogoliubov_overlap(MatrixXcd::Constant(1, 1, 1.0)); }),
            ErrorKind::NotContractive);
  EXPECT_EQ(kind_of([] { bogoliubov_overlap(MatrixXcd::Constant(1, 1, Complex(0, 1.5))); }),
            ErrorKind::NotContractive);
}

TEST(Overlap, MonotoneTowardsBoundary) {
  MatrixXcd t(2, 2);
  t << 0.3, Complex(0.1, 0.2), Complex(0.1, 0.2), -0.4;
  t /= t.operatorNorm();
  double prev = 1.0;
  for (double s = 0.05; s < 1.0; s += 0.05) {
    const double o = bogoliubov_overlap(s * t);
    EXPECT_LT(o, prev);
    prev = o;
  }
  EXPECT_LT(bogoliubov_overlap(0.999999 * t), 0.05);
}

TEST(Overlap, AdjointSymmetryAndQuadrature) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n;
  for (int t = 0; t < 20; ++t) {
    const int d = 1 + t % 2;
    MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = Complex(n(rng), n(rng));
    m /= 1.25 * m.operatorNorm();
    EXPECT_NEAR(bogoliubov_overlap(m), bogoliubov_overlap(m.adjoint()), 1e-12);
    MatrixXcd sym = 0.5 * (m + m.transpose());
    EXPECT_NEAR(bogoliubov_overlap(sym), oracle::gaussian_overlap(sym), 1e-8);
  }
}

}  // namespace
}  // namespace lcft
