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
#include <set>

#include <Eigen/LU>
#include <gtest/gtest.h>

#include "lattice_cft/catalog.hpp"
#include "lattice_cft/lattice.hpp"

namespace lcft {
namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

// Determinant by cofactor expansion.
std::int64_t cofactor_det(const IntMatrix& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  std::int64_t det = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, k = 0; c < n; ++c) {
        if (c != j) minor(r - 1, k++) = m(r, c);
      }
    }
    det += (j % 2 == 0 ? 1 : -1) * m(0, j) * cofactor_det(minor);
  }
  return det;
}

// Cosets of L in L^dual, enumerated via the dual basis G^{-1} e_i, with
// elements identified by fractional parts of their lattice coordinates.
std::set<std::vector<Rational>> dual_cosets(const EvenLattice& lat) {
  const int r = lat.rank();
  RationalMatrix g(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) g(i, j) = Rational(lat.gram()(i, j));
  }
  const RationalMatrix ginv = g.inverse();
  std::set<std::vector<Rational>> seen{std::vector<Rational>(static_cast<std::size_t>(r), Rational(0))};
  std::vector<std::vector<Rational>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < r; ++i) {
      auto next = cur;
      for (int k = 0; k < r; ++k) next[k] = mod_rational(next[k] + ginv(k, i), 1);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return seen;
}

TEST(EvenLattice, ValidatesExamples) {
  const auto a1 = validate_even_lattice(mat({{2}}));
  EXPECT_EQ(a1.rank(), 1);
  EXPECT_EQ(a1.det(), 2);
  const auto a2 = validate_even_lattice(mat({{2, 1}, {1, 2}}));
  EXPECT_EQ(a2.rank(), 2);
  EXPECT_EQ(a2.det(), 3);
  EXPECT_EQ(a2.det(), cofactor_det(a2.gram()));
  EXPECT_EQ(a2.level_ell(), 1);
  EXPECT_EQ(validate_even_lattice(mat({{4, 2}, {2, 4}})).level_ell(), 2);
}

TEST(EvenLattice, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { validate_even_lattice(mat({{1}})); }), ErrorKind::OddDiagonal);
  EXPECT_EQ(kind_of([] { validate_even_lattice(mat({{2, 1}, {0, 2}})); }), ErrorKind::NotSymmetric);
  EXPECT_EQ(kind_of([] { validate_even_lattice(mat({{2, 3}, {3, 2}})); }),
            ErrorKind::NotPositiveDefinite);
  EXPECT_EQ(kind_of([] { validate_even_lattice(mat({{-2}})); }), ErrorKind::NotPositiveDefinite);
}

TEST(SmithForm, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::Identity(3, 3)).diagonal(),
            (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form(mat({{2, 1}, {1, 2}})).diagonal(), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(smith_normal_form(mat({{2, 0}, {0, 4}})).diagonal(), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(smith_normal_form(mat({{4, 0}, {0, 6}})).diagonal(), (std::vector<std::int64_t>{2, 12}));
}

TEST(SmithForm, RandomMatricesSatisfyPostcondition) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = size(rng), cols = size(rng);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = entry(rng) * (trial % 3 == 0 ? 2 : 1);
    }
    const SmithForm f = smith_normal_form(m);
    EXPECT_EQ(f.U * m * f.V, f.D);
    EXPECT_EQ(f.U * f.U_inv, IntMatrix::Identity(rows, rows));
    EXPECT_EQ(f.V * f.V_inv, IntMatrix::Identity(cols, cols));
    const auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i] != 0) EXPECT_EQ(d[i + 1] % d[i], 0);
      else EXPECT_EQ(d[i + 1], 0);
    }
  }
}

TEST(Discriminant, A1) {
  const auto disc = discriminant_group(validate_even_lattice(mat({{2}})));
  EXPECT_EQ(disc.invariant_factors(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(disc.bilinear({1}, {1}), Rational(1, 2));
  EXPECT_EQ(disc.quadratic({1}), Rational(1, 2));
}

TEST(Discriminant, A2) {
  const auto disc = discriminant_group(validate_even_lattice(mat({{2, 1}, {1, 2}})));
  EXPECT_EQ(disc.invariant_factors(), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(disc.quadratic({1}), Rational(2, 3));
  EXPECT_EQ(disc.quadratic({2}), Rational(2, 3));
}

TEST(Discriminant, E8IsTrivial) {
  const auto disc = discriminant_group(validate_even_lattice(*find_bundled("E8")));
  EXPECT_EQ(disc.order(), 1);
  EXPECT_EQ(disc.num_factors(), 0);
  EXPECT_NEAR(std::abs(gauss_sum(disc) - Complex(1, 0)), 0.0, 1e-12);
}

TEST(Discriminant, GaussSumExamples) {
  const auto a1 = discriminant_group(validate_even_lattice(mat({{2}})));
  EXPECT_NEAR(std::abs(gauss_sum(a1) - Complex(1, 1)), 0.0, 1e-12);
  const auto a2 = discriminant_group(validate_even_lattice(mat({{2, 1}, {1, 2}})));
  EXPECT_NEAR(std::abs(gauss_sum(a2) - Complex(0, std::sqrt(3.0))), 0.0, 1e-12);
  EXPECT_EQ(signature_mod8(a1), 1);
  EXPECT_EQ(signature_mod8(a2), 2);
}

class BundledLattice : public ::testing::TestWithParam<NamedLattice> {};

TEST_P(BundledLattice, DiscriminantInvariants) {
  const auto lat = validate_even_lattice(GetParam().gram);
  const auto disc = discriminant_group(lat);
  EXPECT_EQ(disc.order(), lat.det());
  EXPECT_EQ(lat.det(), cofactor_det(lat.gram()));
  EXPECT_EQ(static_cast<std::int64_t>(dual_cosets(lat).size()), disc.order());
  const auto& f = disc.invariant_factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_GT(f[i], 1);
    if (i + 1 < f.size()) EXPECT_EQ(f[i + 1] % f[i], 0);
  }

  const auto elems = disc.elements();
  for (const auto& a : elems) {
    EXPECT_EQ(disc.quadratic(disc.negate(a)), disc.quadratic(a));
    bool injective = disc.is_zero(a);
    for (const auto& b : elems) {
      EXPECT_EQ(disc.bilinear(a, b), disc.bilinear(b, a));
      const Rational polar =
          disc.quadratic(disc.add(a, b)) - disc.quadratic(a) - disc.quadratic(b);
      EXPECT_EQ(mod_rational(polar - 2 * disc.bilinear(a, b), 2), Rational(0));
      if (disc.bilinear(a, b) != Rational(0)) injective = true;
    }
    EXPECT_TRUE(injective) << "degenerate bilinear form";
    // Lifts land in the dual lattice: <lift, e_i> integral.
    const RationalVector l = disc.lift(a);
    for (int i = 0; i < lat.rank(); ++i) {
      RationalVector e = RationalVector::Constant(lat.rank(), Rational(0));
      e(i) = Rational(1);
      EXPECT_EQ(lat.inner(l, e).denominator(), 1);
    }
    EXPECT_EQ(mod_rational(lat.inner(l, l), 2), disc.quadratic(a));
  }

  const Complex g = gauss_sum(disc);
  EXPECT_NEAR(std::abs(g), std::sqrt(static_cast<double>(disc.order())), 1e-9);
  const Complex expected = std::polar(1.0, 2.0 * kPi * (lat.rank() % 8) / 8.0);
  EXPECT_NEAR(std::abs(g / std::abs(g) - expected), 0.0, 1e-9);
  EXPECT_EQ(signature_mod8(disc), lat.rank() % 8);
}

TEST_P(BundledLattice, ElementIndexRoundTrip) {
  const auto disc = discriminant_group(validate_even_lattice(GetParam().gram));
  for (std::int64_t i = 0; i < disc.order(); ++i) EXPECT_EQ(disc.index_of(disc.element_at(i)), i);
}

INSTANTIATE_TEST_SUITE_P(All, BundledLattice, ::testing::ValuesIn(bundled_lattices()),
                         [](const auto& info) {
                           std::string n = info.param.name;
                           for (auto& c : n) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return n;
                         });

TEST(Catalog, CoversEveryOrderUpToSixteen) {
  std::set<std::int64_t> orders;
  for (const auto& l : bundled_lattices()) {
    orders.insert(discriminant_group(validate_even_lattice(l.gram)).order());
  }
  for (std::int64_t n = 1; n <= 16; ++n) EXPECT_TRUE(orders.count(n)) << n;
}

}  // namespace
}  // namespace lcft
