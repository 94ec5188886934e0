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
#include "lattice_cft/heisenberg.hpp"
#include "lattice_cft/modular.hpp"

namespace lcft {
namespace {

constexpr auto kIn = Orientation::In;
constexpr auto kOut = Orientation::Out;

DiscriminantGroup disc_of(const std::string& name) {
  return discriminant_group(validate_even_lattice(*find_bundled(name)));
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

Complex e(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

TEST(Blocks, DimensionExamples) {
  const auto z2 = disc_of("A1");
  EXPECT_EQ(block_dimension(Surface::sphere(), {}, z2), 1);
  EXPECT_EQ(block_dimension(Surface::closed(1), {}, z2), 2);
  EXPECT_EQ(block_dimension(Surface::connected(1, {{"x", kOut}}), {{"x", {1}}}, z2), 0);
  EXPECT_EQ(block_dimension(Surface::connected(1, {{"x", kOut}}), {{"x", {0}}}, z2), 2);
  EXPECT_EQ(kind_of([&] { block_dimension(Surface::connected(0, {{"x", kOut}}), {}, z2); }),
            ErrorKind::MissingLabel);
}

TEST(Blocks, ClosedDimensionIsIrrepDimension) {
  for (const char* name : {"A1", "A2", "L4", "A1^2", "D4"}) {
    const auto disc = disc_of(name);
    for (int g = 0; g <= 2; ++g) {
      EXPECT_EQ(block_dimension(Surface::closed(g), {}, disc),
                schroedinger_irrep(disc, g).dimension());
    }
  }
}

TEST(Blocks, TensorAndDuality) {
  const auto z3 = disc_of("A2");
  auto r = verify_tensor_duality(Surface::sphere(), {}, Surface::sphere(), {}, z3);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.union_dimension, 1);
  r = verify_tensor_duality(Surface::closed(1), {}, Surface::closed(1), {}, z3);
  EXPECT_EQ(r.union_dimension, 9);
  EXPECT_TRUE(r.equal);
  r = verify_tensor_duality(Surface::connected(1, {{"x", kOut}}), {{"x", {0}}}, Surface::sphere(),
                            {}, z3);
  EXPECT_EQ(r.reversed_dimension, 3);
  EXPECT_TRUE(r.equal);
  r = verify_tensor_duality(Surface::connected(0, {{"x", kOut}, {"y", kIn}}),
                            {{"x", {1}}, {"y", {1}}}, Surface::closed(2), {}, z3);
  EXPECT_EQ(r.union_dimension, 9);
  EXPECT_EQ(r.reversed_dimension, 1);
  EXPECT_TRUE(r.equal);
}

TEST(Blocks, FactorizationExamples) {
  const auto z2 = disc_of("A1");
  const Split two_tori{Surface({{1, {{"a", kOut}}}, {1, {{"b", kIn}}}}), {{"a", "b"}}};
  auto r = verify_factorization(Surface::closed(2), two_tori, {}, z2);
  EXPECT_EQ(r.lhs, 4);
  EXPECT_EQ(r.rhs, 4);
  EXPECT_TRUE(r.equal);
  ASSERT_EQ(r.terms.size(), 1u);

  const Split self{Surface::connected(1, {{"a", kOut}, {"b", kIn}}), {{"a", "b"}}};
  r = verify_factorization(Surface::closed(2), self, {}, z2);
  EXPECT_EQ(r.rhs, 4);
  EXPECT_EQ(r.terms.size(), 2u);
  EXPECT_TRUE(r.equal);

  const auto z4 = disc_of("L4");
  const Surface annulus = Surface::connected(0, {{"x", kOut}, {"y", kIn}});
  const Split pants_disk{
      Surface({{0, {{"x", kOut}, {"y", kIn}, {"c", kIn}}}, {0, {{"d", kOut}}}}), {{"d", "c"}}};
  r = verify_factorization(annulus, pants_disk, {{"x", {3}}, {"y", {3}}}, z4);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_TRUE(r.equal);
}

TEST(Blocks, FactorizationRejectsBadSplit) {
  const auto z2 = disc_of("A1");
  const Split wrong{Surface({{1, {{"a", kOut}}}, {0, {{"b", kIn}}}}), {{"a", "b"}}};
  EXPECT_EQ(kind_of([&] { verify_factorization(Surface::closed(2), wrong, {}, z2); }),
            ErrorKind::InvalidSplit);
  const Split orient{Surface({{1, {{"a", kOut}}}, {1, {{"b", kOut}}}}), {{"a", "b"}}};
  EXPECT_EQ(kind_of([&] { verify_factorization(Surface::closed(2), orient, {}, z2); }),
            ErrorKind::InvalidSplit);
}

TEST(Modular, SemionMatrices) {
  const auto z2 = disc_of("A1");
  const Eigen::MatrixXcd s = s_matrix(z2);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(s(0, 0) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s(1, 1) + r), 0.0, 1e-15);
  const Eigen::VectorXcd t = t_matrix_unframed(z2);
  EXPECT_NEAR(std::abs(t(1) - Complex(0, 1)), 0.0, 1e-15);
  const auto rel = genus1_mcg_rep(z2).relations;
  EXPECT_LT(rel.max(), 1e-12);
}

TEST(Modular, TrivialGroup) {
  const auto disc = disc_of("E8");
  const auto data = modular_data(disc, 1, 8);
  EXPECT_NEAR(std::abs(data.S(0, 0) - 1.0), 0.0, 1e-15);
  // sigma = 0 mod 8 for E8
  EXPECT_NEAR(std::abs(data.T(0) - 1.0), 0.0, 1e-15);
  EXPECT_LT(modular_relations(data, disc).max(), 1e-15);
}

TEST(Modular, StCubedAnomaly) {
  for (const auto& [name, sigma] : std::vector<std::pair<std::string, int>>{{"A1", 1}, {"A2", 2}, {"D4", 4}}) {
    const auto disc = disc_of(name);
    const auto data = modular_data(disc, 1, 0);
    EXPECT_EQ(data.signature_mod8, sigma);
    const Eigen::MatrixXcd st = data.S * data.T_unframed.asDiagonal();
    const Eigen::MatrixXcd lhs = st * st * st;
    const Eigen::MatrixXcd rhs = e(sigma / 8.0) * data.S * data.S;
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << name;
  }
}

class ModularAll : public ::testing::TestWithParam<NamedLattice> {};

TEST_P(ModularAll, Relations) {
  const auto disc = discriminant_group(validate_even_lattice(GetParam().gram));
  const auto rel = modular_relations(modular_data(disc, 1, 0), disc);
  EXPECT_LT(rel.unitarity, 1e-9);
  EXPECT_LT(rel.symmetry, 1e-9);
  EXPECT_LT(rel.charge_conjugation, 1e-9);
  EXPECT_LT(rel.s_fourth, 1e-9);
  EXPECT_LT(rel.st_cubed, 1e-9);
  EXPECT_LT(rel.st_cubed_framed, 1e-9);
}

TEST_P(ModularAll, FusionIsGroupLaw) {
  const auto disc = discriminant_group(validate_even_lattice(GetParam().gram));
  const auto n = fusion_rules(disc);
  for (std::int64_t a = 0; a < n.size(); ++a) {
    for (std::int64_t b = 0; b < n.size(); ++b) {
      const auto sum = disc.index_of(disc.add(disc.element_at(a), disc.element_at(b)));
      for (std::int64_t c = 0; c < n.size(); ++c) EXPECT_EQ(n(a, b, c), c == sum ? 1 : 0);
    }
  }
  if (n.size() <= 9) EXPECT_TRUE(n.associative());
}

INSTANTIATE_TEST_SUITE_P(Bundled, ModularAll, ::testing::ValuesIn(bundled_lattices()),
                         [](const auto& info) {
                           std::string s = info.param.name;
                           for (auto& ch : s) if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });

TEST(Modular, FusionZ2) {
  const auto n = fusion_rules(disc_of("A1"));
  EXPECT_EQ(n(0, 0, 0), 1);
  EXPECT_EQ(n(1, 1, 0), 1);
  EXPECT_EQ(n(1, 1, 1), 0);
}

TEST(Verlinde, Examples) {
  const auto z3 = disc_of("A2");
  auto r = verlinde_check(Surface::sphere(), {}, z3);
  EXPECT_EQ(r.verlinde, 1);
  EXPECT_TRUE(r.equal);
  r = verlinde_check(Surface::closed(2), {}, z3);
  EXPECT_EQ(r.verlinde, 9);
  EXPECT_TRUE(r.equal);
  r = verlinde_check(Surface::connected(1, {{"x", kOut}}), {{"x", {1}}}, z3);
  EXPECT_EQ(r.verlinde, 0);
  EXPECT_TRUE(r.equal);
  EXPECT_LT(r.max_deviation, 1e-9);
}

TEST(Verlinde, RandomInstances) {
  std::mt19937_64 rng(3);
  const auto lattices = bundled_lattices();
  for (int t = 0; t < 300; ++t) {
    const auto& lat = lattices[rng() % lattices.size()];
    const auto disc = discriminant_group(validate_even_lattice(lat.gram));
    const int g = static_cast<int>(rng() % 3);
    const int b = static_cast<int>(rng() % 4);
    std::vector<BoundaryCircle> circles;
    BlockLabel labels;
    GroupElement total = disc.zero();
    for (int i = 0; i < b; ++i) {
      const auto o = rng() % 2 ? kOut : kIn;
      const std::string id = "c" + std::to_string(i);
      circles.push_back({id, o});
      labels[id] = disc.element_at(static_cast<std::int64_t>(rng() % disc.order()));
      total = disc.add(total, o == kOut ? labels[id] : disc.negate(labels[id]));
    }
    // Half the time force the obstruction to vanish.
    if (b > 0 && t % 2 == 0) {
      const auto& last = circles.back();
      const GroupElement fix = last.orientation == kOut ? disc.negate(total) : total;
      labels[last.id] = disc.add(labels[last.id], fix);
    }
    const auto r = verlinde_check(Surface::connected(g, circles), labels, disc);
    EXPECT_TRUE(r.equal) << lat.name << " g=" << g << " b=" << b;
    EXPECT_LT(r.max_deviation, 1e-6);
    if (t % 2 == 0) EXPECT_EQ(r.block_dimension, ipow(disc.order(), g));
  }
}

}  // namespace
}  // namespace lcft
