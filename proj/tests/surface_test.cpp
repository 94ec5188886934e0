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

#include <random>

#include <gtest/gtest.h>

#include "lattice_cft/catalog.hpp"
#include "lattice_cft/oracles.hpp"
#include "lattice_cft/surface.hpp"

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

TEST(Surface, H1RankExamples) {
  EXPECT_EQ(h1_rank(Surface::sphere()), 0);
  const Surface torus1 = Surface::connected(1, {{"x", kOut}});
  EXPECT_EQ(h1_rank(torus1), 2);
  EXPECT_EQ(oracle::homology_rank_from_euler(torus1), 2);
  const Surface g2b2 = Surface::connected(2, {{"x", kOut}, {"y", kIn}});
  EXPECT_EQ(h1_rank(g2b2), 5);
  EXPECT_EQ(oracle::homology_rank_from_euler(g2b2), 5);
}

TEST(Surface, RejectsDuplicateIds) {
  EXPECT_EQ(kind_of([] { Surface::connected(0, {{"x", kOut}, {"x", kIn}}); }),
            ErrorKind::InvalidInput);
}

TEST(Surface, IntersectionGenusOneZ2) {
  const auto disc = disc_of("A1");
  const auto s = intersection_matrix(Surface::closed(1), disc);
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int y1 = 0; y1 < 2; ++y1) {
      for (int x2 = 0; x2 < 2; ++x2) {
        for (int y2 = 0; y2 < 2; ++y2) {
          const HomologyClass u{{x1}, {y1}}, v{{x2}, {y2}};
          EXPECT_EQ(s(u, v), mod_rational(Rational(x1 * y2 - y1 * x2, 2), 1));
        }
      }
    }
  }
}

TEST(Surface, BoundaryClassesAreInTheKernel) {
  const auto disc = disc_of("A2");
  const Surface s = Surface::connected(1, {{"x", kOut}, {"y", kIn}, {"z", kIn}});
  const auto pairing = intersection_matrix(s, disc);
  const auto& basis = pairing.basis();
  ASSERT_EQ(basis.rank, 4);
  for (int p = 0; p < basis.rank; ++p) {
    if (!basis.is_boundary_class(p)) continue;
    HomologyClass e(4, disc.zero());
    e[p] = {1};
    for (std::int64_t i = 0; i < 81; ++i) {
      HomologyClass y(4);
      std::int64_t idx = i;
      for (int q = 3; q >= 0; --q) {
        y[q] = {idx % 3};
        idx /= 3;
      }
      EXPECT_EQ(pairing(e, y), Rational(0));
    }
  }
  const auto m = pairing.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      EXPECT_EQ(mod_rational(m(i, j) + m(j, i), 1), Rational(0));
    }
  }
}

TEST(Surface, GenusZeroPairingVanishes) {
  const auto disc = disc_of("L4");
  const auto pairing =
      intersection_matrix(Surface::connected(0, {{"a", kOut}, {"b", kIn}, {"c", kIn}}), disc);
  for (Eigen::Index i = 0; i < pairing.matrix().size(); ++i) {
    EXPECT_EQ(pairing.matrix().data()[i], Rational(0));
  }
}

TEST(Surface, DeltaExamples) {
  const auto disc = disc_of("L8");
  const Surface annulus = Surface::connected(0, {{"a", kOut}, {"b", kIn}});
  EXPECT_EQ(delta_obstruction(annulus, {{"a", {3}}, {"b", {3}}}, disc)[0], disc.zero());
  EXPECT_EQ(delta_obstruction(Surface::connected(1, {{"x", kOut}}), {{"x", {5}}}, disc)[0],
            GroupElement{5});
  const Surface pants = Surface::connected(0, {{"a", kOut}, {"b", kOut}, {"c", kOut}});
  EXPECT_EQ(delta_obstruction(pants, {{"a", {3}}, {"b", {6}}, {"c", {7}}}, disc)[0], disc.zero());
  EXPECT_EQ(kind_of([&] { delta_obstruction(pants, {{"a", {3}}}, disc); }),
            ErrorKind::MissingLabel);
}

TEST(Surface, GlueExamples) {
  const Surface disk1 = Surface::connected(0, {{"a", kOut}});
  const Surface disk2 = Surface::connected(0, {{"b", kIn}});
  const Surface sphere = glue(disk1, disk2, {{"a", "b"}});
  EXPECT_EQ(sphere.shape(), Surface::sphere().shape());

  const Surface t1 = Surface::connected(1, {{"a", kOut}});
  const Surface t2 = Surface::connected(1, {{"b", kIn}});
  const Surface g2 = glue(t1, t2, {{"a", "b"}});
  EXPECT_EQ(g2.shape(), Surface::closed(2).shape());
  EXPECT_EQ(g2.euler_characteristic(), t1.euler_characteristic() + t2.euler_characteristic());

  const Surface two_holed = Surface::connected(1, {{"a", kOut}, {"b", kIn}});
  const Surface self = glue(two_holed, {{"a", "b"}});
  EXPECT_EQ(self.shape(), Surface::closed(2).shape());
  EXPECT_EQ(h1_rank(self), oracle::homology_rank_from_euler(self));
}

TEST(Surface, GlueErrors) {
  const Surface s = Surface::connected(0, {{"a", kOut}, {"b", kOut}, {"c", kIn}});
  EXPECT_EQ(kind_of([&] { glue(s, {{"a", "b"}}); }), ErrorKind::OrientationMismatch);
  EXPECT_EQ(kind_of([&] { glue(s, {{"a", "zz"}}); }), ErrorKind::UnknownCircle);
  EXPECT_EQ(kind_of([&] { glue(s, {{"c", "a"}}); }), ErrorKind::OrientationMismatch);
}

// Random connected-or-not surfaces glued along random matchings; h1 against
// the Betti-number oracle, plus associativity of sequential gluing.
TEST(Surface, RandomGluingsMatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> genus(0, 2), circles(1, 3);
    std::vector<SurfaceComponent> comps;
    std::vector<std::string> outs, ins;
    int id = 0;
    const int ncomp = 1 + trial % 3;
    for (int c = 0; c < ncomp; ++c) {
      SurfaceComponent comp{genus(rng), {}};
      const int nb = circles(rng);
      for (int b = 0; b < nb; ++b) {
        const auto o = (id % 2 == 0) ? kOut : kIn;
        const std::string name = "c" + std::to_string(id++);
        comp.boundaries.push_back({name, o});
        (o == kOut ? outs : ins).push_back(name);
      }
      comps.push_back(std::move(comp));
    }
    const Surface s(comps);
    std::shuffle(outs.begin(), outs.end(), rng);
    std::shuffle(ins.begin(), ins.end(), rng);
    Matching m;
    for (std::size_t i = 0; i < std::min(outs.size(), ins.size()); ++i) m.emplace_back(outs[i], ins[i]);

    const Surface glued = glue(s, m);
    EXPECT_EQ(h1_rank(glued), oracle::homology_rank_from_euler(glued));
    EXPECT_EQ(glued.euler_characteristic(), s.euler_characteristic());

    // Same matching applied one pair at a time.
    Surface step = s;
    for (const auto& pair : m) step = glue(step, Matching{pair});
    EXPECT_EQ(step.shape(), glued.shape());
  }
}

}  // namespace
}  // namespace lcft
