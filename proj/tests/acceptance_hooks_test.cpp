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

#include "lattice_cft/acceptance.hpp"
#include "lattice_cft/catalog.hpp"

namespace lcft {
namespace {

std::map<int, bool> verdicts(const AcceptanceReport& r) {
  std::map<int, bool> out;
  for (const auto& c : r.criteria) out[c.id] = c.passed;
  return out;
}

TEST(AcceptanceHooks, FlippedSignBreaksOnlyModularRelations) {
  AcceptanceOptions o;
  o.flip_s_sign = true;
  o.only = {1, 5, 6};
  const auto v = verdicts(run_acceptance(o));
  EXPECT_TRUE(v.at(1));
  EXPECT_FALSE(v.at(5));
  EXPECT_TRUE(v.at(6));
}

TEST(AcceptanceHooks, ZeroToleranceFailsNumericalCriteriaOnly) {
  AcceptanceOptions o;
  o.tolerance = 0.0;
  o.only = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto v = verdicts(run_acceptance(o));
  for (int exact : {1, 2, 4, 8}) EXPECT_TRUE(v.at(exact)) << exact;
  for (int numeric : {3, 5, 6, 7, 9}) EXPECT_FALSE(v.at(numeric)) << numeric;
}

TEST(AcceptanceHooks, DeterminismOnItsOwn) {
  AcceptanceOptions o;
  o.only = {10};
  const auto r = run_acceptance(o);
  ASSERT_EQ(r.criteria.size(), 1u);
  EXPECT_TRUE(r.criteria[0].passed);
}

TEST(AcceptanceHooks, RejectsUnknownCriterion) {
  AcceptanceOptions o;
  o.only = {11};
  EXPECT_THROW(run_acceptance(o), Error);
}

TEST(AcceptanceHooks, ThreadCountDoesNotChangeReport) {
  AcceptanceOptions a, b;
  a.only = b.only = {2, 6};
  a.threads = 1;
  b.threads = 4;
  EXPECT_EQ(run_acceptance(a).to_json().dump(), run_acceptance(b).to_json().dump());
}

TEST(RandomSplit, GluesBackToTheSurface) {
  std::mt19937_64 rng(4);
  const auto disc = discriminant_group(validate_even_lattice(*find_bundled("L4")));
  for (int t = 0; t < 200; ++t) {
    const Surface s = random_connected_surface(t % 4, t % 5, rng);
    const Split split = random_split(s, 1 + t % 3, rng);
    EXPECT_EQ(glue(split.pieces, split.matching).shape(), s.shape());
    const BlockLabel labels = random_labels(s, disc, true, rng);
    for (const auto& d : delta_obstruction(s, labels, disc)) EXPECT_TRUE(disc.is_zero(d));
    EXPECT_TRUE(verify_factorization(s, split, labels, disc).equal);
  }
}

TEST(Seeds, DeriveSeedSpreads) {
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 2, 4));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 3));
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
}

}  // namespace
}  // namespace lcft
