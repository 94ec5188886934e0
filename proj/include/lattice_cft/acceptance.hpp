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

#ifndef LATTICE_CFT_ACCEPTANCE_HPP_
#define LATTICE_CFT_ACCEPTANCE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lattice_cft/io.hpp"
#include "lattice_cft/modular.hpp"

namespace lcft {

inline constexpr std::uint64_t kDefaultSeed = 20260419;
inline constexpr int kNumCriteria = 10;

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Replaces every floating-point tolerance; comparisons are strict, so 0
  /// fails all numerical checks.
  std::optional<double> tolerance;
  /// Test hook: negate the S-matrix before checking the modular relations.
  bool flip_s_sign = false;
  /// 0 means thread_limit().
  int threads = 0;
  /// Criterion ids to run; empty means all.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  io::Json detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
  io::Json to_json() const;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& options);

/// Deterministic per-task seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Cut s along `cuts` random circles (separating or not); gluing the pieces
/// along the returned matching gives s back.
Split random_split(const Surface& s, int cuts, std::mt19937_64& rng);

/// Connected surface with b circles c0.. of random orientation.
Surface random_connected_surface(int genus, int circles, std::mt19937_64& rng);

/// Uniform labels; when `balanced`, the last circle is adjusted so every
/// component has vanishing obstruction.
BlockLabel random_labels(const Surface& s, const DiscriminantGroup& disc, bool balanced,
                         std::mt19937_64& rng);

}  // namespace lcft

#endif  // LATTICE_CFT_ACCEPTANCE_HPP_
