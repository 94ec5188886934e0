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

#ifndef LATTICE_CFT_CATALOG_HPP_
#define LATTICE_CFT_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lattice_cft/lattice.hpp"

namespace lcft {

struct NamedLattice {
  std::string name;
  IntMatrix gram;
};

/// Small even lattices whose discriminant groups cover every order 1..16.
const std::vector<NamedLattice>& bundled_lattices();

/// The four root lattices A1 = [[2]], A2, D4, E8.
std::vector<NamedLattice> root_lattices();

std::optional<IntMatrix> find_bundled(const std::string& name);

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

}  // namespace lcft

#endif  // LATTICE_CFT_CATALOG_HPP_
