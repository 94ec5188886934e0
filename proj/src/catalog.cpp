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

#include "lattice_cft/catalog.hpp"

namespace lcft {

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix a1() { return from_rows({{2}}); }
IntMatrix a2() { return from_rows({{2, -1}, {-1, 2}}); }
IntMatrix scalar(std::int64_t v) { return from_rows({{v}}); }

// [[2, 1], [1, 2c]] has determinant 4c - 1.
IntMatrix odd_det(std::int64_t c) { return from_rows({{2, 1}, {1, 2 * c}}); }

IntMatrix a_n(int n) {
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -1;
  }
  return m;
}

// A3 chain ending in a norm-4 vector: determinant 13.
IntMatrix det13() {
  IntMatrix m = a_n(4);
  m(3, 3) = 4;
  return m;
}

IntMatrix d4() {
  return from_rows({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}

IntMatrix e8() {
  return from_rows({{2, -1, 0, 0, 0, 0, 0, 0},
                    {-1, 2, -1, 0, 0, 0, 0, 0},
                    {0, -1, 2, -1, 0, 0, 0, -1},
                    {0, 0, -1, 2, -1, 0, 0, 0},
                    {0, 0, 0, -1, 2, -1, 0, 0},
                    {0, 0, 0, 0, -1, 2, -1, 0},
                    {0, 0, 0, 0, 0, -1, 2, 0},
                    {0, 0, -1, 0, 0, 0, 0, 2}});
}

std::vector<NamedLattice> build() {
  std::vector<NamedLattice> out{
      {"A1", a1()}, {"A2", a2()}, {"D4", d4()}, {"E8", e8()},
  };
  for (std::int64_t n = 4; n <= 16; n += 2) out.push_back({"L" + std::to_string(n), scalar(n)});
  for (std::int64_t c = 2; c <= 4; ++c) out.push_back({"M" + std::to_string(4 * c - 1), odd_det(c)});
  out.push_back({"A4", a_n(4)});
  out.push_back({"A8", a_n(8)});
  out.push_back({"N13", det13()});
  out.push_back({"A1^2", block_diagonal({a1(), a1()})});
  out.push_back({"A1+A2", block_diagonal({a1(), a2()})});
  out.push_back({"A1+L4", block_diagonal({a1(), scalar(4)})});
  out.push_back({"A1^3", block_diagonal({a1(), a1(), a1()})});
  out.push_back({"A2^2", block_diagonal({a2(), a2()})});
  out.push_back({"A1+A4", block_diagonal({a1(), a_n(4)})});
  out.push_back({"A1+L6", block_diagonal({a1(), scalar(6)})});
  out.push_back({"L4^2", block_diagonal({scalar(4), scalar(4)})});
  out.push_back({"A1+L8", block_diagonal({a1(), scalar(8)})});
  out.push_back({"A1^2+L4", block_diagonal({a1(), a1(), scalar(4)})});
  out.push_back({"A1^4", block_diagonal({a1(), a1(), a1(), a1()})});
  return out;
}

}  // namespace

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix m = IntMatrix::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    m.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return m;
}

const std::vector<NamedLattice>& bundled_lattices() {
  static const std::vector<NamedLattice> lattices = build();
  return lattices;
}

std::vector<NamedLattice> root_lattices() {
  return {{"A1", a1()}, {"A2", a2()}, {"D4", d4()}, {"E8", e8()}};
}

std::optional<IntMatrix> find_bundled(const std::string& name) {
  for (const auto& l : bundled_lattices()) {
    if (l.name == name) return l.gram;
  }
  return std::nullopt;
}

}  // namespace lcft
