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

#include "lattice_cft/surface.hpp"

#include <algorithm>
#include <set>

namespace lcft {

Surface::Surface(std::vector<SurfaceComponent> components) : components_(std::move(components)) {
  std::set<std::string> seen;
  for (const auto& c : components_) {
    if (c.genus < 0) throw Error(ErrorKind::InvalidInput, "negative genus");
    for (const auto& b : c.boundaries) {
      if (!seen.insert(b.id).second) {
        throw Error(ErrorKind::InvalidInput, "duplicate boundary circle id '" + b.id + "'");
      }
    }
  }
}

int Surface::num_circles() const {
  int n = 0;
  for (const auto& c : components_) n += static_cast<int>(c.boundaries.size());
  return n;
}

int Surface::euler_characteristic() const {
  int chi = 0;
  for (const auto& c : components_) chi += c.euler_characteristic();
  return chi;
}

std::optional<std::pair<int, int>> Surface::find(const std::string& id) const {
  for (int i = 0; i < num_components(); ++i) {
    const auto& bs = components_[i].boundaries;
    for (int j = 0; j < static_cast<int>(bs.size()); ++j) {
      if (bs[j].id == id) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

Surface Surface::reversed() const {
  auto comps = components_;
  for (auto& c : comps) {
    for (auto& b : c.boundaries) b.orientation = opposite(b.orientation);
  }
  return Surface(std::move(comps));
}

Surface Surface::disjoint_union(const Surface& other) const {
  auto comps = components_;
  comps.insert(comps.end(), other.components_.begin(), other.components_.end());
  return Surface(std::move(comps));
}

std::vector<std::pair<int, int>> Surface::shape() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : components_) {
    out.emplace_back(c.genus, static_cast<int>(c.boundaries.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int h1_rank(const SurfaceComponent& c) {
  return 2 * c.genus + std::max(static_cast<int>(c.boundaries.size()) - 1, 0);
}

int h1_rank(const Surface& s) {
  int n = 0;
  for (const auto& c : s.components()) n += h1_rank(c);
  return n;
}

bool HomologyBasis::is_boundary_class(int index) const {
  for (const auto& b : blocks) {
    if (index >= b.offset + 2 * b.genus && index < b.offset + 2 * b.genus + b.num_boundary_classes) {
      return true;
    }
  }
  return false;
}

HomologyBasis homology_basis(const Surface& s) {
  HomologyBasis basis;
  int offset = 0;
  for (const auto& c : s.components()) {
    const int nb = std::max(static_cast<int>(c.boundaries.size()) - 1, 0);
    basis.blocks.push_back({offset, c.genus, nb});
    offset += 2 * c.genus + nb;
  }
  basis.rank = offset;
  basis.intersection = IntMatrix::Zero(offset, offset);
  for (const auto& b : basis.blocks) {
    for (int i = 0; i < b.genus; ++i) {
      const int a = b.offset + 2 * i;
      basis.intersection(a, a + 1) = 1;
      basis.intersection(a + 1, a) = -1;
    }
  }
  return basis;
}

Rational IntersectionPairing::operator()(const HomologyClass& x, const HomologyClass& y) const {
  if (static_cast<int>(x.size()) != basis_.rank || static_cast<int>(y.size()) != basis_.rank) {
    throw Error(ErrorKind::DimensionMismatch, "homology class has wrong number of cycles");
  }
  Rational s(0);
  for (int p = 0; p < basis_.rank; ++p) {
    for (int q = 0; q < basis_.rank; ++q) {
      const auto j = basis_.intersection(p, q);
      if (j != 0) s += Rational(j) * disc_.bilinear(x[p], y[q]);
    }
  }
  return mod_rational(s, 1);
}

RationalMatrix IntersectionPairing::matrix() const {
  const int k = disc_.num_factors();
  const RationalMatrix b = disc_.bilinear_matrix();
  RationalMatrix out = RationalMatrix::Constant(basis_.rank * k, basis_.rank * k, Rational(0));
  for (int p = 0; p < basis_.rank; ++p) {
    for (int q = 0; q < basis_.rank; ++q) {
      const auto j = basis_.intersection(p, q);
      if (j == 0) continue;
      for (int i = 0; i < k; ++i) {
        for (int l = 0; l < k; ++l) out(p * k + i, q * k + l) = mod_rational(b(i, l) * j, 1);
      }
    }
  }
  return out;
}

IntersectionPairing intersection_matrix(const Surface& s, const DiscriminantGroup& disc) {
  return IntersectionPairing(homology_basis(s), disc);
}

std::vector<GroupElement> delta_obstruction(const Surface& s, const BlockLabel& labels,
                                            const DiscriminantGroup& disc) {
  std::vector<GroupElement> out;
  for (const auto& c : s.components()) {
    GroupElement d = disc.zero();
    for (const auto& b : c.boundaries) {
      const auto it = labels.find(b.id);
      if (it == labels.end()) {
        throw Error(ErrorKind::MissingLabel, "no label for boundary circle '" + b.id + "'");
      }
      const GroupElement l = disc.reduce(it->second);
      d = disc.add(d, sign(b.orientation) > 0 ? l : disc.negate(l));
    }
    out.push_back(std::move(d));
  }
  return out;
}

Surface glue(const Surface& s, const Matching& matching) {
  auto comps = s.components();
  auto locate = [&](const std::string& id) -> std::pair<int, int> {
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
      for (int j = 0; j < static_cast<int>(comps[i].boundaries.size()); ++j) {
        if (comps[i].boundaries[j].id == id) return {i, j};
      }
    }
    throw Error(ErrorKind::UnknownCircle, "unknown boundary circle '" + id + "'");
  };

  for (const auto& [out_id, in_id] : matching) {
    if (out_id == in_id) {
      throw Error(ErrorKind::OrientationMismatch, "cannot glue circle '" + out_id + "' to itself");
    }
    auto [ci, pi] = locate(out_id);
    auto [cj, pj] = locate(in_id);
    if (comps[ci].boundaries[pi].orientation != Orientation::Out ||
        comps[cj].boundaries[pj].orientation != Orientation::In) {
      throw Error(ErrorKind::OrientationMismatch,
                  "gluing requires an outgoing and an incoming circle: '" + out_id + "', '" +
                      in_id + "'");
    }
    if (ci == cj) {
      auto& bs = comps[ci].boundaries;
      bs.erase(bs.begin() + std::max(pi, pj));
      bs.erase(bs.begin() + std::min(pi, pj));
      comps[ci].genus += 1;
      continue;
    }
    const int keep = std::min(ci, cj);
    const int drop = std::max(ci, cj);
    comps[ci].boundaries.erase(comps[ci].boundaries.begin() + pi);
    comps[cj].boundaries.erase(comps[cj].boundaries.begin() + pj);
    comps[keep].genus += comps[drop].genus;
    comps[keep].boundaries.insert(comps[keep].boundaries.end(), comps[drop].boundaries.begin(),
                                  comps[drop].boundaries.end());
    comps.erase(comps.begin() + drop);
  }
  return Surface(std::move(comps));
}

Surface glue(const Surface& s1, const Surface& s2, const Matching& matching) {
  return glue(s1.disjoint_union(s2), matching);
}

}  // namespace lcft
