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

#ifndef LATTICE_CFT_SURFACE_HPP_
#define LATTICE_CFT_SURFACE_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice_cft/lattice.hpp"

namespace lcft {

enum class Orientation { In, Out };

/// +1 for outgoing, -1 for incoming circles.
inline int sign(Orientation o) { return o == Orientation::Out ? 1 : -1; }
inline Orientation opposite(Orientation o) {
  return o == Orientation::Out ? Orientation::In : Orientation::Out;
}

struct BoundaryCircle {
  std::string id;
  Orientation orientation = Orientation::Out;

  bool operator==(const BoundaryCircle&) const = default;
};

struct SurfaceComponent {
  int genus = 0;
  std::vector<BoundaryCircle> boundaries;

  int euler_characteristic() const {
    return 2 - 2 * genus - static_cast<int>(boundaries.size());
  }
};

/// Compact oriented surface up to homeomorphism, with named boundary circles.
class Surface {
 public:
  Surface() = default;
  /// Throws Error{InvalidInput} on duplicate circle ids or negative genus.
  explicit Surface(std::vector<SurfaceComponent> components);

  static Surface sphere() { return Surface({SurfaceComponent{0, {}}}); }
  static Surface closed(int genus) { return Surface({SurfaceComponent{genus, {}}}); }
  static Surface connected(int genus, std::vector<BoundaryCircle> boundaries) {
    return Surface({SurfaceComponent{genus, std::move(boundaries)}});
  }

  const std::vector<SurfaceComponent>& components() const noexcept { return components_; }
  int num_components() const noexcept { return static_cast<int>(components_.size()); }
  int num_circles() const;
  int euler_characteristic() const;
  bool is_closed() const { return num_circles() == 0; }

  /// (component index, position in that component's boundary list)
  std::optional<std::pair<int, int>> find(const std::string& id) const;

  /// Orientation reversal swaps incoming and outgoing circles.
  Surface reversed() const;
  Surface disjoint_union(const Surface& other) const;

  /// Component multiset of (genus, #boundaries), sorted.
  std::vector<std::pair<int, int>> shape() const;

 private:
  std::vector<SurfaceComponent> components_;
};

int h1_rank(const SurfaceComponent& c);
/// Rank of H_1(S; Z): sum of 2g + max(b - 1, 0) over components.
int h1_rank(const Surface& s);

/// Fixed basis of H_1: per component a_1, b_1, ..., a_g, b_g followed by the
/// classes of all boundary circles but the last.
struct HomologyBasis {
  struct ComponentBlock {
    int offset = 0;
    int genus = 0;
    int num_boundary_classes = 0;
  };
  std::vector<ComponentBlock> blocks;
  int rank = 0;
  /// Geometric intersection numbers of the basis cycles (antisymmetric).
  IntMatrix intersection;

  bool is_boundary_class(int index) const;
};

HomologyBasis homology_basis(const Surface& s);

/// A class in H_1(S; A): one element of A per basis cycle.
using HomologyClass = std::vector<GroupElement>;

/// Antisymmetric pairing S(X, Y) = sum_{p,q} J_pq b(X_p, Y_q) in Q/Z.
class IntersectionPairing {
 public:
  IntersectionPairing(HomologyBasis basis, DiscriminantGroup disc)
      : basis_(std::move(basis)), disc_(std::move(disc)) {}

  const HomologyBasis& basis() const noexcept { return basis_; }
  const DiscriminantGroup& group() const noexcept { return disc_; }

  Rational operator()(const HomologyClass& x, const HomologyClass& y) const;

  /// Pairing on the generators e_{p,i} (unit of factor i at cycle p),
  /// indexed by p * k + i.  Entries in [0, 1).
  RationalMatrix matrix() const;

 private:
  HomologyBasis basis_;
  DiscriminantGroup disc_;
};

IntersectionPairing intersection_matrix(const Surface& s, const DiscriminantGroup& disc);

/// Boundary labels keyed by circle id.
using BlockLabel = std::map<std::string, GroupElement>;

/// Per component, sum over its circles of sign(orientation) * label.
/// Throws Error{MissingLabel}.
std::vector<GroupElement> delta_obstruction(const Surface& s, const BlockLabel& labels,
                                            const DiscriminantGroup& disc);

/// Pairs of (outgoing circle id, incoming circle id).
using Matching = std::vector<std::pair<std::string, std::string>>;

/// Glue circles of one (possibly disconnected) surface pairwise.
/// Throws Error{UnknownCircle, OrientationMismatch}.
Surface glue(const Surface& s, const Matching& matching);
Surface glue(const Surface& s1, const Surface& s2, const Matching& matching);

}  // namespace lcft

#endif  // LATTICE_CFT_SURFACE_HPP_
