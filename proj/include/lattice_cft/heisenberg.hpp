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

#ifndef LATTICE_CFT_HEISENBERG_HPP_
#define LATTICE_CFT_HEISENBERG_HPP_

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "lattice_cft/cyclotomic.hpp"
#include "lattice_cft/surface.hpp"

namespace lcft {

/// (X, m): a homology class with coefficients in A and a central phase in Q/Z.
struct HeisenbergElement {
  HomologyClass x;
  Phase phase;

  bool operator==(const HeisenbergElement&) const = default;
};

/// Central extension of H_1(S; A) by U(1) phases.
///
/// Two cocycles are available.  The intersection cocycle c(X, Y) = S(X, Y)
/// gives the group law (X,m)(Y,n) = (X+Y, m+n+S(X,Y)).  The polarized cocycle
/// beta(X, Y) = -sum_i b(X_{b_i}, Y_{a_i}) satisfies beta(X,Y) - beta(Y,X) = S(X,Y)
/// and is the one carried by the representations below.
class HeisenbergGroup {
 public:
  explicit HeisenbergGroup(IntersectionPairing pairing);

  /// Closed connected surface of the given genus.
  static HeisenbergGroup closed(const DiscriminantGroup& disc, int genus);

  const IntersectionPairing& pairing() const noexcept { return pairing_; }
  const DiscriminantGroup& coefficients() const noexcept { return pairing_.group(); }
  const HomologyBasis& basis() const noexcept { return pairing_.basis(); }
  int num_cycles() const noexcept { return basis().rank; }
  /// |H_1(S; A)| = |A|^n
  std::int64_t homology_order() const noexcept { return homology_order_; }

  HomologyClass zero() const;
  HomologyClass add(const HomologyClass& x, const HomologyClass& y) const;
  HomologyClass negate(const HomologyClass& x) const;
  HomologyClass scale(const HomologyClass& x, std::int64_t k) const;
  bool is_zero(const HomologyClass& x) const;

  /// Mixed-radix enumeration of H_1(S; A), cycle-major.
  HomologyClass class_at(std::int64_t index) const;
  std::int64_t index_of(const HomologyClass& x) const;
  /// Unit classes e_{p,i}, indexed p * k + i.
  std::vector<HomologyClass> generators() const;

  Rational intersection(const HomologyClass& x, const HomologyClass& y) const {
    return pairing_(x, y);
  }
  Rational polarized_cocycle(const HomologyClass& x, const HomologyClass& y) const;

  HeisenbergElement identity() const { return {zero(), Phase()}; }
  HeisenbergElement product(const HeisenbergElement& x, const HeisenbergElement& y) const;
  HeisenbergElement inverse(const HeisenbergElement& x) const;
  HeisenbergElement polarized_product(const HeisenbergElement& x,
                                      const HeisenbergElement& y) const;
  HeisenbergElement polarized_inverse(const HeisenbergElement& x) const;

  void check(const HeisenbergElement& x) const;

 private:
  IntersectionPairing pairing_;
  std::int64_t homology_order_ = 1;
};

/// Group law (X,m)(Y,n) = (X+Y, m+n+S(X,Y)).  Throws Error{DimensionMismatch}.
HeisenbergElement heisenberg_product(const HeisenbergElement& x, const HeisenbergElement& y,
                                     const IntersectionPairing& s);

/// Radical of S together with the central phase circle.
struct CenterDescription {
  std::vector<HomologyClass> generators;
  /// Order of the radical of S in H_1(S; A).
  std::int64_t radical_order = 1;
};

CenterDescription center(const DiscriminantGroup& disc, const Surface& s);

/// Square matrix with one nonzero entry exp(2 pi i phase[j]) per column,
/// sitting in row target[j].
struct MonomialMatrix {
  std::vector<int> target;
  std::vector<Phase> phase;

  int dimension() const noexcept { return static_cast<int>(target.size()); }
  static MonomialMatrix identity(int n);
  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix scaled(const Phase& p) const;
  CyclotomicSum trace() const;
  Eigen::MatrixXcd dense() const;
  bool operator==(const MonomialMatrix&) const = default;
};

/// Complex matrices on a generating set.
struct UnitaryRep {
  int dimension = 0;
  std::int64_t central_character = 1;
  /// |H_1(S; A)|, the size of the group modulo its central phases.
  std::int64_t group_order = 1;
  std::vector<HeisenbergElement> elements;
  std::vector<Eigen::MatrixXcd> matrices;
};

/// Representation with exact monomial matrices, rho(x) rho(y) =
/// exp(2 pi i k beta(x,y)) rho(xy) and phases acting by exp(2 pi i k m).
class MonomialRep {
 public:
  using Action = std::function<MonomialMatrix(const HomologyClass&)>;

  MonomialRep(std::shared_ptr<const HeisenbergGroup> group, int dimension,
              std::int64_t central_character, Action action)
      : group_(std::move(group)), dimension_(dimension), k_(central_character),
        action_(std::move(action)) {}

  const HeisenbergGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const HeisenbergGroup> group_ptr() const noexcept { return group_; }
  int dimension() const noexcept { return dimension_; }
  std::int64_t central_character() const noexcept { return k_; }

  MonomialMatrix operator()(const HomologyClass& x) const { return action_(x); }
  MonomialMatrix operator()(const HeisenbergElement& x) const {
    return action_(x.x).scaled(k_ * x.phase);
  }
  CyclotomicSum character(const HeisenbergElement& x) const { return (*this)(x).trace(); }

  /// Matrices on the unit generators e_{p,i} (phase 0).
  UnitaryRep unitary() const;

 private:
  std::shared_ptr<const HeisenbergGroup> group_;
  int dimension_;
  std::int64_t k_;
  Action action_;
};

/// Functions on the b-cycle span A^g: b-generators translate, a-generators
/// multiply by exp(2 pi i k b(alpha, u)).  Closed surfaces only; genus 0 gives
/// the one-dimensional representation.  Throws Error{NonclosedSurface}.
MonomialRep schroedinger_irrep(const DiscriminantGroup& disc, int genus,
                               std::int64_t central_character = 1);
MonomialRep schroedinger_irrep(const DiscriminantGroup& disc, const Surface& s,
                               std::int64_t central_character = 1);

/// Direct sum of two representations of the same group.
MonomialRep direct_sum(const MonomialRep& a, const MonomialRep& b);

/// Solution space of M rho1(x) = rho2(x) M over the group generators,
/// computed exactly (each equation links two unknowns by a root of unity).
struct IntertwinerSpace {
  int dimension = 0;
  /// One intertwiner per independent solution, dense.
  std::vector<Eigen::MatrixXcd> basis;
};

IntertwinerSpace intertwiners(const MonomialRep& from, const MonomialRep& to);
int commutant_dimension(const MonomialRep& rep);

bool verify_irreducible(const MonomialRep& rep);
/// Dense numerical commutant; null space by eigen-decomposition with tolerance.
/// Throws Error{GroupTooLarge} when group_order > 10^4 or dimension > 32.
bool verify_irreducible(const UnitaryRep& rep, double tol = 1e-9);
int numerical_commutant_dimension(const UnitaryRep& rep, double tol = 1e-9);

/// (1/|H|) sum_X |tr rho(X)|^2, phases dropping out of the modulus.
double schur_norm(const MonomialRep& rep);

/// Subgroup of H_1(S; A) on which S vanishes, with a splitting chi of the
/// polarized cocycle: chi(b1 + b2) = chi(b1) + chi(b2) - k beta(b1, b2).
class IsotropicSubgroup {
 public:
  const std::vector<HomologyClass>& generators() const noexcept { return generators_; }
  /// Sorted indices (HeisenbergGroup::index_of) of all elements.
  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::int64_t order() const noexcept { return static_cast<std::int64_t>(elements_.size()); }
  bool contains(const HomologyClass& x, const HeisenbergGroup& g) const;
  /// Splitting value; x must lie in the subgroup.
  Phase chi(std::int64_t index) const { return chi_.at(index); }
  std::int64_t central_character() const noexcept { return k_; }

 private:
  friend IsotropicSubgroup make_isotropic(const HeisenbergGroup&, std::vector<HomologyClass>,
                                          std::vector<Phase>, std::int64_t);
  friend IsotropicSubgroup make_isotropic(const HeisenbergGroup&, std::vector<HomologyClass>,
                                          std::int64_t);
  std::vector<HomologyClass> generators_;
  std::vector<std::int64_t> elements_;
  std::map<std::int64_t, Phase> chi_;
  std::int64_t k_ = 1;
};

/// Validate isotropy and the splitting given by its generator values.
/// Throws Error{NotIsotropic, NotASplitting}.
IsotropicSubgroup make_isotropic(const HeisenbergGroup& group, std::vector<HomologyClass> generators,
                                 std::vector<Phase> chi_on_generators,
                                 std::int64_t central_character = 1);
/// Same, with a splitting constructed generator by generator.
IsotropicSubgroup make_isotropic(const HeisenbergGroup& group, std::vector<HomologyClass> generators,
                                 std::int64_t central_character = 1);

/// Sorted indices of the subgroup generated by the given classes.
std::vector<std::int64_t> subgroup_closure(const HeisenbergGroup& group,
                                           const std::vector<HomologyClass>& generators);

/// Every isotropic subgroup of H_1(S; A), each as a sorted index list.
std::vector<std::vector<std::int64_t>> isotropic_subgroups(const HeisenbergGroup& group);

/// Lagrangians of a closed surface: span of the a-cycles, of the b-cycles, and
/// the diagonal a_i + b_i.
std::vector<HomologyClass> a_cycle_generators(const HeisenbergGroup& group);
std::vector<HomologyClass> b_cycle_generators(const HeisenbergGroup& group);
std::vector<HomologyClass> diagonal_generators(const HeisenbergGroup& group);

/// Induced representation on coset functions, together with the commuting
/// right action of the annihilator of the subgroup.
class InducedRep {
 public:
  InducedRep(std::shared_ptr<const HeisenbergGroup> group, IsotropicSubgroup subgroup);

  const MonomialRep& rep() const noexcept { return rep_; }
  const IsotropicSubgroup& subgroup() const noexcept { return subgroup_; }
  int dimension() const noexcept { return rep_.dimension(); }

  /// Elements Y with S(Y, B) = 0, as sorted indices.
  const std::vector<std::int64_t>& annihilator() const noexcept { return annihilator_; }
  /// (R(y) F)(g) = F(g y) for y in the annihilator (phase 0).
  MonomialMatrix right_action(const HomologyClass& y) const;

 private:
  struct Tables {
    std::vector<std::int64_t> coset_reps;   // index of r_i
    std::vector<int> coset_of;              // element index -> coset
    std::vector<std::int64_t> offset_of;    // element index -> index of x - r
  };
  std::shared_ptr<const HeisenbergGroup> group_;
  IsotropicSubgroup subgroup_;
  std::shared_ptr<const Tables> tables_;
  std::vector<std::int64_t> annihilator_;
  MonomialRep rep_;
};

InducedRep induce_from_isotropic(std::shared_ptr<const HeisenbergGroup> group,
                                 IsotropicSubgroup subgroup);

/// Character check of Ind = H_irr (x) M with M the Heisenberg irrep of the
/// annihilator quotient: tr(lambda(X) R(Y)) = tr rho_irr(X) * chi_M(Y) for all
/// X and all Y in the annihilator.  Exact in cyclotomic arithmetic.
struct DecompositionReport {
  bool equal = true;
  std::int64_t pairs_checked = 0;
  std::int64_t multiplicity = 0;
};

DecompositionReport verify_induced_decomposition(const InducedRep& induced,
                                                 const MonomialRep& irrep);

}  // namespace lcft

#endif  // LATTICE_CFT_HEISENBERG_HPP_
