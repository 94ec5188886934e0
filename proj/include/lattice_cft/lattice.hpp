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

#ifndef LATTICE_CFT_LATTICE_HPP_
#define LATTICE_CFT_LATTICE_HPP_

#include <functional>
#include <vector>

#include "lattice_cft/common.hpp"

namespace lcft {

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
/// The inverses are tracked alongside so no integer inversion is needed later.
struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;

  std::vector<std::int64_t> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Determinant of a square integer matrix by fraction-free elimination.
std::int64_t integer_determinant(const IntMatrix& m);

/// Positive-definite even integral lattice, given by its Gram matrix.
class EvenLattice {
 public:
  const IntMatrix& gram() const noexcept { return gram_; }
  int rank() const noexcept { return static_cast<int>(gram_.rows()); }
  std::int64_t det() const noexcept { return det_; }
  /// gcd of all Gram entries.
  std::int64_t level_ell() const noexcept { return level_ell_; }

  /// <x, y> for rational coordinate vectors in the lattice basis.
  Rational inner(const RationalVector& x, const RationalVector& y) const;

 private:
  friend EvenLattice validate_even_lattice(const IntMatrix& gram);
  IntMatrix gram_;
  std::int64_t det_ = 1;
  std::int64_t level_ell_ = 1;
};

/// Throws Error{NotSymmetric, OddDiagonal, NotPositiveDefinite}.
EvenLattice validate_even_lattice(const IntMatrix& gram);

/// Element of A in invariant-factor coordinates, 0 <= c_i < d_i.
using GroupElement = std::vector<std::int64_t>;

/// The discriminant group A = L^dual / L with its forms.
///
/// Coordinates are fixed once by the Smith transform of the Gram matrix and
/// only the nontrivial invariant factors are kept.  The bilinear form takes
/// values in Q/Z and the quadratic form in Q/2Z.
class DiscriminantGroup {
 public:
  DiscriminantGroup() = default;
  DiscriminantGroup(std::vector<std::int64_t> invariant_factors, RationalMatrix form,
                    RationalMatrix lift);

  const std::vector<std::int64_t>& invariant_factors() const noexcept { return factors_; }
  int num_factors() const noexcept { return static_cast<int>(factors_.size()); }
  std::int64_t order() const noexcept { return order_; }
  /// Least common multiple of the invariant factors.
  std::int64_t exponent() const noexcept { return exponent_; }

  Rational bilinear(const GroupElement& a, const GroupElement& b) const;
  Rational quadratic(const GroupElement& a) const;
  /// Gram matrix of the bilinear form on unit coordinate vectors, entries in [0,1).
  RationalMatrix bilinear_matrix() const;
  /// Lattice-basis coordinates of the canonical lift of a in L^dual.
  RationalVector lift(const GroupElement& a) const;

  GroupElement zero() const { return GroupElement(factors_.size(), 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, std::int64_t k) const;
  GroupElement reduce(const GroupElement& a) const;
  bool is_valid(const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;

  /// Lexicographic order, last coordinate fastest.
  GroupElement element_at(std::int64_t index) const;
  std::int64_t index_of(const GroupElement& a) const;
  std::vector<GroupElement> elements() const;

 private:
  std::vector<std::int64_t> factors_;
  RationalMatrix form_;  // k x k, symmetric, exact (not reduced)
  RationalMatrix lift_;  // r x k
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

DiscriminantGroup discriminant_group(const EvenLattice& lattice);

/// sum over A of exp(pi i q(a)).
Complex gauss_sum(const DiscriminantGroup& disc);

/// Signature mod 8 read off the Gauss-sum phase.
int signature_mod8(const DiscriminantGroup& disc);

}  // namespace lcft

#endif  // LATTICE_CFT_LATTICE_HPP_
