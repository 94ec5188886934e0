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

#ifndef LATTICE_CFT_FOCK_HPP_
#define LATTICE_CFT_FOCK_HPP_

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "lattice_cft/lattice.hpp"

namespace lcft {

/// Real trigonometric polynomial with values in R^r:
/// c_0 + sum_{m >= 1} (c_m cos(m theta) + s_m sin(m theta)).
struct TrigLoop {
  Eigen::VectorXd constant;
  std::map<int, Eigen::VectorXd> cos_modes;
  std::map<int, Eigen::VectorXd> sin_modes;

  int rank() const { return static_cast<int>(constant.size()); }
  Eigen::VectorXd operator()(double theta) const;
  Eigen::VectorXd derivative(double theta) const;
};

/// Integral over the circle of <xi, d eta>, with <,> given by `form`
/// (identity when empty): pi sum_m m (<c_m, s'_m> - <s_m, c'_m>).
double loop_cocycle(const TrigLoop& xi, const TrigLoop& eta,
                    const Eigen::MatrixXd& form = Eigen::MatrixXd());

struct ModeTruncation {
  int rank = 1;
  int max_mode = 1;
  int max_energy = 0;
};

/// Oscillator occupation numbers n_{k,c}, stored at (k - 1) * rank + c.
using Occupation = std::vector<int>;

/// Occupation states with sum_k k n_{k,c} <= E, ordered by energy then lexicographically.
std::vector<Occupation> oscillator_basis(const ModeTruncation& tr);
int oscillator_energy(const Occupation& occ, int rank);

using SparseMatrix = Eigen::SparseMatrix<double>;

/// a_{m,c} and a^dagger_{m,c} restricted to the truncation; creation drops
/// states that would leave it.
struct ModeOperators {
  ModeTruncation truncation;
  std::vector<Occupation> basis;
  std::vector<SparseMatrix> annihilation;  // (m - 1) * rank + c
  std::vector<SparseMatrix> creation;
  std::vector<int> energy;

  const SparseMatrix& a(int m, int c) const { return annihilation[(m - 1) * truncation.rank + c]; }
  const SparseMatrix& a_dag(int m, int c) const { return creation[(m - 1) * truncation.rank + c]; }
};

ModeOperators mode_operators(const ModeTruncation& tr);

struct CommutatorReport {
  double max_deviation = 0.0;
  int interior_states = 0;
  int boundary_states = 0;
};

/// [a_{m,c}, a^dagger_{n,c'}] against m delta on states of energy <= E - max(m, n).
CommutatorReport commutator_check(const ModeOperators& ops);

/// Lattice-basis coordinates of the minimal-norm lift of phi (ties broken
/// lexicographically on coordinates).
RationalVector minimal_lift(const EvenLattice& lat, const DiscriminantGroup& disc,
                            const GroupElement& phi);

/// All vectors x in lift + Z^r with <x, x>/2 <= bound, as lattice coordinates
/// with their half norms.
std::vector<std::pair<RationalVector, Rational>> coset_vectors(const EvenLattice& lat,
                                                               const RationalVector& lift,
                                                               const Rational& half_norm_bound);

struct SectorCharacter {
  Rational ground_energy{0};
  /// c_n = number of states of energy ground + n, n = 0..E.
  std::vector<std::int64_t> coefficients;
};

/// Theta series of the coset times prod_k (1 - q^k)^{-r}.  Throws Error{NonIntegralEnergy}.
SectorCharacter sector_character(const EvenLattice& lat, const GroupElement& phi, int max_energy);

/// Coefficients of prod_{k >= 1} (1 - q^k)^{-r} up to q^n.
std::vector<std::int64_t> colored_partitions(int rank, int n);

/// Energies of every state of the sector up to ground + E.
std::vector<Rational> sector_energy_levels(const EvenLattice& lat, const GroupElement& phi,
                                           int max_energy);

struct PositiveEnergyReport {
  bool positive = false;
  Rational ground{0};
};

/// True iff all levels lie in ground + Z_{>=0} and ground >= 0.
PositiveEnergyReport positive_energy_check(const std::vector<Rational>& levels);

/// Two-variable q-series keyed by (h_left, h_right).
using SewingTable = std::map<std::pair<Rational, Rational>, std::int64_t>;

struct SewingReport {
  SewingTable sector_side;
  SewingTable annulus_side;
  bool equal = false;
};

/// sum_phi chi_phi(q) chi_phi(qbar) against a direct count over pairs (x, y),
/// x in the dual lattice, y in x + L, with oscillators on both sides, at
/// total energy <= E.
SewingReport annulus_sewing_check(const EvenLattice& lat, int max_energy);

/// det(1 - T^* T)^{1/4}.  Throws Error{NotContractive} when ||T|| >= 1.
double bogoliubov_overlap(const Eigen::MatrixXcd& t);

}  // namespace lcft

#endif  // LATTICE_CFT_FOCK_HPP_
