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

// Slow, direct reference computations used to cross-check the main modules.
// None of them shares code paths with the routines they check.

#ifndef LATTICE_CFT_ORACLES_HPP_
#define LATTICE_CFT_ORACLES_HPP_

#include <vector>

#include <Eigen/Dense>

#include "lattice_cft/fock.hpp"
#include "lattice_cft/surface.hpp"

namespace lcft::oracle {

/// Plain theta sum over the box |n_i| <= radius centred at the origin.
Complex theta_direct(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                     const Eigen::VectorXcd& z, const Eigen::MatrixXcd& tau, int radius);

/// Overlap |<psi_0, psi_T>| of the Gaussians exp(-|x|^2/2) and
/// exp(-x^T M x/2), M = (1 - T)(1 + T)^{-1}, both normalized by quadrature.
/// T must be complex symmetric, dimension 1 or 2.
double gaussian_overlap(const Eigen::MatrixXcd& t);

/// Trapezoid rule for the integral of <xi, eta'> over the circle.
double loop_cocycle_quadrature(const TrigLoop& xi, const TrigLoop& eta,
                               const Eigen::MatrixXd& form, int points = 256);

/// Counts of sector states by energy above the ground, from a box search for
/// coset vectors and explicit oscillator occupation lists.
struct SectorCount {
  Rational ground{0};
  std::vector<std::int64_t> counts;
};
SectorCount sector_states(const EvenLattice& lat, const DiscriminantGroup& disc,
                          const GroupElement& phi, int max_energy);

/// Rank of H_1 of a surface from Betti numbers: b0 + b2 - chi per component.
int homology_rank_from_euler(const Surface& s);

}  // namespace lcft::oracle

#endif  // LATTICE_CFT_ORACLES_HPP_
