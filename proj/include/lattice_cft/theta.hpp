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

#ifndef LATTICE_CFT_THETA_HPP_
#define LATTICE_CFT_THETA_HPP_

#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lattice_cft/common.hpp"

namespace lcft {

/// Point of the Siegel upper half space with cached Im(tau)^{-1}.
class SiegelPoint {
 public:
  /// Throws Error{InvalidInput} unless tau is square, symmetric and Im(tau)
  /// has smallest eigenvalue > 1e-12.
  explicit SiegelPoint(Eigen::MatrixXcd tau);

  const Eigen::MatrixXcd& tau() const noexcept { return tau_; }
  int genus() const noexcept { return static_cast<int>(tau_.rows()); }
  const Eigen::MatrixXd& imag() const noexcept { return y_; }
  const Eigen::MatrixXd& imag_inverse() const noexcept { return y_inv_; }
  double lambda_min() const noexcept { return lambda_min_; }

 private:
  Eigen::MatrixXcd tau_;
  Eigen::MatrixXd y_;
  Eigen::MatrixXd y_inv_;
  double lambda_min_ = 0.0;
};

/// Seeded point with Im(tau) = 1 + small symmetric perturbation.
SiegelPoint random_siegel_point(int genus, std::mt19937_64& rng);

struct ThetaSpec {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  /// Polarization type d_1 | d_2 | ... ; empty means principal.
  std::vector<std::int64_t> type;

  int genus() const { return static_cast<int>(a.size()); }
  static ThetaSpec zero(int genus);
};

/// Throws Error{InvalidInput} for bad lengths, d_i < 1 or a broken divisibility chain.
void validate(const ThetaSpec& spec);

struct ThetaValue {
  Complex value;
  double tail_bound = 0.0;
  int radius = 0;
};

inline constexpr int kThetaRadiusCap = 60;

/// Bound on the sum over lattice points outside the box of radius r (sup norm)
/// around the Gaussian peak.
double theta_tail_bound(const SiegelPoint& tau, const Eigen::VectorXcd& z, int r);

/// sum_n exp(pi i (n+a)^T tau (n+a) + 2 pi i (n+a)^T (z+b)), box radius the
/// smallest with tail bound < tol.  Throws Error{TruncationOverflow}.
ThetaValue theta(const ThetaSpec& spec, const Eigen::VectorXcd& z, const SiegelPoint& tau,
                 double tol = 1e-14, int radius_cap = kThetaRadiusCap);
/// Same series over a fixed box radius.
ThetaValue theta_fixed_radius(const ThetaSpec& spec, const Eigen::VectorXcd& z,
                              const SiegelPoint& tau, int radius);

/// tau m + n
Eigen::VectorXcd lattice_vector(const SiegelPoint& tau, const Eigen::VectorXi& m,
                                const Eigen::VectorXi& n);

/// <v, w> = 2 pi conj(v)^T Im(tau)^{-1} w
Complex hermitian_metric(const SiegelPoint& tau, const Eigen::VectorXcd& v,
                         const Eigen::VectorXcd& w);
/// omega(v, w) = Im(conj(v)^T Im(tau)^{-1} w)
double symplectic_form(const SiegelPoint& tau, const Eigen::VectorXcd& v,
                       const Eigen::VectorXcd& w);

using Section = std::function<Complex(const Eigen::VectorXcd&)>;

/// (U_v s)(w) = exp(<v, w - v>/2 + <v, v>/4) s(w - v).
Section heisenberg_translate(const SiegelPoint& tau, const Eigen::VectorXcd& v, Section s);

/// exp((pi/2) z^T Im(tau)^{-1} z) theta[a,b](z): the theta function in the
/// trivialization where lattice translations act through U.
Section canonical_section(const ThetaSpec& spec, const SiegelPoint& tau, double tol = 1e-14);

/// chi(tau m + n) = exp(pi i m^T n + 2 pi i (a^T n - b^T m)).
Complex translation_multiplier(const ThetaSpec& spec, const Eigen::VectorXi& m,
                               const Eigen::VectorXi& n);

/// Classical factor: theta(z + tau m + n) / theta(z).
Complex classical_automorphy(const ThetaSpec& spec, const SiegelPoint& tau,
                             const Eigen::VectorXcd& z, const Eigen::VectorXi& m,
                             const Eigen::VectorXi& n);

struct AutomorphyResidual {
  double classical = 0.0;  // relative, theta(z + lambda) vs the classical factor
  double metric = 0.0;     // relative, chi(lambda) (U_lambda s)(z + lambda) vs s(z + lambda)
};

AutomorphyResidual automorphy_residual(const ThetaSpec& spec, const SiegelPoint& tau,
                                       const Eigen::VectorXcd& z, const Eigen::VectorXi& m,
                                       const Eigen::VectorXi& n);

/// |U_{v1} U_{v2} s - exp(i pi omega(v1, v2)) U_{v1+v2} s| at w, relative.
double cocycle_residual(const SiegelPoint& tau, const Section& s, const Eigen::VectorXcd& v1,
                        const Eigen::VectorXcd& v2, const Eigen::VectorXcd& w);

/// prod d_i.  Throws Error{InvalidInput}.
std::int64_t theta_space_dimension(const std::vector<std::int64_t>& type);

struct ThetaSpaceReport {
  std::int64_t dimension = 0;
  int numerical_rank = 0;
  std::vector<double> singular_values;
};

/// Rank of the sample matrix of theta[c, 0](z, tau), c in D^{-1} Z^g / Z^g, at
/// 3 prod d_i seeded points.  Throws Error{RankDeficient}.
ThetaSpaceReport verify_theta_space_dimension(const std::vector<std::int64_t>& type,
                                              const SiegelPoint& tau, std::uint64_t seed,
                                              double rel_tol = 1e-8);

enum class DifferenceScheme { Central, Richardson };

/// max_{j<=k} |d theta/d tau_jk - (1/(2 pi i (1 + delta_jk))) d^2 theta/dz_j dz_k|,
/// tau_jk and tau_kj moved together.
double heat_equation_residual(const ThetaSpec& spec, const Eigen::VectorXcd& z,
                              const SiegelPoint& tau, double h = 1e-3,
                              DifferenceScheme scheme = DifferenceScheme::Richardson);

/// Least-squares slope of log residual against log h for the central scheme.
double heat_convergence_slope(const ThetaSpec& spec, const Eigen::VectorXcd& z,
                              const SiegelPoint& tau, const std::vector<double>& steps);

}  // namespace lcft

#endif  // LATTICE_CFT_THETA_HPP_
