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

#include "lattice_cft/theta.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace lcft {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    Complex s{0.0, 0.0};
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Odometer over [-r, r]^g.
template <typename F>
void for_each_in_box(int g, int r, F&& f) {
  Eigen::VectorXi m = Eigen::VectorXi::Constant(g, -r);
  while (true) {
    f(m);
    int i = g - 1;
    while (i >= 0 && m(i) == r) m(i--) = -r;
    if (i < 0) return;
    ++m(i);
  }
}

Eigen::VectorXd peak_offset(const SiegelPoint& tau, const Eigen::VectorXcd& z,
                            const Eigen::VectorXd& a) {
  return a + tau.imag_inverse() * z.imag();
}

}  // namespace

SiegelPoint::SiegelPoint(Eigen::MatrixXcd tau) : tau_(std::move(tau)) {
  if (tau_.rows() != tau_.cols() || tau_.rows() == 0) {
    throw Error(ErrorKind::InvalidInput, "tau must be a nonempty square matrix");
  }
  if ((tau_ - tau_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorKind::InvalidInput, "tau must be symmetric");
  }
  y_ = tau_.imag();
  y_ = (y_ + y_.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(y_, Eigen::EigenvaluesOnly);
  lambda_min_ = eig.eigenvalues().minCoeff();
  if (!(lambda_min_ > 1e-12)) {
    throw Error(ErrorKind::InvalidInput, "Im(tau) must be positive definite");
  }
  y_inv_ = y_.inverse();
}

SiegelPoint random_siegel_point(int genus, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.25, 0.25);
  Eigen::MatrixXcd tau(genus, genus);
  for (int i = 0; i < genus; ++i) {
    for (int j = i; j < genus; ++j) {
      const double re = u(rng);
      const double im = (i == j ? 1.0 : 0.0) + 0.5 * u(rng);
      tau(i, j) = tau(j, i) = Complex(re, im);
    }
  }
  return SiegelPoint(tau);
}

ThetaSpec ThetaSpec::zero(int genus) {
  return {Eigen::VectorXd::Zero(genus), Eigen::VectorXd::Zero(genus), {}};
}

void validate(const ThetaSpec& spec) {
  if (spec.a.size() != spec.b.size()) {
    throw Error(ErrorKind::InvalidInput, "characteristics a and b differ in length");
  }
  if (!spec.type.empty()) {
    if (static_cast<int>(spec.type.size()) != spec.genus()) {
      throw Error(ErrorKind::InvalidInput, "polarization type length differs from genus");
    }
    for (std::size_t i = 0; i < spec.type.size(); ++i) {
      if (spec.type[i] < 1) throw Error(ErrorKind::InvalidInput, "polarization entries must be >= 1");
      if (i > 0 && spec.type[i] % spec.type[i - 1] != 0) {
        throw Error(ErrorKind::InvalidInput, "polarization type must satisfy d_1 | d_2 | ...");
      }
    }
  }
}

double theta_tail_bound(const SiegelPoint& tau, const Eigen::VectorXcd& z, int r) {
  const int g = tau.genus();
  const Eigen::VectorXd y = z.imag();
  const double prefactor = std::exp(kPi * y.dot(tau.imag_inverse() * y));
  double sum = 0.0;
  for (int k = r + 1; k < r + 2000; ++k) {
    const double shell = std::pow(2.0 * k + 1.0, g) - std::pow(2.0 * k - 1.0, g);
    const double term = shell * std::exp(-kPi * tau.lambda_min() * (k - 0.5) * (k - 0.5));
    sum += term;
    if (term < 1e-300 || term < sum * 1e-17) break;
  }
  return prefactor * sum;
}

ThetaValue theta_fixed_radius(const ThetaSpec& spec, const Eigen::VectorXcd& z,
                              const SiegelPoint& tau, int radius) {
  validate(spec);
  const int g = tau.genus();
  if (spec.genus() != g || z.size() != g) {
    throw Error(ErrorKind::DimensionMismatch, "z, characteristics and tau disagree on genus");
  }
  const Eigen::VectorXd center = (-peak_offset(tau, z, spec.a)).array().round();
  const Eigen::VectorXcd zb = z + spec.b.cast<Complex>();
  std::vector<Complex> terms;
  terms.reserve(static_cast<std::size_t>(std::pow(2 * radius + 1, g)));
  for_each_in_box(g, radius, [&](const Eigen::VectorXi& m) {
    const Eigen::VectorXcd u = (center + m.cast<double>() + spec.a).cast<Complex>();
    const Complex e = kI * kPi * u.dot(tau.tau() * u) + 2.0 * kI * kPi * u.dot(zb);
    terms.push_back(std::exp(e));
  });
  return {pairwise_sum(terms, 0, terms.size()), theta_tail_bound(tau, z, radius), radius};
}

ThetaValue theta(const ThetaSpec& spec, const Eigen::VectorXcd& z, const SiegelPoint& tau,
                 double tol, int radius_cap) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tol must be positive");
  int r = 0;
  while (theta_tail_bound(tau, z, r) >= tol) {
    if (++r > radius_cap) {
      throw Error(ErrorKind::TruncationOverflow,
                  "truncation radius above cap " + std::to_string(radius_cap));
    }
  }
  return theta_fixed_radius(spec, z, tau, r);
}

Eigen::VectorXcd lattice_vector(const SiegelPoint& tau, const Eigen::VectorXi& m,
                                const Eigen::VectorXi& n) {
  return tau.tau() * m.cast<Complex>() + n.cast<Complex>();
}

Complex hermitian_metric(const SiegelPoint& tau, const Eigen::VectorXcd& v,
                         const Eigen::VectorXcd& w) {
  // Eigen's dot conjugates the first argument.
  return 2.0 * kPi * v.dot(tau.imag_inverse().cast<Complex>() * w);
}

double symplectic_form(const SiegelPoint& tau, const Eigen::VectorXcd& v,
                       const Eigen::VectorXcd& w) {
  return v.dot(tau.imag_inverse().cast<Complex>() * w).imag();
}

Section heisenberg_translate(const SiegelPoint& tau, const Eigen::VectorXcd& v, Section s) {
  return [tau, v, s = std::move(s)](const Eigen::VectorXcd& w) {
    const Eigen::VectorXcd shifted = w - v;
    const Complex e = hermitian_metric(tau, v, shifted) / 2.0 + hermitian_metric(tau, v, v) / 4.0;
    return std::exp(e) * s(shifted);
  };
}

Section canonical_section(const ThetaSpec& spec, const SiegelPoint& tau, double tol) {
  return [spec, tau, tol](const Eigen::VectorXcd& z) {
    const Complex q = z.transpose() * tau.imag_inverse().cast<Complex>() * z;
    return std::exp(kPi / 2.0 * q) * theta(spec, z, tau, tol).value;
  };
}

Complex translation_multiplier(const ThetaSpec& spec, const Eigen::VectorXi& m,
                               const Eigen::VectorXi& n) {
  const double p = 0.5 * m.dot(n) + spec.a.dot(n.cast<double>()) - spec.b.dot(m.cast<double>());
  return std::exp(2.0 * kI * kPi * p);
}

Complex classical_automorphy(const ThetaSpec& spec, const SiegelPoint& tau,
                             const Eigen::VectorXcd& z, const Eigen::VectorXi& m,
                             const Eigen::VectorXi& n) {
  const Eigen::VectorXcd mc = m.cast<Complex>();
  const Complex e = 2.0 * kI * kPi *
                        (spec.a.dot(n.cast<double>()) - spec.b.dot(m.cast<double>())) -
                    kI * kPi * Complex(mc.transpose() * tau.tau() * mc) -
                    2.0 * kI * kPi * Complex(mc.transpose() * z);
  return std::exp(e);
}

AutomorphyResidual automorphy_residual(const ThetaSpec& spec, const SiegelPoint& tau,
                                       const Eigen::VectorXcd& z, const Eigen::VectorXi& m,
                                       const Eigen::VectorXi& n) {
  const Eigen::VectorXcd lambda = lattice_vector(tau, m, n);
  const Eigen::VectorXcd moved = z + lambda;
  AutomorphyResidual r;

  const Complex lhs = theta(spec, moved, tau).value;
  const Complex rhs = classical_automorphy(spec, tau, z, m, n) * theta(spec, z, tau).value;
  r.classical = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));

  const Section s = canonical_section(spec, tau);
  const Complex direct = s(moved);
  const Complex acted = translation_multiplier(spec, m, n) * heisenberg_translate(tau, lambda, s)(moved);
  r.metric = std::abs(direct - acted) / std::max(1.0, std::abs(direct));
  return r;
}

double cocycle_residual(const SiegelPoint& tau, const Section& s, const Eigen::VectorXcd& v1,
                        const Eigen::VectorXcd& v2, const Eigen::VectorXcd& w) {
  const Complex composed = heisenberg_translate(tau, v1, heisenberg_translate(tau, v2, s))(w);
  const Complex single = heisenberg_translate(tau, v1 + v2, s)(w);
  const Complex phase = std::exp(kI * kPi * symplectic_form(tau, v1, v2));
  return std::abs(composed - phase * single) / std::max(1.0, std::abs(composed));
}

std::int64_t theta_space_dimension(const std::vector<std::int64_t>& type) {
  std::int64_t d = 1;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type[i] < 1) throw Error(ErrorKind::InvalidInput, "polarization entries must be >= 1");
    if (i > 0 && type[i] % type[i - 1] != 0) {
      throw Error(ErrorKind::InvalidInput, "polarization type must satisfy d_1 | d_2 | ...");
    }
    d = checked_mul(d, type[i]);
  }
  return d;
}

ThetaSpaceReport verify_theta_space_dimension(const std::vector<std::int64_t>& type,
                                              const SiegelPoint& tau, std::uint64_t seed,
                                              double rel_tol) {
  const int g = tau.genus();
  if (static_cast<int>(type.size()) != g) {
    throw Error(ErrorKind::DimensionMismatch, "polarization type length differs from genus");
  }
  ThetaSpaceReport report;
  report.dimension = theta_space_dimension(type);
  const auto n = static_cast<int>(report.dimension);

  std::vector<ThetaSpec> specs;
  for (int idx = 0; idx < n; ++idx) {
    ThetaSpec spec = ThetaSpec::zero(g);
    int rest = idx;
    for (int i = g; i-- > 0;) {
      const auto d = static_cast<int>(type[i]);
      spec.a(i) = static_cast<double>(rest % d) / d;
      rest /= d;
    }
    spec.type = type;
    specs.push_back(std::move(spec));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int samples = 3 * n;
  Eigen::MatrixXcd values(samples, n);
  for (int p = 0; p < samples; ++p) {
    // Points in a fundamental domain: z = x + tau y, x, y in [0, 1)^g.
    Eigen::VectorXd x(g), y(g);
    for (int i = 0; i < g; ++i) {
      x(i) = u(rng);
      y(i) = u(rng);
    }
    const Eigen::VectorXcd z = x.cast<Complex>() + tau.tau() * y.cast<Complex>();
    for (int f = 0; f < n; ++f) values(p, f) = theta(specs[f], z, tau).value;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(values);
  const auto& sv = svd.singularValues();
  report.singular_values.assign(sv.data(), sv.data() + sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * sv(0)) ++report.numerical_rank;
  }
  if (report.numerical_rank < n) {
    throw Error(ErrorKind::RankDeficient, "sampled theta functions have rank " +
                                              std::to_string(report.numerical_rank) + " < " +
                                              std::to_string(n));
  }
  return report;
}

namespace {

Complex theta_at(const ThetaSpec& spec, const Eigen::VectorXcd& z, const Eigen::MatrixXcd& t) {
  return theta(spec, z, SiegelPoint(t), 1e-16).value;
}

// Central-difference residual for one (j, k).
Complex heat_defect(const ThetaSpec& spec, const Eigen::VectorXcd& z, const SiegelPoint& tau,
                    int j, int k, double h) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(tau.genus(), tau.genus());
  e(j, k) = e(k, j) = 1.0;
  const Complex dtau =
      (theta_at(spec, z, tau.tau() + h * e) - theta_at(spec, z, tau.tau() - h * e)) / (2.0 * h);

  auto at = [&](double sj, double sk) {
    Eigen::VectorXcd w = z;
    w(j) += sj * h;
    w(k) += sk * h;
    return theta_at(spec, w, tau.tau());
  };
  Complex dzz;
  if (j == k) {
    dzz = (at(0.5, 0.5) - 2.0 * theta_at(spec, z, tau.tau()) + at(-0.5, -0.5)) / (h * h);
  } else {
    dzz = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
  }
  const double factor = j == k ? 2.0 : 1.0;
  return dtau - dzz / (2.0 * kI * kPi * factor);
}

}  // namespace

double heat_equation_residual(const ThetaSpec& spec, const Eigen::VectorXcd& z,
                              const SiegelPoint& tau, double h, DifferenceScheme scheme) {
  double worst = 0.0;
  for (int j = 0; j < tau.genus(); ++j) {
    for (int k = j; k < tau.genus(); ++k) {
      Complex d = heat_defect(spec, z, tau, j, k, h);
      if (scheme == DifferenceScheme::Richardson) {
        d = (4.0 * heat_defect(spec, z, tau, j, k, h / 2.0) - d) / 3.0;
      }
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

double heat_convergence_slope(const ThetaSpec& spec, const Eigen::VectorXcd& z,
                              const SiegelPoint& tau, const std::vector<double>& steps) {
  const auto n = static_cast<double>(steps.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double h : steps) {
    const double x = std::log(h);
    const double y = std::log(heat_equation_residual(spec, z, tau, h, DifferenceScheme::Central));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace lcft
