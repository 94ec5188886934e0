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

#include "lattice_cft/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

namespace lcft::oracle {

Complex theta_direct(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                     const Eigen::VectorXcd& z, const Eigen::MatrixXcd& tau, int radius) {
  const auto g = static_cast<int>(a.size());
  const Complex i2pi(0.0, 2.0 * kPi);
  Complex sum{0.0, 0.0};
  std::vector<int> n(static_cast<std::size_t>(g), -radius);
  while (true) {
    Complex e{0.0, 0.0};
    for (int j = 0; j < g; ++j) {
      const double uj = n[j] + a(j);
      for (int k = 0; k < g; ++k) e += 0.5 * i2pi * uj * tau(j, k) * (n[k] + a(k));
      e += i2pi * uj * (z(j) + b(j));
    }
    sum += std::exp(e);
    int j = g - 1;
    while (j >= 0 && n[j] == radius) n[j--] = -radius;
    if (j < 0) break;
    ++n[j];
  }
  return sum;
}

namespace {

// Trapezoid rule on [-L, L]^d, d = 1 or 2.
Complex grid_integral(int d, double half_width, double step,
                      const std::function<Complex(double, double)>& f) {
  const int n = static_cast<int>(std::ceil(half_width / step));
  Complex sum{0.0, 0.0};
  for (int i = -n; i <= n; ++i) {
    if (d == 1) {
      sum += f(i * step, 0.0);
      continue;
    }
    for (int j = -n; j <= n; ++j) sum += f(i * step, j * step);
  }
  return sum * std::pow(step, d);
}

}  // namespace

double gaussian_overlap(const Eigen::MatrixXcd& t) {
  const auto d = static_cast<int>(t.rows());
  if (d < 1 || d > 2 || t.cols() != d) {
    throw Error(ErrorKind::DimensionMismatch, "quadrature overlap supports dimensions 1 and 2");
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd m = (id - t) * (id + t).inverse();
  const Eigen::MatrixXd re = (m.real() + m.real().transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(re, Eigen::EigenvaluesOnly);
  const double mu_min = std::min(1.0, eig.eigenvalues().minCoeff());
  const double mu_max = 1.0 + m.cwiseAbs().sum();
  const double half_width = std::sqrt(40.0 / mu_min);
  const double step = 0.35 / std::sqrt(mu_max);

  auto quad = [&](const Eigen::Vector2d& x) {
    Complex q{0.0, 0.0};
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) q += x(i) * m(i, j) * x(j);
    }
    return q;
  };
  const Complex cross = grid_integral(d, half_width, step, [&](double x, double y) {
    const Eigen::Vector2d v(x, y);
    return std::exp(-0.5 * (x * x + y * y) - 0.5 * quad(v));
  });
  const Complex n0 = grid_integral(d, half_width, step,
                                   [](double x, double y) { return Complex(std::exp(-(x * x + y * y))); });
  const Complex nt = grid_integral(d, half_width, step, [&](double x, double y) {
    const Eigen::Vector2d v(x, y);
    return Complex(std::exp(-quad(v).real()));
  });
  return std::abs(cross) / std::sqrt(n0.real() * nt.real());
}

double loop_cocycle_quadrature(const TrigLoop& xi, const TrigLoop& eta,
                               const Eigen::MatrixXd& form, int points) {
  const Eigen::MatrixXd g =
      form.size() == 0 ? Eigen::MatrixXd::Identity(xi.rank(), xi.rank()) : form;
  const double h = 2.0 * kPi / points;
  double sum = 0.0;
  for (int k = 0; k < points; ++k) {
    const double theta = k * h;
    sum += xi(theta).dot(g * eta.derivative(theta));
  }
  return sum * h;
}

SectorCount sector_states(const EvenLattice& lat, const DiscriminantGroup& disc,
                          const GroupElement& phi, int max_energy) {
  const int r = lat.rank();
  const RationalVector lift = disc.lift(disc.reduce(phi));
  const Rational start = lat.inner(lift, lift) / 2;
  const Rational cap = start + max_energy;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lat.gram().cast<double>(),
                                                     Eigen::EigenvaluesOnly);
  const double radius = std::sqrt(2.0 * to_double(cap) / eig.eigenvalues().minCoeff()) + 1.0;

  // Box search over x = lift + mu with |x_i| <= radius.
  std::vector<Rational> norms;
  std::vector<std::int64_t> mu(static_cast<std::size_t>(r));
  std::vector<std::int64_t> lo(static_cast<std::size_t>(r)), hi(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const double l = to_double(lift(i));
    lo[i] = static_cast<std::int64_t>(std::floor(-radius - l));
    hi[i] = static_cast<std::int64_t>(std::ceil(radius - l));
    mu[i] = lo[i];
  }
  while (true) {
    RationalVector x = lift;
    for (int i = 0; i < r; ++i) x(i) += Rational(mu[i]);
    const Rational hn = lat.inner(x, x) / 2;
    if (hn <= cap) norms.push_back(hn);
    int i = r - 1;
    while (i >= 0 && mu[i] == hi[i]) {
      mu[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++mu[i];
  }

  SectorCount out;
  out.ground = *std::min_element(norms.begin(), norms.end());
  out.counts.assign(static_cast<std::size_t>(max_energy) + 1, 0);

  // Oscillator states listed one by one: occupations of modes 1..E in r colours.
  std::vector<std::int64_t> oscillators(static_cast<std::size_t>(max_energy) + 1, 0);
  std::function<void(int, int, int)> fill = [&](int mode, int colour, int energy) {
    if (mode > max_energy) {
      ++oscillators[energy];
      return;
    }
    const int next_mode = colour + 1 == r ? mode + 1 : mode;
    const int next_colour = colour + 1 == r ? 0 : colour + 1;
    for (int e = energy; e <= max_energy; e += mode) fill(next_mode, next_colour, e);
  };
  fill(1, 0, 0);

  for (const auto& hn : norms) {
    const Rational d = hn - out.ground;
    if (d.denominator() != 1 || d.numerator() > max_energy) continue;
    for (int n = 0; d.numerator() + n <= max_energy; ++n) {
      out.counts[d.numerator() + n] += oscillators[n];
    }
  }
  return out;
}

int homology_rank_from_euler(const Surface& s) {
  int rank = 0;
  for (const auto& c : s.components()) {
    const int b2 = c.boundaries.empty() ? 1 : 0;
    rank += 1 + b2 - c.euler_characteristic();
  }
  return rank;
}

}  // namespace lcft::oracle
