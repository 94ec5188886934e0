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

#include "lattice_cft/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace lcft {

Eigen::VectorXd TrigLoop::operator()(double theta) const {
  Eigen::VectorXd v = constant;
  for (const auto& [m, c] : cos_modes) v += c * std::cos(m * theta);
  for (const auto& [m, s] : sin_modes) v += s * std::sin(m * theta);
  return v;
}

Eigen::VectorXd TrigLoop::derivative(double theta) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(rank());
  for (const auto& [m, c] : cos_modes) v -= m * c * std::sin(m * theta);
  for (const auto& [m, s] : sin_modes) v += m * s * std::cos(m * theta);
  return v;
}

double loop_cocycle(const TrigLoop& xi, const TrigLoop& eta, const Eigen::MatrixXd& form) {
  if (xi.rank() != eta.rank()) throw Error(ErrorKind::DimensionMismatch, "loops differ in rank");
  const Eigen::MatrixXd g =
      form.size() == 0 ? Eigen::MatrixXd::Identity(xi.rank(), xi.rank()) : form;
  auto mode = [](const std::map<int, Eigen::VectorXd>& modes, int m, int r) -> Eigen::VectorXd {
    const auto it = modes.find(m);
    return it == modes.end() ? Eigen::VectorXd::Zero(r) : it->second;
  };
  std::vector<int> ms;
  for (const auto* modes : {&xi.cos_modes, &xi.sin_modes, &eta.cos_modes, &eta.sin_modes}) {
    for (const auto& [m, v] : *modes) {
      if (m < 1) throw Error(ErrorKind::InvalidInput, "mode numbers must be >= 1");
      ms.push_back(m);
    }
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  const int r = xi.rank();
  double sum = 0.0;
  for (int m : ms) {
    const Eigen::VectorXd c = mode(xi.cos_modes, m, r), s = mode(xi.sin_modes, m, r);
    const Eigen::VectorXd c2 = mode(eta.cos_modes, m, r), s2 = mode(eta.sin_modes, m, r);
    sum += m * (c.dot(g * s2) - s.dot(g * c2));
  }
  return kPi * sum;
}

// ---------------------------------------------------------------------------
// Oscillators

int oscillator_energy(const Occupation& occ, int rank) {
  int e = 0;
  for (std::size_t i = 0; i < occ.size(); ++i) e += (static_cast<int>(i) / rank + 1) * occ[i];
  return e;
}

std::vector<Occupation> oscillator_basis(const ModeTruncation& tr) {
  if (tr.rank < 1 || tr.max_mode < 1 || tr.max_energy < 0) {
    throw Error(ErrorKind::InvalidInput, "truncation needs rank >= 1, max_mode >= 1, E >= 0");
  }
  const int slots = tr.rank * tr.max_mode;
  std::vector<Occupation> out;
  Occupation occ(static_cast<std::size_t>(slots), 0);
  std::function<void(int, int)> fill = [&](int slot, int budget) {
    if (slot == slots) {
      out.push_back(occ);
      return;
    }
    const int k = slot / tr.rank + 1;
    for (int n = 0; n * k <= budget; ++n) {
      occ[slot] = n;
      fill(slot + 1, budget - n * k);
    }
    occ[slot] = 0;
  };
  fill(0, tr.max_energy);
  std::stable_sort(out.begin(), out.end(), [&](const Occupation& x, const Occupation& y) {
    const int ex = oscillator_energy(x, tr.rank), ey = oscillator_energy(y, tr.rank);
    return ex != ey ? ex < ey : x < y;
  });
  return out;
}

ModeOperators mode_operators(const ModeTruncation& tr) {
  ModeOperators ops;
  ops.truncation = tr;
  ops.basis = oscillator_basis(tr);
  const auto n = static_cast<int>(ops.basis.size());
  std::map<Occupation, int> index;
  for (int i = 0; i < n; ++i) {
    index.emplace(ops.basis[i], i);
    ops.energy.push_back(oscillator_energy(ops.basis[i], tr.rank));
  }
  for (int m = 1; m <= tr.max_mode; ++m) {
    for (int c = 0; c < tr.rank; ++c) {
      const int slot = (m - 1) * tr.rank + c;
      std::vector<Eigen::Triplet<double>> down, up;
      for (int j = 0; j < n; ++j) {
        Occupation occ = ops.basis[j];
        const int k = occ[slot];
        if (k > 0) {
          occ[slot] = k - 1;
          down.emplace_back(index.at(occ), j, std::sqrt(static_cast<double>(m) * k));
          occ[slot] = k;
        }
        if (ops.energy[j] + m <= tr.max_energy) {
          occ[slot] = k + 1;
          up.emplace_back(index.at(occ), j, std::sqrt(static_cast<double>(m) * (k + 1)));
        }
      }
      SparseMatrix a(n, n), ad(n, n);
      a.setFromTriplets(down.begin(), down.end());
      ad.setFromTriplets(up.begin(), up.end());
      ops.annihilation.push_back(std::move(a));
      ops.creation.push_back(std::move(ad));
    }
  }
  return ops;
}

CommutatorReport commutator_check(const ModeOperators& ops) {
  const auto& tr = ops.truncation;
  CommutatorReport report;
  for (int e : ops.energy) {
    if (e <= tr.max_energy - tr.max_mode) {
      ++report.interior_states;
    } else {
      ++report.boundary_states;
    }
  }
  const auto n = static_cast<int>(ops.basis.size());
  for (int m = 1; m <= tr.max_mode; ++m) {
    for (int c = 0; c < tr.rank; ++c) {
      for (int k = 1; k <= tr.max_mode; ++k) {
        for (int c2 = 0; c2 < tr.rank; ++c2) {
          const SparseMatrix comm =
              ops.a(m, c) * ops.a_dag(k, c2) - ops.a_dag(k, c2) * ops.a(m, c);
          const double expected = (m == k && c == c2) ? m : 0.0;
          const int limit = tr.max_energy - std::max(m, k);
          for (int j = 0; j < n; ++j) {
            if (ops.energy[j] > limit) continue;
            double diag = 0.0;
            for (SparseMatrix::InnerIterator it(comm, j); it; ++it) {
              if (it.row() == j) {
                diag = it.value();
              } else {
                report.max_deviation = std::max(report.max_deviation, std::abs(it.value()));
              }
            }
            report.max_deviation = std::max(report.max_deviation, std::abs(diag - expected));
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Lattice sectors

namespace {

// Fincke-Pohst: integer mu with (l + mu)^T G (l + mu) <= budget.
void enumerate_short(const Eigen::MatrixXd& gram, const Eigen::VectorXd& l, double budget,
                     const std::function<void(const Eigen::VectorXi&)>& visit) {
  const auto r = static_cast<int>(gram.rows());
  const Eigen::MatrixXd upper = Eigen::LLT<Eigen::MatrixXd>(gram).matrixU();
  Eigen::VectorXi mu = Eigen::VectorXi::Zero(r);
  Eigen::VectorXd x = l;
  std::function<void(int, double)> level = [&](int i, double rest) {
    if (i < 0) {
      visit(mu);
      return;
    }
    double tail = 0.0;
    for (int j = i + 1; j < r; ++j) tail += upper(i, j) * x(j);
    const double rii = upper(i, i);
    const double center = -tail / rii;
    const double rad = std::sqrt(std::max(rest, 0.0)) / rii;
    const auto lo = static_cast<int>(std::ceil(center - rad - l(i) - 1e-9));
    const auto hi = static_cast<int>(std::floor(center + rad - l(i) + 1e-9));
    for (int m = lo; m <= hi; ++m) {
      mu(i) = m;
      x(i) = l(i) + m;
      const double t = rii * x(i) + tail;
      level(i - 1, rest - t * t);
    }
    mu(i) = 0;
    x(i) = l(i);
  };
  level(r - 1, budget + 1e-9 * (1.0 + budget));
}

Eigen::VectorXd to_double(const RationalVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = lcft::to_double(v(i));
  return out;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

}  // namespace

std::vector<std::pair<RationalVector, Rational>> coset_vectors(const EvenLattice& lat,
                                                               const RationalVector& lift,
                                                               const Rational& half_norm_bound) {
  std::vector<std::pair<RationalVector, Rational>> out;
  const Eigen::MatrixXd g = lat.gram().cast<double>();
  enumerate_short(g, to_double(lift), 2.0 * lcft::to_double(half_norm_bound),
                  [&](const Eigen::VectorXi& mu) {
                    RationalVector x = lift;
                    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) += Rational(mu(i));
                    const Rational hn = lat.inner(x, x) / 2;
                    if (hn <= half_norm_bound) out.emplace_back(std::move(x), hn);
                  });
  return out;
}

RationalVector minimal_lift(const EvenLattice& lat, const DiscriminantGroup& disc,
                            const GroupElement& phi) {
  const RationalVector start = disc.lift(disc.reduce(phi));
  const auto candidates = coset_vectors(lat, start, lat.inner(start, start) / 2);
  const std::pair<RationalVector, Rational>* best = nullptr;
  for (const auto& c : candidates) {
    if (!best || c.second < best->second ||
        (c.second == best->second && lex_less(c.first, best->first))) {
      best = &c;
    }
  }
  if (!best) throw Error(ErrorKind::InvalidInput, "coset enumeration found no vector");
  return best->first;
}

std::vector<std::int64_t> colored_partitions(int rank, int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int c = 0; c < rank; ++c) {
    for (int k = 1; k <= n; ++k) {
      for (int j = k; j <= n; ++j) p[j] = checked_add(p[j], p[j - k]);
    }
  }
  return p;
}

namespace {

// Theta-series coefficients of the sector, relative to its ground energy.
std::pair<Rational, std::vector<std::int64_t>> coset_theta(const EvenLattice& lat,
                                                           const GroupElement& phi,
                                                           int max_energy) {
  const DiscriminantGroup disc = discriminant_group(lat);
  const RationalVector lift = minimal_lift(lat, disc, phi);
  const Rational ground = lat.inner(lift, lift) / 2;
  std::vector<std::int64_t> theta(static_cast<std::size_t>(max_energy) + 1, 0);
  for (const auto& [x, hn] : coset_vectors(lat, lift, ground + max_energy)) {
    const Rational d = hn - ground;
    if (d.denominator() != 1) {
      throw Error(ErrorKind::NonIntegralEnergy, "sector energies differ by a non-integer");
    }
    ++theta[static_cast<std::size_t>(d.numerator())];
  }
  return {ground, theta};
}

}  // namespace

SectorCharacter sector_character(const EvenLattice& lat, const GroupElement& phi, int max_energy) {
  if (max_energy < 0) throw Error(ErrorKind::InvalidInput, "max energy must be >= 0");
  auto [ground, theta] = coset_theta(lat, phi, max_energy);
  const auto parts = colored_partitions(lat.rank(), max_energy);
  SectorCharacter out;
  out.ground_energy = ground;
  out.coefficients.assign(static_cast<std::size_t>(max_energy) + 1, 0);
  for (int i = 0; i <= max_energy; ++i) {
    for (int j = 0; i + j <= max_energy; ++j) {
      out.coefficients[i + j] = checked_add(out.coefficients[i + j], checked_mul(theta[i], parts[j]));
    }
  }
  return out;
}

std::vector<Rational> sector_energy_levels(const EvenLattice& lat, const GroupElement& phi,
                                           int max_energy) {
  auto [ground, theta] = coset_theta(lat, phi, max_energy);
  const auto parts = colored_partitions(lat.rank(), max_energy);
  std::vector<Rational> levels;
  for (int i = 0; i <= max_energy; ++i) {
    for (int j = 0; i + j <= max_energy; ++j) {
      levels.insert(levels.end(), static_cast<std::size_t>(theta[i] * parts[j]),
                    ground + Rational(i + j));
    }
  }
  return levels;
}

PositiveEnergyReport positive_energy_check(const std::vector<Rational>& levels) {
  PositiveEnergyReport r;
  if (levels.empty()) return r;
  r.ground = *std::min_element(levels.begin(), levels.end());
  r.positive = r.ground >= 0 && std::all_of(levels.begin(), levels.end(), [&](const Rational& e) {
                 return (e - r.ground).denominator() == 1;
               });
  return r;
}

SewingReport annulus_sewing_check(const EvenLattice& lat, int max_energy) {
  if (max_energy < 0) throw Error(ErrorKind::InvalidInput, "max energy must be >= 0");
  SewingReport report;
  const Rational e_max(max_energy);
  const auto parts = colored_partitions(lat.rank(), max_energy);

  const DiscriminantGroup disc = discriminant_group(lat);
  for (const auto& phi : disc.elements()) {
    const SectorCharacter ch = sector_character(lat, phi, max_energy);
    for (int i = 0; i <= max_energy; ++i) {
      for (int j = 0; j <= max_energy; ++j) {
        const Rational hl = ch.ground_energy + i, hr = ch.ground_energy + j;
        if (hl + hr > e_max) continue;
        const auto v = checked_mul(ch.coefficients[i], ch.coefficients[j]);
        if (v != 0) report.sector_side[{hl, hr}] += v;
      }
    }
  }

  // Dual vectors x = G^{-1} n grouped by x mod L.
  const RationalMatrix g_inv = to_rational(lat.gram()).inverse();
  Eigen::MatrixXd g_inv_d(g_inv.rows(), g_inv.cols());
  for (Eigen::Index i = 0; i < g_inv.rows(); ++i) {
    for (Eigen::Index j = 0; j < g_inv.cols(); ++j) g_inv_d(i, j) = lcft::to_double(g_inv(i, j));
  }
  std::map<std::vector<Rational>, std::vector<Rational>> classes;
  enumerate_short(g_inv_d, Eigen::VectorXd::Zero(lat.rank()), 2.0 * max_energy,
                  [&](const Eigen::VectorXi& n) {
                    RationalVector nr(n.size());
                    for (Eigen::Index i = 0; i < n.size(); ++i) nr(i) = Rational(n(i));
                    const RationalVector x = g_inv * nr;
                    const Rational hn = nr.dot(x) / 2;
                    if (hn > e_max) return;
                    std::vector<Rational> key(static_cast<std::size_t>(x.size()));
                    for (Eigen::Index i = 0; i < x.size(); ++i) key[i] = mod_rational(x(i), 1);
                    classes[key].push_back(hn);
                  });
  for (const auto& [key, norms] : classes) {
    for (const auto& hx : norms) {
      for (const auto& hy : norms) {
        if (hx + hy > e_max) continue;
        for (int nl = 0; nl <= max_energy; ++nl) {
          for (int nr = 0; nr <= max_energy; ++nr) {
            const Rational hl = hx + nl, hr = hy + nr;
            if (hl + hr > e_max) continue;
            report.annulus_side[{hl, hr}] += checked_mul(parts[nl], parts[nr]);
          }
        }
      }
    }
  }
  report.equal = report.sector_side == report.annulus_side;
  return report;
}

double bogoliubov_overlap(const Eigen::MatrixXcd& t) {
  if (t.rows() != t.cols()) throw Error(ErrorKind::DimensionMismatch, "T must be square");
  if (t.size() == 0) return 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
  if (svd.singularValues()(0) >= 1.0) {
    throw Error(ErrorKind::NotContractive, "operator norm of T is not below 1");
  }
  const auto n = t.rows();
  const Complex det = (Eigen::MatrixXcd::Identity(n, n) - t.adjoint() * t).determinant();
  return std::pow(std::abs(det), 0.25);
}

}  // namespace lcft
