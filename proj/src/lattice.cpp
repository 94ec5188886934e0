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

#include "lattice_cft/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace lcft {

namespace {

// Elementary operations applied to the working matrix while keeping the
// transforms and their inverses in sync.
struct SmithWork {
  IntMatrix A, U, U_inv, V, V_inv;

  // row_i -= q * row_t
  void row_sub(Eigen::Index i, Eigen::Index t, std::int64_t q) {
    if (q == 0) return;
    for (Eigen::Index j = 0; j < A.cols(); ++j) A(i, j) = checked_add(A(i, j), -checked_mul(q, A(t, j)));
    for (Eigen::Index j = 0; j < U.cols(); ++j) U(i, j) = checked_add(U(i, j), -checked_mul(q, U(t, j)));
    for (Eigen::Index j = 0; j < U_inv.rows(); ++j) {
      U_inv(j, t) = checked_add(U_inv(j, t), checked_mul(q, U_inv(j, i)));
    }
  }
  // col_j -= q * col_t
  void col_sub(Eigen::Index j, Eigen::Index t, std::int64_t q) {
    if (q == 0) return;
    for (Eigen::Index i = 0; i < A.rows(); ++i) A(i, j) = checked_add(A(i, j), -checked_mul(q, A(i, t)));
    for (Eigen::Index i = 0; i < V.rows(); ++i) V(i, j) = checked_add(V(i, j), -checked_mul(q, V(i, t)));
    for (Eigen::Index i = 0; i < V_inv.cols(); ++i) {
      V_inv(t, i) = checked_add(V_inv(t, i), checked_mul(q, V_inv(j, i)));
    }
  }
  void row_swap(Eigen::Index i, Eigen::Index t) {
    if (i == t) return;
    A.row(i).swap(A.row(t));
    U.row(i).swap(U.row(t));
    U_inv.col(i).swap(U_inv.col(t));
  }
  void col_swap(Eigen::Index j, Eigen::Index t) {
    if (j == t) return;
    A.col(j).swap(A.col(t));
    V.col(j).swap(V.col(t));
    V_inv.row(j).swap(V_inv.row(t));
  }
  void row_negate(Eigen::Index i) {
    A.row(i) *= -1;
    U.row(i) *= -1;
    U_inv.col(i) *= -1;
  }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  SmithWork w{m, IntMatrix::Identity(rows, rows), IntMatrix::Identity(rows, rows),
              IntMatrix::Identity(cols, cols), IntMatrix::Identity(cols, cols)};
  auto& A = w.A;

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (A(i, j) != 0 && (pi < 0 || std::llabs(A(i, j)) < std::llabs(A(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      w.row_swap(pi, t);
      w.col_swap(pj, t);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        w.row_sub(i, t, floor_div(A(i, t), A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        w.col_sub(j, t, floor_div(A(t, j), A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      w.row_sub(t, bad, -1);
    }
    if (A(t, t) < 0) w.row_negate(t);
  }
  return SmithForm{w.U, w.A, w.V, w.U_inv, w.V_inv};
}

std::int64_t integer_determinant(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  // Bareiss with row pivoting; intermediate products in 128 bits.
  Eigen::Matrix<__int128, Eigen::Dynamic, Eigen::Dynamic> a = m.cast<__int128>();
  __int128 prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  const __int128 det = sign * a(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN) {
    throw Error(ErrorKind::Overflow, "determinant exceeds 64 bits");
  }
  return static_cast<std::int64_t>(det);
}

Rational EvenLattice::inner(const RationalVector& x, const RationalVector& y) const {
  return x.dot(gram_.cast<Rational>() * y);
}

EvenLattice validate_even_lattice(const IntMatrix& gram) {
  if (gram.rows() == 0 || gram.rows() != gram.cols()) {
    throw Error(ErrorKind::NotSymmetric, "Gram matrix must be square and nonempty");
  }
  const Eigen::Index r = gram.rows();
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < r; ++j) {
      if (gram(i, j) != gram(j, i)) {
        throw Error(ErrorKind::NotSymmetric, "Gram matrix is not symmetric");
      }
    }
  }
  for (Eigen::Index i = 0; i < r; ++i) {
    if (gram(i, i) % 2 != 0) {
      throw Error(ErrorKind::OddDiagonal,
                  "odd diagonal entry: odd lattices need a spin structure and are not supported");
    }
  }
  for (Eigen::Index k = 1; k <= r; ++k) {
    if (integer_determinant(gram.topLeftCorner(k, k)) <= 0) {
      throw Error(ErrorKind::NotPositiveDefinite,
                  "leading principal minor of order " + std::to_string(k) + " is not positive");
    }
  }
  EvenLattice out;
  out.gram_ = gram;
  out.det_ = integer_determinant(gram);
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) g = std::gcd(g, gram(i, j));
  }
  out.level_ell_ = g;
  return out;
}

DiscriminantGroup::DiscriminantGroup(std::vector<std::int64_t> invariant_factors,
                                     RationalMatrix form, RationalMatrix lift)
    : factors_(std::move(invariant_factors)), form_(std::move(form)), lift_(std::move(lift)) {
  for (auto d : factors_) {
    order_ = checked_mul(order_, d);
    exponent_ = std::lcm(exponent_, d);
  }
}

Rational DiscriminantGroup::bilinear(const GroupElement& a, const GroupElement& b) const {
  Rational s(0);
  for (int i = 0; i < num_factors(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < num_factors(); ++j) s += form_(i, j) * a[i] * b[j];
  }
  return mod_rational(s, 1);
}

Rational DiscriminantGroup::quadratic(const GroupElement& a) const {
  Rational s(0);
  for (int i = 0; i < num_factors(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < num_factors(); ++j) s += form_(i, j) * a[i] * a[j];
  }
  return mod_rational(s, 2);
}

RationalMatrix DiscriminantGroup::bilinear_matrix() const {
  RationalMatrix out(num_factors(), num_factors());
  for (int i = 0; i < num_factors(); ++i) {
    for (int j = 0; j < num_factors(); ++j) out(i, j) = mod_rational(form_(i, j), 1);
  }
  return out;
}

RationalVector DiscriminantGroup::lift(const GroupElement& a) const {
  RationalVector c(num_factors());
  for (int i = 0; i < num_factors(); ++i) c(i) = Rational(a[i]);
  if (num_factors() == 0) return RationalVector::Zero(lift_.rows());
  return lift_ * c;
}

GroupElement DiscriminantGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (a[i] + b[i]) % factors_[i];
  return out;
}

GroupElement DiscriminantGroup::negate(const GroupElement& a) const {
  GroupElement out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = floor_mod(-a[i], factors_[i]);
  return out;
}

GroupElement DiscriminantGroup::scale(const GroupElement& a, std::int64_t k) const {
  GroupElement out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = floor_mod(checked_mul(floor_mod(k, factors_[i]), a[i]), factors_[i]);
  }
  return out;
}

GroupElement DiscriminantGroup::reduce(const GroupElement& a) const {
  if (a.size() != factors_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "group element has " + std::to_string(a.size()) +
                                                  " coordinates, expected " +
                                                  std::to_string(factors_.size()));
  }
  GroupElement out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = floor_mod(a[i], factors_[i]);
  return out;
}

bool DiscriminantGroup::is_valid(const GroupElement& a) const {
  if (a.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (a[i] < 0 || a[i] >= factors_[i]) return false;
  }
  return true;
}

bool DiscriminantGroup::is_zero(const GroupElement& a) const {
  for (auto c : a) {
    if (c != 0) return false;
  }
  return true;
}

GroupElement DiscriminantGroup::element_at(std::int64_t index) const {
  GroupElement out(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    out[i] = index % factors_[i];
    index /= factors_[i];
  }
  return out;
}

std::int64_t DiscriminantGroup::index_of(const GroupElement& a) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
  return idx;
}

std::vector<GroupElement> DiscriminantGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

DiscriminantGroup discriminant_group(const EvenLattice& lattice) {
  const SmithForm snf = smith_normal_form(lattice.gram());
  const int r = lattice.rank();
  // G^{-1} U^{-1} = V D^{-1}: columns are dual-lattice lifts of unit coordinates.
  RationalMatrix lift_full(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) lift_full(i, j) = Rational(snf.V(i, j), snf.D(j, j));
  }
  const RationalMatrix form_full = snf.U_inv.cast<Rational>().transpose() * lift_full;

  std::vector<int> keep;
  std::vector<std::int64_t> factors;
  for (int i = 0; i < r; ++i) {
    if (snf.D(i, i) > 1) {
      keep.push_back(i);
      factors.push_back(snf.D(i, i));
    }
  }
  const int k = static_cast<int>(keep.size());
  RationalMatrix form(k, k), lift(r, k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) form(a, b) = form_full(keep[a], keep[b]);
    for (int i = 0; i < r; ++i) lift(i, a) = lift_full(i, keep[a]);
  }
  return DiscriminantGroup(std::move(factors), std::move(form), std::move(lift));
}

Complex gauss_sum(const DiscriminantGroup& disc) {
  Complex s{0.0, 0.0};
  for (std::int64_t i = 0; i < disc.order(); ++i) {
    const double q = to_double(disc.quadratic(disc.element_at(i)));
    s += std::polar(1.0, kPi * q);
  }
  return s;
}

int signature_mod8(const DiscriminantGroup& disc) {
  const double arg = std::arg(gauss_sum(disc));
  const long eighths = std::lround(arg / (kPi / 4.0));
  return static_cast<int>(floor_mod(eighths, 8));
}

}  // namespace lcft
