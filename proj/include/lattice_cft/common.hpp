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

#ifndef LATTICE_CFT_COMMON_HPP_
#define LATTICE_CFT_COMMON_HPP_

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace Eigen {

// Exact rationals as an Eigen scalar: only the arithmetic core is used.
template <>
struct NumTraits<boost::rational<std::int64_t>>
    : GenericNumTraits<boost::rational<std::int64_t>> {
  using Real = boost::rational<std::int64_t>;
  using NonInteger = boost::rational<std::int64_t>;
  using Nested = boost::rational<std::int64_t>;
  using Literal = boost::rational<std::int64_t>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};

}  // namespace Eigen

namespace lcft {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

enum class ErrorKind {
  NotSymmetric,
  OddDiagonal,
  NotPositiveDefinite,
  MissingLabel,
  OrientationMismatch,
  UnknownCircle,
  DimensionMismatch,
  NonclosedSurface,
  GroupTooLarge,
  NotIsotropic,
  NotASplitting,
  InvalidSplit,
  TruncationOverflow,
  RankDeficient,
  NonIntegralEnergy,
  NotContractive,
  Overflow,
  Parse,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Element of Q/Z, kept in [0, 1).
class Phase {
 public:
  Phase() = default;
  explicit Phase(Rational r) : value_(reduce(r)) {}
  Phase(std::int64_t num, std::int64_t den) : value_(reduce(Rational(num, den))) {}

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.numerator() == 0; }

  Phase operator+(const Phase& o) const { return Phase(value_ + o.value_); }
  Phase operator-(const Phase& o) const { return Phase(value_ - o.value_); }
  Phase operator-() const { return Phase(-value_); }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }
  friend Phase operator*(std::int64_t k, const Phase& p) { return Phase(p.value_ * k); }

  bool operator==(const Phase& o) const { return value_ == o.value_; }
  bool operator<(const Phase& o) const { return value_ < o.value_; }

  /// exp(2 pi i * value)
  Complex root_of_unity() const;

 private:
  static Rational reduce(const Rational& r);
  Rational value_{0};
};

/// Reduce r into [0, m) for a positive integer modulus m.
Rational mod_rational(const Rational& r, std::int64_t m);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t ipow(std::int64_t base, int exp);
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

inline constexpr double kPi = std::numbers::pi;

}  // namespace lcft

#endif  // LATTICE_CFT_COMMON_HPP_
