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

#include "lattice_cft/common.hpp"

#include <cmath>

namespace lcft {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::OddDiagonal: return "OddDiagonal";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::OrientationMismatch: return "OrientationMismatch";
    case ErrorKind::UnknownCircle: return "UnknownCircle";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonclosedSurface: return "NonclosedSurface";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::NotASplitting: return "NotASplitting";
    case ErrorKind::InvalidSplit: return "InvalidSplit";
    case ErrorKind::TruncationOverflow: return "TruncationOverflow";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NonIntegralEnergy: return "NonIntegralEnergy";
    case ErrorKind::NotContractive: return "NotContractive";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "unknown";
}

Rational Phase::reduce(const Rational& r) { return mod_rational(r, 1); }

Complex Phase::root_of_unity() const {
  const double angle = 2.0 * kPi * to_double(value_);
  return {std::cos(angle), std::sin(angle)};
}

Rational mod_rational(const Rational& r, std::int64_t m) {
  // floor(r / m) computed on numerator/denominator to stay exact.
  const std::int64_t den = r.denominator();
  const std::int64_t span = checked_mul(m, den);
  const std::int64_t num = floor_mod(r.numerator(), span);
  return Rational(num, den);
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "64-bit integer overflow in multiplication");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "64-bit integer overflow in addition");
  }
  return out;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace lcft
