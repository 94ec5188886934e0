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

#ifndef LATTICE_CFT_CYCLOTOMIC_HPP_
#define LATTICE_CFT_CYCLOTOMIC_HPP_

#include <map>
#include <vector>

#include "lattice_cft/common.hpp"

namespace lcft {

/// Integer combination of roots of unity, sum_j n_j exp(2 pi i p_j).
///
/// Equality is decided exactly: the difference is written as a polynomial in
/// a primitive N-th root of unity and reduced modulo the cyclotomic polynomial.
class CyclotomicSum {
 public:
  CyclotomicSum() = default;
  explicit CyclotomicSum(std::int64_t integer) { add(Phase(), integer); }

  void add(const Phase& p, std::int64_t multiplicity = 1);

  CyclotomicSum& operator+=(const CyclotomicSum& o);
  CyclotomicSum operator-(const CyclotomicSum& o) const;
  /// Multiplication of two sums (convolution of phases).
  CyclotomicSum operator*(const CyclotomicSum& o) const;
  CyclotomicSum scaled(std::int64_t k) const;

  bool is_zero() const;
  bool operator==(const CyclotomicSum& o) const { return (*this - o).is_zero(); }

  Complex to_complex() const;
  const std::map<Phase, std::int64_t>& terms() const { return terms_; }

 private:
  std::map<Phase, std::int64_t> terms_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

}  // namespace lcft

#endif  // LATTICE_CFT_CYCLOTOMIC_HPP_
