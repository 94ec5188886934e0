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

#include "lattice_cft/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace lcft {

namespace {

// Quotient of a by a monic polynomial b; a must be divisible by b.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> a,
                                       const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

// Remainder of a modulo a monic polynomial b.
std::vector<std::int64_t> remainder_monic(std::vector<std::int64_t> a,
                                          const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i - db + j] = checked_add(a[i - db + j], -checked_mul(c, b[j]));
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    const auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

void CyclotomicSum::add(const Phase& p, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto& slot = terms_[p];
  slot = checked_add(slot, multiplicity);
  if (slot == 0) terms_.erase(p);
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& o) {
  for (const auto& [p, m] : o.terms_) add(p, m);
  return *this;
}

CyclotomicSum CyclotomicSum::operator-(const CyclotomicSum& o) const {
  CyclotomicSum out = *this;
  for (const auto& [p, m] : o.terms_) out.add(p, -m);
  return out;
}

CyclotomicSum CyclotomicSum::operator*(const CyclotomicSum& o) const {
  CyclotomicSum out;
  for (const auto& [p, m] : terms_) {
    for (const auto& [q, n] : o.terms_) out.add(p + q, checked_mul(m, n));
  }
  return out;
}

CyclotomicSum CyclotomicSum::scaled(std::int64_t k) const {
  CyclotomicSum out;
  for (const auto& [p, m] : terms_) out.add(p, checked_mul(m, k));
  return out;
}

bool CyclotomicSum::is_zero() const {
  if (terms_.empty()) return true;
  std::int64_t order = 1;
  for (const auto& [p, m] : terms_) order = std::lcm(order, p.value().denominator());
  std::vector<std::int64_t> poly(static_cast<std::size_t>(order), 0);
  for (const auto& [p, m] : terms_) {
    const auto idx = p.value().numerator() * (order / p.value().denominator());
    poly[static_cast<std::size_t>(idx)] += m;
  }
  const auto rem = remainder_monic(poly, cyclotomic_polynomial(order));
  for (auto c : rem) {
    if (c != 0) return false;
  }
  return true;
}

Complex CyclotomicSum::to_complex() const {
  Complex out{0.0, 0.0};
  for (const auto& [p, m] : terms_) out += static_cast<double>(m) * p.root_of_unity();
  return out;
}

}  // namespace lcft
