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

#include "lattice_cft/heisenberg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>

#include <Eigen/Eigenvalues>

namespace lcft {

// ---------------------------------------------------------------------------
// Group law

HeisenbergGroup::HeisenbergGroup(IntersectionPairing pairing) : pairing_(std::move(pairing)) {
  homology_order_ = ipow(coefficients().order(), num_cycles());
}

HeisenbergGroup HeisenbergGroup::closed(const DiscriminantGroup& disc, int genus) {
  return HeisenbergGroup(intersection_matrix(Surface::closed(genus), disc));
}

HomologyClass HeisenbergGroup::zero() const {
  return HomologyClass(static_cast<std::size_t>(num_cycles()), coefficients().zero());
}

HomologyClass HeisenbergGroup::add(const HomologyClass& x, const HomologyClass& y) const {
  HomologyClass out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) out[p] = coefficients().add(x[p], y[p]);
  return out;
}

HomologyClass HeisenbergGroup::negate(const HomologyClass& x) const {
  HomologyClass out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) out[p] = coefficients().negate(x[p]);
  return out;
}

HomologyClass HeisenbergGroup::scale(const HomologyClass& x, std::int64_t k) const {
  HomologyClass out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) out[p] = coefficients().scale(x[p], k);
  return out;
}

bool HeisenbergGroup::is_zero(const HomologyClass& x) const {
  return std::all_of(x.begin(), x.end(), [&](const auto& a) { return coefficients().is_zero(a); });
}

HomologyClass HeisenbergGroup::class_at(std::int64_t index) const {
  const std::int64_t order = coefficients().order();
  HomologyClass out(static_cast<std::size_t>(num_cycles()));
  for (int p = num_cycles(); p-- > 0;) {
    out[p] = coefficients().element_at(index % order);
    index /= order;
  }
  return out;
}

std::int64_t HeisenbergGroup::index_of(const HomologyClass& x) const {
  std::int64_t idx = 0;
  for (const auto& a : x) idx = idx * coefficients().order() + coefficients().index_of(a);
  return idx;
}

std::vector<HomologyClass> HeisenbergGroup::generators() const {
  std::vector<HomologyClass> out;
  const int k = coefficients().num_factors();
  for (int p = 0; p < num_cycles(); ++p) {
    for (int i = 0; i < k; ++i) {
      HomologyClass e = zero();
      e[p][i] = 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

Rational HeisenbergGroup::polarized_cocycle(const HomologyClass& x, const HomologyClass& y) const {
  Rational s(0);
  for (const auto& block : basis().blocks) {
    for (int i = 0; i < block.genus; ++i) {
      const int a = block.offset + 2 * i;
      s -= coefficients().bilinear(x[a + 1], y[a]);
    }
  }
  return mod_rational(s, 1);
}

void HeisenbergGroup::check(const HeisenbergElement& x) const {
  if (static_cast<int>(x.x.size()) != num_cycles()) {
    throw Error(ErrorKind::DimensionMismatch,
                "element has " + std::to_string(x.x.size()) + " cycles, group has " +
                    std::to_string(num_cycles()));
  }
  for (const auto& a : x.x) {
    if (!coefficients().is_valid(a)) {
      throw Error(ErrorKind::DimensionMismatch, "coefficient outside the discriminant group");
    }
  }
}

HeisenbergElement HeisenbergGroup::product(const HeisenbergElement& x,
                                           const HeisenbergElement& y) const {
  return {add(x.x, y.x), x.phase + y.phase + Phase(intersection(x.x, y.x))};
}

HeisenbergElement HeisenbergGroup::inverse(const HeisenbergElement& x) const {
  const HomologyClass minus = negate(x.x);
  return {minus, -x.phase - Phase(intersection(x.x, minus))};
}

HeisenbergElement HeisenbergGroup::polarized_product(const HeisenbergElement& x,
                                                     const HeisenbergElement& y) const {
  return {add(x.x, y.x), x.phase + y.phase + Phase(polarized_cocycle(x.x, y.x))};
}

HeisenbergElement HeisenbergGroup::polarized_inverse(const HeisenbergElement& x) const {
  const HomologyClass minus = negate(x.x);
  return {minus, -x.phase - Phase(polarized_cocycle(x.x, minus))};
}

HeisenbergElement heisenberg_product(const HeisenbergElement& x, const HeisenbergElement& y,
                                     const IntersectionPairing& s) {
  const auto n = static_cast<std::size_t>(s.basis().rank);
  if (x.x.size() != n || y.x.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "elements do not match the pairing's homology rank");
  }
  HomologyClass sum(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (x.x[p].size() != y.x[p].size()) {
      throw Error(ErrorKind::DimensionMismatch, "coefficient vectors differ in length");
    }
    sum[p] = s.group().add(s.group().reduce(x.x[p]), s.group().reduce(y.x[p]));
  }
  return {std::move(sum), x.phase + y.phase + Phase(s(x.x, y.x))};
}

CenterDescription center(const DiscriminantGroup& disc, const Surface& s) {
  const HomologyBasis basis = homology_basis(s);
  const int k = disc.num_factors();

  // Radical of the bilinear form on A (trivial for discriminant groups).
  std::vector<GroupElement> rad;
  for (const auto& a : disc.elements()) {
    bool in_rad = true;
    for (int i = 0; i < k && in_rad; ++i) {
      GroupElement e = disc.zero();
      e[i] = 1;
      in_rad = disc.bilinear(a, e).numerator() == 0;
    }
    if (in_rad && !disc.is_zero(a)) rad.push_back(a);
  }

  CenterDescription out;
  const auto zero_class = HomologyClass(static_cast<std::size_t>(basis.rank), disc.zero());
  std::int64_t boundary_cycles = 0;
  for (int p = 0; p < basis.rank; ++p) {
    if (basis.is_boundary_class(p)) {
      ++boundary_cycles;
      for (int i = 0; i < k; ++i) {
        HomologyClass e = zero_class;
        e[p][i] = 1;
        out.generators.push_back(std::move(e));
      }
    } else {
      for (const auto& a : rad) {
        HomologyClass e = zero_class;
        e[p] = a;
        out.generators.push_back(std::move(e));
      }
    }
  }
  out.radical_order = checked_mul(ipow(disc.order(), static_cast<int>(boundary_cycles)),
                                  ipow(static_cast<std::int64_t>(rad.size()) + 1,
                                       basis.rank - static_cast<int>(boundary_cycles)));
  return out;
}

// ---------------------------------------------------------------------------
// Monomial matrices

MonomialMatrix MonomialMatrix::identity(int n) {
  MonomialMatrix m;
  m.target.resize(n);
  std::iota(m.target.begin(), m.target.end(), 0);
  m.phase.assign(n, Phase());
  return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  // (this * o) e_j = this (o_j e_{t(j)}) = o_j this_{t(j)} e_{this.t(t(j))}
  MonomialMatrix out;
  out.target.resize(o.target.size());
  out.phase.resize(o.target.size());
  for (std::size_t j = 0; j < o.target.size(); ++j) {
    const int mid = o.target[j];
    out.target[j] = target[mid];
    out.phase[j] = o.phase[j] + phase[mid];
  }
  return out;
}

MonomialMatrix MonomialMatrix::scaled(const Phase& p) const {
  MonomialMatrix out = *this;
  if (!p.is_zero()) {
    for (auto& q : out.phase) q += p;
  }
  return out;
}

CyclotomicSum MonomialMatrix::trace() const {
  CyclotomicSum s;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (target[j] == static_cast<int>(j)) s.add(phase[j]);
  }
  return s;
}

Eigen::MatrixXcd MonomialMatrix::dense() const {
  const int n = dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) m(target[j], j) = phase[j].root_of_unity();
  return m;
}

UnitaryRep MonomialRep::unitary() const {
  UnitaryRep out;
  out.dimension = dimension_;
  out.central_character = k_;
  out.group_order = group_->homology_order();
  for (auto& g : group_->generators()) {
    out.matrices.push_back((*this)(g).dense());
    out.elements.push_back({std::move(g), Phase()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schroedinger model

namespace {

void require_closed(const HeisenbergGroup& group) {
  for (int p = 0; p < group.num_cycles(); ++p) {
    if (group.basis().is_boundary_class(p)) {
      throw Error(ErrorKind::NonclosedSurface,
                  "the Schroedinger model needs a closed surface; use block spaces for boundaries");
    }
  }
}

MonomialRep schroedinger_from_group(std::shared_ptr<const HeisenbergGroup> group, std::int64_t k) {
  require_closed(*group);
  const DiscriminantGroup& disc = group->coefficients();
  const int pairs = group->num_cycles() / 2;
  const int dim = static_cast<int>(ipow(disc.order(), pairs));

  // Basis vector j <-> u in A^pairs, mixed radix.
  std::vector<std::vector<GroupElement>> points(dim);
  for (int j = 0; j < dim; ++j) {
    std::int64_t idx = j;
    points[j].resize(pairs);
    for (int i = pairs; i-- > 0;) {
      points[j][i] = disc.element_at(idx % disc.order());
      idx /= disc.order();
    }
  }
  auto index_of = [&disc, pairs](const std::vector<GroupElement>& u) {
    std::int64_t idx = 0;
    for (int i = 0; i < pairs; ++i) idx = idx * disc.order() + disc.index_of(u[i]);
    return static_cast<int>(idx);
  };

  auto action = [group, k, points = std::move(points), index_of, pairs,
                 dim](const HomologyClass& x) {
    const DiscriminantGroup& disc = group->coefficients();
    MonomialMatrix m;
    m.target.resize(dim);
    m.phase.resize(dim);
    std::vector<GroupElement> moved(pairs);
    for (int j = 0; j < dim; ++j) {
      Rational s(0);
      for (int i = 0; i < pairs; ++i) {
        moved[i] = disc.add(points[j][i], x[2 * i + 1]);
        s += disc.bilinear(x[2 * i], moved[i]);
      }
      m.target[j] = index_of(moved);
      m.phase[j] = k * Phase(s);
    }
    return m;
  };
  return MonomialRep(std::move(group), dim, k, std::move(action));
}

}  // namespace

MonomialRep schroedinger_irrep(const DiscriminantGroup& disc, int genus, std::int64_t k) {
  return schroedinger_from_group(
      std::make_shared<const HeisenbergGroup>(HeisenbergGroup::closed(disc, genus)), k);
}

MonomialRep schroedinger_irrep(const DiscriminantGroup& disc, const Surface& s, std::int64_t k) {
  for (const auto& c : s.components()) {
    if (!c.boundaries.empty()) {
      throw Error(ErrorKind::NonclosedSurface,
                  "the Schroedinger model needs a closed surface; use block spaces for boundaries");
    }
  }
  return schroedinger_from_group(
      std::make_shared<const HeisenbergGroup>(intersection_matrix(s, disc)), k);
}

MonomialRep direct_sum(const MonomialRep& a, const MonomialRep& b) {
  const int da = a.dimension();
  auto action = [a, b, da](const HomologyClass& x) {
    const MonomialMatrix ma = a(x);
    const MonomialMatrix mb = b(x);
    MonomialMatrix m = ma;
    for (int j = 0; j < mb.dimension(); ++j) {
      m.target.push_back(mb.target[j] + da);
      m.phase.push_back(mb.phase[j]);
    }
    return m;
  };
  return MonomialRep(a.group_ptr(), da + b.dimension(), a.central_character(), std::move(action));
}

// ---------------------------------------------------------------------------
// Intertwiners

namespace {

// Union-find over unknowns M_u with M_u = exp(2 pi i pot[u]) M_root.
class PhaseUnionFind {
 public:
  explicit PhaseUnionFind(std::size_t n) : parent_(n), pot_(n), bad_(n, false) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, Phase> find(std::size_t u) {
    Phase acc;
    std::size_t r = u;
    while (parent_[r] != r) {
      acc += pot_[r];
      r = parent_[r];
    }
    // Path compression with accumulated potentials.
    Phase rest = acc;
    std::size_t v = u;
    while (parent_[v] != v) {
      const std::size_t next = parent_[v];
      const Phase here = pot_[v];
      parent_[v] = r;
      pot_[v] = rest;
      rest -= here;
      v = next;
    }
    return {r, acc};
  }

  // Impose M_u = exp(2 pi i w) M_v.
  void relate(std::size_t u, std::size_t v, const Phase& w) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      if (!(pu == w + pv)) bad_[ru] = true;
      return;
    }
    parent_[ru] = rv;
    pot_[ru] = w + pv - pu;
    bad_[rv] = bad_[rv] || bad_[ru];
  }

  bool bad(std::size_t root) const { return bad_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Phase> pot_;
  std::vector<bool> bad_;
};

}  // namespace

IntertwinerSpace intertwiners(const MonomialRep& from, const MonomialRep& to) {
  const int d1 = from.dimension();
  const int d2 = to.dimension();
  // Unknown M is d2 x d1, M(i, j) at i * d1 + j.
  PhaseUnionFind uf(static_cast<std::size_t>(d1) * static_cast<std::size_t>(d2));
  for (const auto& g : from.group().generators()) {
    const MonomialMatrix r1 = from(g);
    const MonomialMatrix r2 = to(g);
    std::vector<int> inv2(d2);
    for (int l = 0; l < d2; ++l) inv2[r2.target[l]] = l;
    // zeta1_j M(i, t1(j)) = zeta2_l M(l, j) with t2(l) = i.
    for (int i = 0; i < d2; ++i) {
      const int l = inv2[i];
      for (int j = 0; j < d1; ++j) {
        const std::size_t u = static_cast<std::size_t>(i) * d1 + r1.target[j];
        const std::size_t v = static_cast<std::size_t>(l) * d1 + j;
        uf.relate(u, v, r2.phase[l] - r1.phase[j]);
      }
    }
  }

  std::map<std::size_t, int> component;
  std::vector<std::pair<std::size_t, Phase>> where(static_cast<std::size_t>(d1) * d2);
  for (std::size_t u = 0; u < where.size(); ++u) {
    where[u] = uf.find(u);
    const auto root = where[u].first;
    if (!uf.bad(root) && !component.count(root)) {
      const int next = static_cast<int>(component.size());
      component[root] = next;
    }
  }
  IntertwinerSpace out;
  out.dimension = static_cast<int>(component.size());
  out.basis.assign(component.size(), Eigen::MatrixXcd::Zero(d2, d1));
  for (std::size_t u = 0; u < where.size(); ++u) {
    const auto it = component.find(where[u].first);
    if (it == component.end()) continue;
    out.basis[it->second](static_cast<Eigen::Index>(u / d1), static_cast<Eigen::Index>(u % d1)) =
        where[u].second.root_of_unity();
  }
  return out;
}

int commutant_dimension(const MonomialRep& rep) { return intertwiners(rep, rep).dimension; }

bool verify_irreducible(const MonomialRep& rep) { return commutant_dimension(rep) == 1; }

int numerical_commutant_dimension(const UnitaryRep& rep, double tol) {
  if (rep.group_order > 10000 || rep.dimension > 32) {
    throw Error(ErrorKind::GroupTooLarge,
                "dense commutant solve limited to |H| <= 10^4 and dimension <= 32");
  }
  const int d = rep.dimension;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd normal = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (const auto& m : rep.matrices) {
    // vec(M rho - rho M) = (rho^T (x) I - I (x) rho) vec(M), column-major vec.
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        k.block(a * d, b * d, d, d) = m(b, a) * id;
        if (a == b) k.block(a * d, b * d, d, d) -= m;
      }
    }
    normal += k.adjoint() * k;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(normal, Eigen::EigenvaluesOnly);
  int nullity = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i) < tol) ++nullity;
  }
  return nullity;
}

bool verify_irreducible(const UnitaryRep& rep, double tol) {
  return numerical_commutant_dimension(rep, tol) == 1;
}

double schur_norm(const MonomialRep& rep) {
  const auto& group = rep.group();
  double sum = 0.0;
  for (std::int64_t i = 0; i < group.homology_order(); ++i) {
    sum += std::norm(rep(group.class_at(i)).trace().to_complex());
  }
  return sum / static_cast<double>(group.homology_order());
}

// ---------------------------------------------------------------------------
// Isotropic subgroups and splittings

bool IsotropicSubgroup::contains(const HomologyClass& x, const HeisenbergGroup& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g.index_of(x));
}

std::vector<std::int64_t> subgroup_closure(const HeisenbergGroup& group,
                                           const std::vector<HomologyClass>& generators) {
  std::set<std::int64_t> seen{group.index_of(group.zero())};
  std::deque<HomologyClass> queue{group.zero()};
  while (!queue.empty()) {
    const HomologyClass b = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      HomologyClass next = group.add(b, g);
      if (seen.insert(group.index_of(next)).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

void require_isotropic(const HeisenbergGroup& group, const std::vector<HomologyClass>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (static_cast<int>(gens[i].size()) != group.num_cycles()) {
      throw Error(ErrorKind::DimensionMismatch, "subgroup generator has wrong number of cycles");
    }
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (group.intersection(gens[i], gens[j]).numerator() != 0) {
        throw Error(ErrorKind::NotIsotropic,
                    "intersection pairing does not vanish on the subgroup generators");
      }
    }
  }
}

// Propagate chi along right multiplication by generators and check every edge.
std::map<std::int64_t, Phase> propagate_splitting(const HeisenbergGroup& group,
                                                  const std::vector<HomologyClass>& gens,
                                                  const std::vector<Phase>& values,
                                                  std::int64_t k) {
  std::map<std::int64_t, Phase> chi{{group.index_of(group.zero()), Phase()}};
  std::deque<HomologyClass> queue{group.zero()};
  while (!queue.empty()) {
    const HomologyClass b = std::move(queue.front());
    queue.pop_front();
    const Phase cb = chi.at(group.index_of(b));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      HomologyClass next = group.add(b, gens[j]);
      const Phase value = cb + values[j] - k * Phase(group.polarized_cocycle(b, gens[j]));
      const auto idx = group.index_of(next);
      const auto it = chi.find(idx);
      if (it == chi.end()) {
        chi.emplace(idx, value);
        queue.push_back(std::move(next));
      } else if (!(it->second == value)) {
        throw Error(ErrorKind::NotASplitting,
                    "splitting values are inconsistent with the group relations");
      }
    }
  }
  return chi;
}

}  // namespace

IsotropicSubgroup make_isotropic(const HeisenbergGroup& group, std::vector<HomologyClass> generators,
                                 std::vector<Phase> chi_on_generators, std::int64_t k) {
  if (generators.size() != chi_on_generators.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one splitting value per generator is required");
  }
  require_isotropic(group, generators);
  IsotropicSubgroup out;
  out.chi_ = propagate_splitting(group, generators, chi_on_generators, k);
  for (const auto& [idx, p] : out.chi_) out.elements_.push_back(idx);
  out.generators_ = std::move(generators);
  out.k_ = k;
  return out;
}

IsotropicSubgroup make_isotropic(const HeisenbergGroup& group, std::vector<HomologyClass> generators,
                                 std::int64_t k) {
  require_isotropic(group, generators);
  // Extend the character one cyclic step at a time; the subgroup is abelian,
  // so the value on g only has to respect the relation o*g in the old subgroup.
  std::map<std::int64_t, Phase> chi{{group.index_of(group.zero()), Phase()}};
  std::vector<HomologyClass> members{group.zero()};
  std::vector<Phase> values;
  for (const auto& g : generators) {
    const auto gi = group.index_of(g);
    if (chi.count(gi)) {
      values.push_back(chi.at(gi));
      continue;
    }
    std::int64_t order = 1;
    HomologyClass multiple = g;
    Rational cocycle_sum(0);
    while (!chi.count(group.index_of(multiple))) {
      cocycle_sum += group.polarized_cocycle(multiple, g);
      multiple = group.add(multiple, g);
      ++order;
    }
    const Rational target = chi.at(group.index_of(multiple)).value();
    const Phase t(target / order + cocycle_sum * k / order);
    values.push_back(t);

    std::vector<HomologyClass> powers{group.zero()};
    std::vector<Phase> power_chi{Phase()};
    for (std::int64_t s = 1; s < order; ++s) {
      const HomologyClass& prev = powers.back();
      power_chi.push_back(power_chi.back() + t - k * Phase(group.polarized_cocycle(prev, g)));
      powers.push_back(group.add(prev, g));
    }
    std::vector<HomologyClass> grown;
    for (const auto& b : members) {
      const Phase cb = chi.at(group.index_of(b));
      for (std::int64_t s = 1; s < order; ++s) {
        HomologyClass e = group.add(b, powers[s]);
        chi[group.index_of(e)] =
            cb + power_chi[s] - k * Phase(group.polarized_cocycle(b, powers[s]));
        grown.push_back(std::move(e));
      }
    }
    members.insert(members.end(), std::make_move_iterator(grown.begin()),
                   std::make_move_iterator(grown.end()));
  }
  return make_isotropic(group, std::move(generators), std::move(values), k);
}

std::vector<std::vector<std::int64_t>> isotropic_subgroups(const HeisenbergGroup& group) {
  struct Node {
    std::vector<std::int64_t> elements;
    std::vector<HomologyClass> gens;
  };
  std::set<std::vector<std::int64_t>> seen;
  std::deque<Node> queue;
  Node trivial{{group.index_of(group.zero())}, {}};
  seen.insert(trivial.elements);
  queue.push_back(trivial);
  std::vector<std::vector<std::int64_t>> out;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (std::int64_t i = 0; i < group.homology_order(); ++i) {
      if (std::binary_search(node.elements.begin(), node.elements.end(), i)) continue;
      const HomologyClass x = group.class_at(i);
      bool isotropic = true;
      for (const auto& g : node.gens) {
        if (group.intersection(x, g).numerator() != 0) {
          isotropic = false;
          break;
        }
      }
      if (!isotropic) continue;
      auto gens = node.gens;
      gens.push_back(x);
      auto elements = subgroup_closure(group, gens);
      if (seen.insert(elements).second) queue.push_back({std::move(elements), std::move(gens)});
    }
    out.push_back(std::move(node.elements));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<HomologyClass> pair_generators(const HeisenbergGroup& group, bool a, bool b) {
  require_closed(group);
  std::vector<HomologyClass> out;
  const int k = group.coefficients().num_factors();
  for (int p = 0; p + 1 < group.num_cycles(); p += 2) {
    for (int i = 0; i < k; ++i) {
      HomologyClass e = group.zero();
      if (a) e[p][i] = 1;
      if (b) e[p + 1][i] = 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

std::vector<HomologyClass> a_cycle_generators(const HeisenbergGroup& group) {
  return pair_generators(group, true, false);
}
std::vector<HomologyClass> b_cycle_generators(const HeisenbergGroup& group) {
  return pair_generators(group, false, true);
}
std::vector<HomologyClass> diagonal_generators(const HeisenbergGroup& group) {
  return pair_generators(group, true, true);
}

// ---------------------------------------------------------------------------
// Induction

namespace {

MonomialRep::Action induced_action(std::shared_ptr<const HeisenbergGroup> group,
                                   const IsotropicSubgroup& sub,
                                   std::shared_ptr<const std::vector<std::int64_t>> reps,
                                   std::shared_ptr<const std::vector<int>> coset_of,
                                   std::shared_ptr<const std::vector<std::int64_t>> offset_of) {
  return [group, sub, reps, coset_of, offset_of](const HomologyClass& x) {
    const std::int64_t k = sub.central_character();
    const int dim = static_cast<int>(reps->size());
    MonomialMatrix m;
    m.target.resize(dim);
    m.phase.resize(dim);
    for (int i = 0; i < dim; ++i) {
      const HomologyClass r = group->class_at((*reps)[i]);
      const auto y = group->index_of(group->add(x, r));
      const int j = (*coset_of)[y];
      const auto b_idx = (*offset_of)[y];
      const HomologyClass rj = group->class_at((*reps)[j]);
      const HomologyClass b = group->class_at(b_idx);
      const Rational phi = group->polarized_cocycle(x, r) - group->polarized_cocycle(rj, b);
      m.target[i] = j;
      m.phase[i] = k * Phase(phi) + sub.chi(b_idx);
    }
    return m;
  };
}

}  // namespace

InducedRep::InducedRep(std::shared_ptr<const HeisenbergGroup> group, IsotropicSubgroup subgroup)
    : group_(std::move(group)), subgroup_(std::move(subgroup)),
      rep_(group_, 0, subgroup_.central_character(), {}) {
  const std::int64_t n = group_->homology_order();
  auto tables = std::make_shared<Tables>();
  tables->coset_of.assign(static_cast<std::size_t>(n), -1);
  tables->offset_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<HomologyClass> members;
  for (auto idx : subgroup_.elements()) members.push_back(group_->class_at(idx));
  for (std::int64_t idx = 0; idx < n; ++idx) {
    if (tables->coset_of[idx] >= 0) continue;
    const int c = static_cast<int>(tables->coset_reps.size());
    tables->coset_reps.push_back(idx);
    const HomologyClass r = group_->class_at(idx);
    for (std::size_t m = 0; m < members.size(); ++m) {
      const auto y = group_->index_of(group_->add(r, members[m]));
      tables->coset_of[y] = c;
      tables->offset_of[y] = subgroup_.elements()[m];
    }
  }
  for (std::int64_t idx = 0; idx < n; ++idx) {
    const HomologyClass y = group_->class_at(idx);
    bool ok = true;
    for (const auto& g : subgroup_.generators()) {
      if (group_->intersection(y, g).numerator() != 0) {
        ok = false;
        break;
      }
    }
    if (ok) annihilator_.push_back(idx);
  }
  tables_ = tables;
  auto reps = std::shared_ptr<const std::vector<std::int64_t>>(tables_, &tables_->coset_reps);
  auto coset_of = std::shared_ptr<const std::vector<int>>(tables_, &tables_->coset_of);
  auto offset_of = std::shared_ptr<const std::vector<std::int64_t>>(tables_, &tables_->offset_of);
  rep_ = MonomialRep(group_, static_cast<int>(tables_->coset_reps.size()),
                     subgroup_.central_character(),
                     induced_action(group_, subgroup_, reps, coset_of, offset_of));
}

MonomialMatrix InducedRep::right_action(const HomologyClass& y) const {
  if (!std::binary_search(annihilator_.begin(), annihilator_.end(), group_->index_of(y))) {
    throw Error(ErrorKind::NotIsotropic, "right action needs an element of the annihilator");
  }
  const std::int64_t k = subgroup_.central_character();
  const int dim = dimension();
  const HomologyClass minus_y = group_->negate(y);
  const Rational yy = group_->polarized_cocycle(y, y);
  MonomialMatrix m;
  m.target.resize(dim);
  m.phase.resize(dim);
  for (int i = 0; i < dim; ++i) {
    const HomologyClass r = group_->class_at(tables_->coset_reps[i]);
    const auto z = group_->index_of(group_->add(r, minus_y));
    const int j = tables_->coset_of[z];
    const auto b_idx = tables_->offset_of[z];
    const HomologyClass rj = group_->class_at(tables_->coset_reps[j]);
    const HomologyClass b = group_->class_at(b_idx);
    const Rational phi =
        yy - group_->polarized_cocycle(r, y) - group_->polarized_cocycle(rj, b);
    m.target[i] = j;
    m.phase[i] = k * Phase(phi) + subgroup_.chi(b_idx);
  }
  return m;
}

InducedRep induce_from_isotropic(std::shared_ptr<const HeisenbergGroup> group,
                                 IsotropicSubgroup subgroup) {
  return InducedRep(std::move(group), std::move(subgroup));
}

namespace {

// Monomial matrix with phases as numerators over one denominator.
struct IntegerMonomial {
  std::vector<int> target;
  std::vector<std::int64_t> numerator;
  std::int64_t denominator = 1;

  explicit IntegerMonomial(const MonomialMatrix& m) : target(m.target) {
    for (const auto& p : m.phase) denominator = std::lcm(denominator, p.value().denominator());
    numerator.reserve(m.phase.size());
    for (const auto& p : m.phase) {
      numerator.push_back(p.value().numerator() * (denominator / p.value().denominator()));
    }
  }
};

// tr(a b) without forming the product.
CyclotomicSum product_trace(const IntegerMonomial& a, const IntegerMonomial& b) {
  const std::int64_t n = std::lcm(a.denominator, b.denominator);
  const std::int64_t sa = n / a.denominator, sb = n / b.denominator;
  std::vector<std::int64_t> counts;
  for (std::size_t j = 0; j < b.target.size(); ++j) {
    const auto mid = static_cast<std::size_t>(b.target[j]);
    if (a.target[mid] != static_cast<int>(j)) continue;
    if (counts.empty()) counts.assign(static_cast<std::size_t>(n), 0);
    ++counts[static_cast<std::size_t>((b.numerator[j] * sb + a.numerator[mid] * sa) % n)];
  }
  CyclotomicSum s;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] != 0) s.add(Phase(static_cast<std::int64_t>(r), n), counts[r]);
  }
  return s;
}

}  // namespace

DecompositionReport verify_induced_decomposition(const InducedRep& induced,
                                                 const MonomialRep& irrep) {
  const HeisenbergGroup& group = irrep.group();
  const std::int64_t n = group.homology_order();
  DecompositionReport report;
  report.multiplicity = induced.dimension() / irrep.dimension();
  if (report.multiplicity * irrep.dimension() != induced.dimension()) {
    report.equal = false;
    return report;
  }

  // Filled on demand: in coset mode only classes of the annihilator occur.
  std::vector<std::optional<CyclotomicSum>> irrep_char(static_cast<std::size_t>(n));
  std::vector<std::optional<IntegerMonomial>> left(static_cast<std::size_t>(n));
  auto left_at = [&](std::int64_t i) -> const IntegerMonomial& {
    auto& slot = left[static_cast<std::size_t>(i)];
    if (!slot) slot.emplace(induced.rep()(group.class_at(i)));
    return *slot;
  };
  auto char_at = [&](std::int64_t i) -> const CyclotomicSum& {
    auto& slot = irrep_char[static_cast<std::size_t>(i)];
    if (!slot) slot = irrep(group.class_at(i)).trace();
    return *slot;
  };

  const auto& sub = induced.subgroup();
  const bool exhaustive =
      static_cast<double>(n) * static_cast<double>(induced.annihilator().size()) <= 1 << 20;
  std::vector<HomologyClass> members;
  for (auto idx : sub.elements()) members.push_back(group.class_at(idx));

  for (auto y_idx : induced.annihilator()) {
    const HomologyClass y = group.class_at(y_idx);
    const IntegerMonomial right(induced.right_action(y));
    CyclotomicSum chi_m;
    if (std::binary_search(sub.elements().begin(), sub.elements().end(), y_idx)) {
      chi_m.add(-sub.chi(y_idx), report.multiplicity);
    }
    auto check = [&](std::int64_t x_idx) {
      const CyclotomicSum lhs = product_trace(left_at(x_idx), right);
      const CyclotomicSum rhs = chi_m.is_zero() ? CyclotomicSum() : char_at(x_idx) * chi_m;
      ++report.pairs_checked;
      if (!(lhs == rhs)) report.equal = false;
    };
    if (exhaustive) {
      for (std::int64_t x_idx = 0; x_idx < n; ++x_idx) check(x_idx);
    } else {
      // Off the coset y + B the product has no fixed points; only these pairs
      // carry a nonzero trace.
      for (const auto& b : members) check(group.index_of(group.add(y, b)));
    }
  }
  return report;
}

}  // namespace lcft
