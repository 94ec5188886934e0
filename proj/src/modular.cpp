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

#include "lattice_cft/modular.hpp"

#include <algorithm>
#include <cmath>

namespace lcft {

std::int64_t block_dimension(const Surface& s, const BlockLabel& labels,
                             const DiscriminantGroup& disc) {
  const auto deltas = delta_obstruction(s, labels, disc);
  std::int64_t dim = 1;
  for (int c = 0; c < s.num_components(); ++c) {
    if (!disc.is_zero(deltas[c])) return 0;
    dim = checked_mul(dim, ipow(disc.order(), s.components()[c].genus));
  }
  return dim;
}

BlockSpace block_space(const Surface& s, const BlockLabel& labels, const DiscriminantGroup& disc) {
  return {s, labels, block_dimension(s, labels, disc)};
}

TensorDualityReport verify_tensor_duality(const Surface& s1, const BlockLabel& l1,
                                          const Surface& s2, const BlockLabel& l2,
                                          const DiscriminantGroup& disc) {
  TensorDualityReport r;
  BlockLabel both = l1;
  both.insert(l2.begin(), l2.end());
  r.union_dimension = block_dimension(s1.disjoint_union(s2), both, disc);
  r.product = checked_mul(block_dimension(s1, l1, disc), block_dimension(s2, l2, disc));
  BlockLabel negated;
  for (const auto& [id, a] : l1) negated[id] = disc.negate(disc.reduce(a));
  r.reversed_dimension = block_dimension(s1.reversed(), negated, disc);
  r.original_dimension = block_dimension(s1, l1, disc);
  r.equal = r.union_dimension == r.product && r.reversed_dimension == r.original_dimension;
  return r;
}

namespace {

using ComponentKey = std::pair<int, std::vector<std::pair<std::string, int>>>;

std::vector<ComponentKey> surface_key(const Surface& s) {
  std::vector<ComponentKey> out;
  for (const auto& c : s.components()) {
    ComponentKey k{c.genus, {}};
    for (const auto& b : c.boundaries) k.second.emplace_back(b.id, sign(b.orientation));
    std::sort(k.second.begin(), k.second.end());
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FactorizationReport verify_factorization(const Surface& s, const Split& split,
                                         const BlockLabel& labels, const DiscriminantGroup& disc) {
  Surface glued;
  try {
    glued = glue(split.pieces, split.matching);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidSplit, std::string("gluing failed: ") + e.what());
  }
  if (surface_key(glued) != surface_key(s)) {
    throw Error(ErrorKind::InvalidSplit, "glued pieces do not reproduce the surface");
  }

  FactorizationReport r;
  r.lhs = block_dimension(s, labels, disc);

  const int m = static_cast<int>(split.matching.size());
  const std::int64_t terms = ipow(disc.order(), m);
  BlockLabel full = labels;
  std::vector<GroupElement> lambda(static_cast<std::size_t>(m));
  for (std::int64_t t = 0; t < terms; ++t) {
    std::int64_t idx = t;
    for (int i = m; i-- > 0;) {
      lambda[i] = disc.element_at(idx % disc.order());
      idx /= disc.order();
    }
    for (int i = 0; i < m; ++i) {
      full[split.matching[i].first] = lambda[i];
      full[split.matching[i].second] = lambda[i];
    }
    const std::int64_t v = block_dimension(split.pieces, full, disc);
    if (v != 0) {
      r.rhs = checked_add(r.rhs, v);
      r.terms.push_back({lambda, v});
    }
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

Eigen::MatrixXcd s_matrix(const DiscriminantGroup& disc) {
  const auto elems = disc.elements();
  const auto n = static_cast<Eigen::Index>(elems.size());
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd s(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      s(a, b) = norm * (-Phase(disc.bilinear(elems[a], elems[b]))).root_of_unity();
    }
  }
  return s;
}

Eigen::VectorXcd t_matrix_unframed(const DiscriminantGroup& disc) {
  const auto elems = disc.elements();
  Eigen::VectorXcd t(static_cast<Eigen::Index>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    t(static_cast<Eigen::Index>(a)) = Phase(disc.quadratic(elems[a]) / 2).root_of_unity();
  }
  return t;
}

Eigen::VectorXcd t_matrix(const DiscriminantGroup& disc) {
  const Complex framing = Phase(-signature_mod8(disc), 24).root_of_unity();
  return t_matrix_unframed(disc) * framing;
}

Eigen::MatrixXcd charge_conjugation(const DiscriminantGroup& disc) {
  const auto n = static_cast<Eigen::Index>(disc.order());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    c(a, disc.index_of(disc.negate(disc.element_at(a)))) = 1.0;
  }
  return c;
}

double ModularRelations::max() const {
  return std::max({unitarity, symmetry, charge_conjugation, s_fourth, st_cubed, st_cubed_framed});
}

ModularData modular_data(const DiscriminantGroup& disc, std::int64_t level, int rank) {
  ModularData d;
  d.S = s_matrix(disc);
  d.T = t_matrix(disc);
  d.T_unframed = t_matrix_unframed(disc);
  d.signature_mod8 = signature_mod8(disc);
  d.central_charge_exponent = Rational(checked_mul(level, rank));
  return d;
}

ModularRelations modular_relations(const ModularData& data, const DiscriminantGroup& disc) {
  const Eigen::MatrixXcd& s = data.S;
  const auto n = s.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd s2 = s * s;
  auto cube = [](const Eigen::MatrixXcd& m) -> Eigen::MatrixXcd { return m * m * m; };
  const Eigen::MatrixXcd st0 = s * data.T_unframed.asDiagonal();
  const Eigen::MatrixXcd st = s * data.T.asDiagonal();
  const Complex anomaly = Phase(data.signature_mod8, 8).root_of_unity();

  ModularRelations r;
  r.unitarity = (s * s.adjoint() - id).cwiseAbs().maxCoeff();
  r.symmetry = (s - s.transpose()).cwiseAbs().maxCoeff();
  r.charge_conjugation = (s2 - charge_conjugation(disc)).cwiseAbs().maxCoeff();
  r.s_fourth = (s2 * s2 - id).cwiseAbs().maxCoeff();
  r.st_cubed = (cube(st0) - anomaly * s2).cwiseAbs().maxCoeff();
  r.st_cubed_framed = (cube(st) - s2).cwiseAbs().maxCoeff();
  return r;
}

Genus1Rep genus1_mcg_rep(const DiscriminantGroup& disc) {
  const ModularData d = modular_data(disc, 1, 0);
  return {d.S, d.T.asDiagonal(), modular_relations(d, disc)};
}

FusionRules::FusionRules(const DiscriminantGroup& disc) : n_(disc.order()) {
  table_.assign(static_cast<std::size_t>(n_ * n_ * n_), 0);
  const Surface pants = Surface::connected(
      0, {{"a", Orientation::In}, {"b", Orientation::In}, {"c", Orientation::Out}});
  for (std::int64_t a = 0; a < n_; ++a) {
    for (std::int64_t b = 0; b < n_; ++b) {
      for (std::int64_t c = 0; c < n_; ++c) {
        const BlockLabel l{{"a", disc.element_at(a)},
                           {"b", disc.element_at(b)},
                           {"c", disc.element_at(c)}};
        table_[static_cast<std::size_t>((a * n_ + b) * n_ + c)] =
            static_cast<int>(block_dimension(pants, l, disc));
      }
    }
  }
}

bool FusionRules::associative() const {
  for (std::int64_t a = 0; a < n_; ++a) {
    for (std::int64_t b = 0; b < n_; ++b) {
      for (std::int64_t c = 0; c < n_; ++c) {
        for (std::int64_t d = 0; d < n_; ++d) {
          std::int64_t lhs = 0;
          std::int64_t rhs = 0;
          for (std::int64_t e = 0; e < n_; ++e) {
            lhs += (*this)(a, b, e) * (*this)(e, c, d);
            rhs += (*this)(b, c, e) * (*this)(a, e, d);
          }
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

FusionRules fusion_rules(const DiscriminantGroup& disc) { return FusionRules(disc); }

VerlindeReport verlinde_check(const Surface& s, const BlockLabel& labels,
                              const DiscriminantGroup& disc) {
  VerlindeReport r;
  r.block_dimension = block_dimension(s, labels, disc);
  const Eigen::MatrixXcd sm = s_matrix(disc);
  const auto n = sm.rows();

  std::int64_t total = 1;
  for (const auto& comp : s.components()) {
    std::vector<Eigen::Index> rows;
    for (const auto& b : comp.boundaries) {
      const GroupElement l = disc.reduce(labels.at(b.id));
      rows.push_back(disc.index_of(b.orientation == Orientation::Out ? l : disc.negate(l)));
    }
    const int power = 2 - 2 * comp.genus - static_cast<int>(rows.size());
    Complex sum{0.0, 0.0};
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex term = std::pow(sm(0, j), power);
      for (auto row : rows) term *= sm(row, j);
      sum += term;
    }
    const double rounded = std::round(sum.real());
    const double dev = std::abs(sum - Complex(rounded, 0.0));
    r.max_deviation = std::max(r.max_deviation, dev);
    if (dev > 1e-4) r.guard_tripped = true;
    total = checked_mul(total, static_cast<std::int64_t>(rounded));
  }
  r.verlinde = total;
  r.equal = !r.guard_tripped && r.verlinde == r.block_dimension;
  return r;
}

}  // namespace lcft
