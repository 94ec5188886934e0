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

#ifndef LATTICE_CFT_MODULAR_HPP_
#define LATTICE_CFT_MODULAR_HPP_

#include <vector>

#include <Eigen/Dense>

#include "lattice_cft/surface.hpp"

namespace lcft {

/// dim E(S, labels): per component |A|^g when the labels balance, else 0.
/// Throws Error{MissingLabel, Overflow}.
std::int64_t block_dimension(const Surface& s, const BlockLabel& labels,
                             const DiscriminantGroup& disc);

struct BlockSpace {
  Surface surface;
  BlockLabel labels;
  std::int64_t dimension = 0;
};

BlockSpace block_space(const Surface& s, const BlockLabel& labels, const DiscriminantGroup& disc);

struct TensorDualityReport {
  std::int64_t union_dimension = 0;
  std::int64_t product = 0;
  std::int64_t reversed_dimension = 0;  // first surface, reversed, labels negated
  std::int64_t original_dimension = 0;
  bool equal = false;
};

/// Labels of the two surfaces must use distinct circle ids.
TensorDualityReport verify_tensor_duality(const Surface& s1, const BlockLabel& l1,
                                          const Surface& s2, const BlockLabel& l2,
                                          const DiscriminantGroup& disc);

/// Pieces (possibly disconnected) and the pairs of their circles to glue.
struct Split {
  Surface pieces;
  Matching matching;
};

struct FactorizationTerm {
  std::vector<GroupElement> glued_labels;
  std::int64_t value = 0;
};

struct FactorizationReport {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
  /// Nonzero summands only.
  std::vector<FactorizationTerm> terms;
};

/// lhs = dim E(s, labels); rhs sums dim E(pieces, labels + lambda on both
/// sides of each glued pair) over every lambda in A^{#pairs}.
/// Throws Error{InvalidSplit} when gluing the pieces does not give s.
FactorizationReport verify_factorization(const Surface& s, const Split& split,
                                         const BlockLabel& labels, const DiscriminantGroup& disc);

/// S_ab = |A|^{-1/2} exp(-2 pi i b(a, b)).
Eigen::MatrixXcd s_matrix(const DiscriminantGroup& disc);
/// Diagonal of T: exp(pi i q(a)) exp(-2 pi i sigma / 24).
Eigen::VectorXcd t_matrix(const DiscriminantGroup& disc);
/// Diagonal exp(pi i q(a)) without the framing factor.
Eigen::VectorXcd t_matrix_unframed(const DiscriminantGroup& disc);

/// Permutation a -> -a.
Eigen::MatrixXcd charge_conjugation(const DiscriminantGroup& disc);

struct ModularRelations {
  double unitarity = 0.0;        // |S S^* - 1|
  double symmetry = 0.0;         // |S - S^T|
  double charge_conjugation = 0.0;  // |S^2 - C|
  double s_fourth = 0.0;         // |S^4 - 1|
  /// |(S T0)^3 - exp(2 pi i sigma/8) S^2| with T0 unframed.
  double st_cubed = 0.0;
  /// |(S T)^3 - S^2| with the framed T.
  double st_cubed_framed = 0.0;

  double max() const;
};

struct ModularData {
  Eigen::MatrixXcd S;
  Eigen::VectorXcd T;
  Eigen::VectorXcd T_unframed;
  int signature_mod8 = 0;
  /// level * rank, kept as metadata only.
  Rational central_charge_exponent{0};
};

ModularData modular_data(const DiscriminantGroup& disc, std::int64_t level, int rank);
ModularRelations modular_relations(const ModularData& data, const DiscriminantGroup& disc);

/// Genus-one mapping class group action on C^A with its relation residuals.
struct Genus1Rep {
  Eigen::MatrixXcd S;
  Eigen::MatrixXcd T;
  ModularRelations relations;
};

Genus1Rep genus1_mcg_rep(const DiscriminantGroup& disc);

/// N_ab^c from pair-of-pants block dimensions, indexed by group element index.
class FusionRules {
 public:
  explicit FusionRules(const DiscriminantGroup& disc);
  std::int64_t size() const noexcept { return n_; }
  int operator()(std::int64_t a, std::int64_t b, std::int64_t c) const {
    return table_[static_cast<std::size_t>((a * n_ + b) * n_ + c)];
  }
  bool associative() const;

 private:
  std::int64_t n_;
  std::vector<int> table_;
};

FusionRules fusion_rules(const DiscriminantGroup& disc);

struct VerlindeReport {
  std::int64_t verlinde = 0;
  std::int64_t block_dimension = 0;
  double max_deviation = 0.0;
  /// Set when some component sum is further than 1e-4 from an integer.
  bool guard_tripped = false;
  bool equal = false;
};

/// Sum over j of S_0j^{2-2g-n} prod_i S_{lambda_i j} per component, incoming
/// labels negated; components multiply.
VerlindeReport verlinde_check(const Surface& s, const BlockLabel& labels,
                              const DiscriminantGroup& disc);

}  // namespace lcft

#endif  // LATTICE_CFT_MODULAR_HPP_
