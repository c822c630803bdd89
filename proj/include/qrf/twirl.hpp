// Copyright 2026 The qrf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"

namespace qrf {

/// Which symmetrization a caller wants applied.
///
/// The incoherent twirl is the group-average channel
///   G(A) = (1/N) sum_g U_g A U_g^dagger,
/// which kills coherence *between* charge sectors but keeps every sector's
/// interior intact.  The coherent twirl is the two-sided projection
///   A -> Pi_k A Pi_k
/// onto a single sector, which also discards the other sectors entirely --
/// it removes strictly more information than the incoherent twirl (at
/// N = 2 with three registers their images have dimension 16 vs 32).
struct TwirlKind {
  enum class Kind { incoherent, coherent };

  Kind kind;
  int sector;  // meaningful only for coherent

  static TwirlKind make_incoherent() { return {Kind::incoherent, 0}; }
  static TwirlKind make_coherent(int k) { return {Kind::coherent, k}; }
};

/// Group-average channel G(A) = (1/N) sum_g U_g A U_g^dagger.
inline Operator incoherent_twirl(const Operator& op, const CyclicGroup& group) {
  detail::require_homogeneous(op.layout(), group, "incoherent_twirl");
  Mat out = Mat::Zero(op.dim(), op.dim());
  for (int g = 0; g < group.order(); ++g) {
    const Operator u = global_unitary(GroupElement(group, g), op.layout());
    out += u.matrix() * op.matrix() * u.matrix().adjoint();
  }
  return Operator(op.layout(), out / static_cast<double>(group.order()));
}

inline DensityOperator incoherent_twirl(const DensityOperator& rho,
                                        const CyclicGroup& group) {
  const Operator out = incoherent_twirl(rho.as_operator(), group);
  return DensityOperator(out.layout(), out.matrix());
}

/// Coherent twirl of a vector: Pi_k psi, deliberately not renormalized (the
/// lost norm is the weight the state had outside sector k).
inline StateVector coherent_twirl(const StateVector& psi,
                                  const ChargeSector& sector) {
  return charge_projector(sector, psi.layout()).apply(psi);
}

/// Coherent twirl of an operator: Pi_k A Pi_k.
inline Operator coherent_twirl(const Operator& op, const ChargeSector& sector) {
  const Operator pi = charge_projector(sector, op.layout());
  return pi * op * pi;
}

inline Operator apply_twirl(const Operator& op, const CyclicGroup& group,
                            const TwirlKind& kind) {
  if (kind.kind == TwirlKind::Kind::incoherent) {
    return incoherent_twirl(op, group);
  }
  return coherent_twirl(op, ChargeSector(group, kind.sector));
}

struct InvarianceCheck {
  bool invariant;
  double residual;  // max_g || U_g rho U_g^dagger - rho ||_F
};

/// Does the collective shift fix this density operator?
inline InvarianceCheck is_invariant_state(
    const DensityOperator& rho, const CyclicGroup& group,
    double tolerance = kInvarianceTolerance) {
  const double residual = invariance_residual(rho, group);
  return {residual <= tolerance, residual};
}

/// Does the collective shift fix this vector exactly (not merely up to
/// phase)?  True precisely for sector-0 vectors.
inline InvarianceCheck is_invariant_vector(
    const StateVector& psi, const CyclicGroup& group,
    double tolerance = kInvarianceTolerance) {
  detail::require_homogeneous(psi.layout(), group, "is_invariant_vector");
  double worst = 0.0;
  for (int g = 1; g < group.order(); ++g) {
    const Operator u = global_unitary(GroupElement(group, g), psi.layout());
    worst = std::max(worst, (u.apply(psi) - psi).norm());
  }
  return {worst <= tolerance, worst};
}

}  // namespace qrf
