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

#include <cmath>
#include <numbers>
#include <vector>

#include "qrf/errors.hpp"
#include "qrf/linalg.hpp"

namespace qrf {

/// The cyclic group Z_N acting on every register of a homogeneous layout
/// by simultaneous modular shifts:
///
///   U_g = (X^g) (x) ... (x) (X^g),   X |j> = |j+1 mod N>.
///
/// This is a diagonal (collective) action, so the representation splits
/// into N charge sectors: sector k collects the vectors v with
/// U_g v = omega^{k g} v, where omega = exp(2 pi i / N).
class CyclicGroup {
 public:
  explicit CyclicGroup(int order) : order_(order) {
    if (order < 2) {
      throw std::invalid_argument("CyclicGroup: order must be >= 2");
    }
  }

  int order() const { return order_; }

  /// omega^m = exp(2 pi i m / N).
  cplx omega(long long m) const {
    const long long r = ((m % order_) + order_) % order_;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                               static_cast<double>(order_));
  }

  bool operator==(const CyclicGroup& other) const {
    return order_ == other.order_;
  }
  bool operator!=(const CyclicGroup& other) const { return !(*this == other); }

 private:
  int order_;
};

/// Element of Z_N, stored reduced mod N.
class GroupElement {
 public:
  GroupElement(const CyclicGroup& group, int value)
      : group_(group), value_(((value % group.order()) + group.order()) %
                              group.order()) {}

  const CyclicGroup& group() const { return group_; }
  int value() const { return value_; }

  GroupElement inverse() const { return GroupElement(group_, -value_); }
  GroupElement operator+(const GroupElement& other) const {
    if (group_ != other.group_) {
      throw std::invalid_argument("GroupElement: group orders differ");
    }
    return GroupElement(group_, value_ + other.value_);
  }

 private:
  CyclicGroup group_;
  int value_;
};

/// Charge-sector label k in {0, ..., N-1}, stored reduced mod N.
class ChargeSector {
 public:
  ChargeSector(const CyclicGroup& group, int k)
      : group_(group),
        k_(((k % group.order()) + group.order()) % group.order()) {}

  const CyclicGroup& group() const { return group_; }
  int k() const { return k_; }

 private:
  CyclicGroup group_;
  int k_;
};

/// Single-register shift matrix X with X|j> = |j+1 mod N>; for N = 2 this
/// is the Pauli X matrix.
inline Operator shift_operator(const CyclicGroup& group) {
  const int n = group.order();
  Mat x = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) x((j + 1) % n, j) = 1.0;
  return Operator(RegisterLayout({n}), std::move(x));
}

namespace detail {

/// Basis index obtained by adding g to every digit of `index`, mod N.
inline int globally_shifted_index(const RegisterLayout& layout, int index,
                                  int g) {
  int out = index;
  for (int r = 0; r < layout.registers(); ++r) {
    const int d = layout.digit(index, r);
    out = layout.replace_digit(out, r, (d + g) % layout.local_dim(r));
  }
  return out;
}

inline void require_homogeneous(const RegisterLayout& layout,
                                const CyclicGroup& group,
                                const char* where) {
  if (layout.registers() == 0) return;  // scalar space: trivial action
  if (!layout.is_homogeneous() || layout.homogeneous_dim() != group.order()) {
    throw std::invalid_argument(
        std::string(where) +
        ": layout registers must all have local dimension N = group order");
  }
}

}  // namespace detail

/// The collective shift U_g = (X^g)^(x registers) on a homogeneous layout.
/// On the empty (scalar) layout every U_g is the identity.
inline Operator global_unitary(const GroupElement& g,
                               const RegisterLayout& layout) {
  detail::require_homogeneous(layout, g.group(), "global_unitary");
  Mat u = Mat::Zero(layout.total_dim(), layout.total_dim());
  for (int col = 0; col < layout.total_dim(); ++col) {
    u(detail::globally_shifted_index(layout, col, g.value()), col) = 1.0;
  }
  return Operator(layout, std::move(u));
}

/// Projector onto charge sector k:
///
///   Pi_k = (1/N) sum_g omega^{-k g} U_g,
///
/// satisfying Pi_k Pi_l = delta_{kl} Pi_k, sum_k Pi_k = I, and
/// U_g Pi_k = Pi_k U_g = omega^{k g} Pi_k.
inline Operator charge_projector(const ChargeSector& sector,
                                 const RegisterLayout& layout) {
  const CyclicGroup& group = sector.group();
  detail::require_homogeneous(layout, group, "charge_projector");
  const int n = group.order();
  Mat p = Mat::Zero(layout.total_dim(), layout.total_dim());
  for (int g = 0; g < n; ++g) {
    const cplx phase = group.omega(-static_cast<long long>(sector.k()) * g) /
                       static_cast<double>(n);
    for (int col = 0; col < layout.total_dim(); ++col) {
      p(detail::globally_shifted_index(layout, col, g), col) += phase;
    }
  }
  return Operator(layout, std::move(p));
}

/// Largest deviation max_g || U_g rho U_g^dagger - rho ||_F from collective
/// shift invariance.
inline double invariance_residual(const DensityOperator& rho,
                                  const CyclicGroup& group) {
  detail::require_homogeneous(rho.layout(), group, "invariance_residual");
  double worst = 0.0;
  for (int g = 1; g < group.order(); ++g) {
    const Operator u = global_unitary(GroupElement(group, g), rho.layout());
    worst = std::max(worst, (u.matrix() * rho.matrix() * u.matrix().adjoint() -
                             rho.matrix())
                                .norm());
  }
  return worst;
}

/// Charge distribution p_k = Tr(Pi_k rho) of an invariant density operator.
/// Requires invariance within `tolerance`, because for non-invariant states
/// the numbers Tr(Pi_k rho) no longer describe the state: callers must
/// twirl first.
inline std::vector<double> charge_weights(
    const DensityOperator& rho, const CyclicGroup& group,
    double tolerance = kInvarianceTolerance) {
  const double residual = invariance_residual(rho, group);
  if (residual > tolerance) {
    throw invariance_error(
        "charge_weights: density operator is not shift-invariant (residual " +
        std::to_string(residual) + "); twirl the state first");
  }
  std::vector<double> weights(group.order());
  for (int k = 0; k < group.order(); ++k) {
    const Operator pi = charge_projector(ChargeSector(group, k), rho.layout());
    weights[k] = expectation(rho, pi).real();
  }
  return weights;
}

/// Sector weights || Pi_k psi ||^2 of a pure state.
inline std::vector<double> sector_weights(const StateVector& psi,
                                          const CyclicGroup& group) {
  std::vector<double> weights(group.order());
  for (int k = 0; k < group.order(); ++k) {
    const Operator pi = charge_projector(ChargeSector(group, k), psi.layout());
    weights[k] = std::max(0.0, inner(psi, pi.apply(psi)).real());
  }
  return weights;
}

/// Normalized character vector
///
///   |chi_k> = (1/sqrt N) sum_j omega^{-k j} |j>,
///
/// the eigenvector of the single-register shift with eigenvalue omega^k:
/// X |chi_k> = omega^k |chi_k>.  For N = 2 these are |+> and |->.
inline StateVector fourier_vector(const ChargeSector& sector) {
  const CyclicGroup& group = sector.group();
  const int n = group.order();
  Vec v(n);
  for (int j = 0; j < n; ++j) {
    v(j) = group.omega(-static_cast<long long>(sector.k()) * j) /
           std::sqrt(static_cast<double>(n));
  }
  return StateVector(RegisterLayout({n}), std::move(v));
}

}  // namespace qrf
