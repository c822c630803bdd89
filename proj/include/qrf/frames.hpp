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

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qrf/errors.hpp"
#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/twirl.hpp"

namespace qrf {

/// A reference-frame register: which register serves as the frame, plus the
/// local "zero orientation" seed vector.  The shift orbit of the seed,
/// |g>_f = X^g |seed>, must form an orthonormal basis (an ideal frame);
/// this is validated at construction.  The default seed |0> gives the
/// computational coherent system.
class FrameSpec {
 public:
  FrameSpec(int register_index, Vec seed,
            double tolerance = kDefaultTolerance)
      : register_index_(register_index), seed_(std::move(seed)) {
    if (register_index < 0) {
      throw std::out_of_range("FrameSpec: negative register index");
    }
    const int n = static_cast<int>(seed_.size());
    if (n < 2) {
      throw std::invalid_argument("FrameSpec: seed dimension must be >= 2");
    }
    Mat orbit(n, n);
    for (int g = 0; g < n; ++g) orbit.col(g) = coherent_vector(g);
    if ((orbit.adjoint() * orbit - Mat::Identity(n, n)).norm() > tolerance) {
      throw std::invalid_argument(
          "FrameSpec: the shift orbit of the seed is not an orthonormal "
          "basis (not an ideal frame)");
    }
  }

  /// Frame seeded at the computational |0> of a register.
  static FrameSpec computational(int register_index, int local_dim) {
    Vec seed = Vec::Zero(local_dim);
    seed(0) = 1.0;
    return FrameSpec(register_index, std::move(seed));
  }

  int register_index() const { return register_index_; }
  const Vec& seed() const { return seed_; }
  int local_dim() const { return static_cast<int>(seed_.size()); }

  /// |g>_f = X^g |seed>, the frame oriented at group element g.
  Vec coherent_vector(int g) const {
    const int n = local_dim();
    const int shift = ((g % n) + n) % n;
    Vec out(n);
    for (int j = 0; j < n; ++j) out((j + shift) % n) = seed_(j);
    return out;
  }

  bool is_computational(double tolerance = kDefaultTolerance) const {
    Vec zero = Vec::Zero(local_dim());
    zero(0) = 1.0;
    return (seed_ - zero).norm() <= tolerance;
  }

 private:
  int register_index_;
  Vec seed_;
};

/// A state as described relative to one frame register: the frame that was
/// contracted away, the layout of the original composite system, and the
/// body living on the remaining registers (a vector for pure relative
/// states, a density operator otherwise).
class RelativeState {
 public:
  RelativeState(FrameSpec frame, RegisterLayout full_layout, StateVector body)
      : frame_(std::move(frame)),
        full_layout_(std::move(full_layout)),
        body_(std::move(body)) {
    validate();
  }
  RelativeState(FrameSpec frame, RegisterLayout full_layout,
                DensityOperator body)
      : frame_(std::move(frame)),
        full_layout_(std::move(full_layout)),
        body_(std::move(body)) {
    validate();
  }

  const FrameSpec& frame() const { return frame_; }
  const RegisterLayout& full_layout() const { return full_layout_; }
  RegisterLayout reduced_layout() const {
    return full_layout_.without(frame_.register_index());
  }

  bool is_pure() const { return std::holds_alternative<StateVector>(body_); }

  const StateVector& vector_body() const {
    if (!is_pure()) {
      throw std::invalid_argument(
          "RelativeState: body is a density operator, not a vector");
    }
    return std::get<StateVector>(body_);
  }

  /// The body as a density operator (pure bodies are promoted).
  DensityOperator density_body() const {
    if (is_pure()) return DensityOperator::from_pure(vector_body());
    return std::get<DensityOperator>(body_);
  }

  /// Tr(body^2); reported rather than assumed -- reduction of a mixed
  /// invariant state generally yields a mixed body.
  double purity() const { return is_pure() ? 1.0 : density_body().purity(); }

 private:
  void validate() const {
    const int f = frame_.register_index();
    if (f >= full_layout_.registers()) {
      throw std::out_of_range(
          "RelativeState: frame register outside the layout");
    }
    if (full_layout_.registers() < 2) {
      throw std::invalid_argument(
          "RelativeState: a frame needs at least one system register "
          "besides itself");
    }
    if (full_layout_.local_dim(f) != frame_.local_dim()) {
      throw std::invalid_argument(
          "RelativeState: frame seed dimension does not match its register");
    }
    const RegisterLayout reduced = full_layout_.without(f);
    const RegisterLayout& body_layout =
        is_pure() ? std::get<StateVector>(body_).layout()
                  : std::get<DensityOperator>(body_).layout();
    if (body_layout != reduced) {
      throw std::invalid_argument(
          "RelativeState: body layout is not the full layout minus the "
          "frame register");
    }
  }

  FrameSpec frame_;
  RegisterLayout full_layout_;
  std::variant<StateVector, DensityOperator> body_;
};

/// Block observable conditioned on a second frame register inside an
/// already-relative description: F = sum_i |i><i|_inner (x) C_i, with one
/// block per orientation of the inner frame.
struct FramedObservable {
  int inner_register;            // position within the (reduced) layout
  std::vector<Operator> blocks;  // one block per inner-frame orientation
};

/// Assemble the block observable into a plain operator.
inline Operator framed_to_operator(const FramedObservable& f) {
  if (f.blocks.empty()) {
    throw std::invalid_argument("framed_to_operator: no blocks given");
  }
  const int n = static_cast<int>(f.blocks.size());
  const RegisterLayout rest = f.blocks[0].layout();
  const RegisterLayout layout = rest.with_inserted(f.inner_register, n);
  if (layout.local_dim(f.inner_register) != n) {
    throw std::invalid_argument(
        "framed_to_operator: block count must equal the inner register "
        "dimension");
  }
  Operator out = Operator::zero(layout);
  for (int i = 0; i < n; ++i) {
    if (f.blocks[i].layout() != rest) {
      throw std::invalid_argument(
          "framed_to_operator: blocks live on different layouts");
    }
    Mat proj = Mat::Zero(n, n);
    proj(i, i) = 1.0;
    out = out + interleave(proj, f.inner_register, f.blocks[i]);
  }
  return out;
}

namespace detail {

inline CyclicGroup group_of(const RegisterLayout& layout, const char* where) {
  if (layout.registers() == 0 || !layout.is_homogeneous()) {
    throw std::invalid_argument(
        std::string(where) +
        ": need a non-empty homogeneous layout to infer the group order");
  }
  return CyclicGroup(layout.homogeneous_dim());
}

inline void require_frame_in(const RegisterLayout& layout, const FrameSpec& f,
                             const char* where) {
  if (layout.registers() < 2) {
    throw std::invalid_argument(std::string(where) +
                                ": layout needs at least two registers");
  }
  if (f.register_index() >= layout.registers()) {
    throw std::out_of_range(std::string(where) +
                            ": frame register outside the layout");
  }
  if (layout.local_dim(f.register_index()) != f.local_dim()) {
    throw std::invalid_argument(
        std::string(where) +
        ": frame seed dimension does not match its register");
  }
}

/// v with every register's digit shifted by +g (the collective shift as an
/// index permutation; avoids materializing U_g).
inline Vec globally_shifted(const RegisterLayout& layout, const Vec& v,
                            int g) {
  Vec out(v.size());
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    out(globally_shifted_index(layout, i, g)) = v(i);
  }
  return out;
}

}  // namespace detail

/// Describe an invariant pure state relative to a frame register:
///
///   psi_rel = sqrt(N) <seed|_f psi
///
/// on the remaining registers.  Requires psi to live in a single charge
/// sector (for pure states that is exactly shift invariance of the ray);
/// the map is then inner-product preserving, so psi_rel is normalized.
inline RelativeState reduce(const StateVector& psi, const FrameSpec& frame,
                            double tolerance = kInvarianceTolerance) {
  const RegisterLayout& layout = psi.layout();
  detail::require_frame_in(layout, frame, "reduce");
  const CyclicGroup group = detail::group_of(layout, "reduce");
  if (std::abs(psi.norm() - 1.0) > kInvarianceTolerance) {
    throw std::invalid_argument("reduce: state vector must be normalized");
  }
  const std::vector<double> weights = sector_weights(psi, group);
  const double top = *std::max_element(weights.begin(), weights.end());
  if (top < 1.0 - tolerance) {
    throw invariance_error(
        "reduce: vector is spread over several charge sectors (largest "
        "sector weight " +
        std::to_string(top) + "); project onto one sector first");
  }
  StateVector body = bra_contract(psi, frame.register_index(), frame.seed());
  body = std::sqrt(static_cast<double>(group.order())) * body;
  if (body.norm() <= tolerance) {
    throw contraction_error(
        "reduce: state has no support on the frame's seed orientation");
  }
  return RelativeState(frame, layout, std::move(body));
}

/// Density-operator version: rho_rel = N <seed|_f rho |seed>_f.  Requires
/// shift invariance of rho; the result then has unit trace.
inline RelativeState reduce(const DensityOperator& rho, const FrameSpec& frame,
                            double tolerance = kInvarianceTolerance) {
  const RegisterLayout& layout = rho.layout();
  detail::require_frame_in(layout, frame, "reduce");
  const CyclicGroup group = detail::group_of(layout, "reduce");
  const double residual = invariance_residual(rho, group);
  if (residual > tolerance) {
    throw invariance_error(
        "reduce: density operator is not shift-invariant (residual " +
        std::to_string(residual) + "); twirl the state first");
  }
  Operator body =
      contract_register(rho.as_operator(), frame.register_index(), frame.seed());
  body = cplx(static_cast<double>(group.order()), 0.0) * body;
  if (std::abs(body.trace()) <= tolerance) {
    throw contraction_error(
        "reduce: state has no support on the frame's seed orientation");
  }
  return RelativeState(frame, layout, DensityOperator(body.layout(), body.matrix()));
}

/// The Heisenberg predual of relativize: the invariant global state as seen
/// from `frame`, as a density operator on the remaining registers.
inline DensityOperator predual_reduce(const DensityOperator& rho,
                                      const FrameSpec& frame,
                                      double tolerance = kInvarianceTolerance) {
  return reduce(rho, frame, tolerance).density_body();
}

/// Rebuild the invariant global state of charge k from a pure relative
/// description:
///
///   psi = sqrt(N) Pi_k ( |seed>_f (x) body ).
///
/// For an ideal frame this is the two-sided inverse of reduce on sector k,
/// and the output is normalized.
inline StateVector reconstruct(const RelativeState& rel,
                               const ChargeSector& sector,
                               double tolerance = kInvarianceTolerance) {
  const StateVector& body = rel.vector_body();
  const RegisterLayout& full = rel.full_layout();
  const CyclicGroup group = detail::group_of(full, "reconstruct");
  if (sector.group() != group) {
    throw std::invalid_argument(
        "reconstruct: sector group does not match the layout");
  }
  if (std::abs(body.norm() - 1.0) > kInvarianceTolerance) {
    throw std::invalid_argument("reconstruct: relative body must be normalized");
  }
  const int f = rel.frame().register_index();
  const int n = group.order();

  // Embed |seed>_f (x) body into the full layout.
  Vec embedded = Vec::Zero(full.total_dim());
  for (int j = 0; j < body.dim(); ++j) {
    for (int i = 0; i < n; ++i) {
      embedded(full.insert_digit(j, f, i)) = rel.frame().seed()(i) * body.amp(j);
    }
  }

  // sqrt(N) Pi_k, applied as a phase-weighted sum of index permutations.
  Vec out = Vec::Zero(full.total_dim());
  for (int g = 0; g < n; ++g) {
    out += group.omega(-static_cast<long long>(sector.k()) * g) *
           detail::globally_shifted(full, embedded, g);
  }
  out /= std::sqrt(static_cast<double>(n));

  StateVector psi(full, std::move(out));
  // Cannot trip for an ideal frame: the coherent system's orthonormality
  // makes sqrt(N) Pi_k ( |seed>_f (x) . ) an isometry.
  if (std::abs(psi.norm() - 1.0) > tolerance) {
    throw contraction_error(
        "reconstruct: charge projection annihilated part of the embedded "
        "state (norm " +
        std::to_string(psi.norm()) + ")");
  }
  return psi;
}

/// Relativize an observable on the non-frame registers into an invariant
/// observable on the full system:
///
///   Y^f(T) = sum_g |g><g|_f (x) U_g^rest T (U_g^rest)^dagger,
///
/// where |g>_f runs over the frame's coherent system.  The result commutes
/// with every collective shift, is unital and multiplicative, and satisfies
/// <psi| Y^f(T) |psi> = <psi_rel| T |psi_rel> for invariant psi.
inline Operator relativize(const Operator& observable, const FrameSpec& frame,
                           const RegisterLayout& full_layout) {
  detail::require_frame_in(full_layout, frame, "relativize");
  const CyclicGroup group = detail::group_of(full_layout, "relativize");
  const int f = frame.register_index();
  const RegisterLayout rest = full_layout.without(f);
  if (observable.layout() != rest) {
    throw std::invalid_argument(
        "relativize: observable layout is not the full layout minus the "
        "frame register");
  }
  Operator out = Operator::zero(full_layout);
  for (int g = 0; g < group.order(); ++g) {
    const Vec orient = frame.coherent_vector(g);
    const Mat proj = orient * orient.adjoint();
    const Operator u = global_unitary(GroupElement(group, g), rest);
    out = out + interleave(proj, f, u.conjugate(observable));
  }
  return out;
}

/// Conditional dephasing of a relative state on an inner frame register:
/// kills every block that is off-diagonal in the inner frame's orientation
/// basis, leaving exactly the data accessible when that register is used as
/// a classical reference inside the description.  `inner_frame` indexes the
/// original full layout and must differ from the outer frame.
inline RelativeState dephase_toward_frame(const RelativeState& rel,
                                          int inner_frame) {
  const int outer = rel.frame().register_index();
  if (inner_frame == outer) {
    throw std::invalid_argument(
        "dephase_toward_frame: inner frame register equals the outer frame");
  }
  if (inner_frame < 0 || inner_frame >= rel.full_layout().registers()) {
    throw std::out_of_range(
        "dephase_toward_frame: inner frame register outside the layout");
  }
  const int pos = inner_frame < outer ? inner_frame : inner_frame - 1;
  return RelativeState(rel.frame(), rel.full_layout(),
                       dephase_register(rel.density_body(), pos));
}

}  // namespace qrf
