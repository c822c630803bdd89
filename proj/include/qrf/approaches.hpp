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
#include <string>
#include <utility>
#include <vector>

#include "qrf/errors.hpp"
#include "qrf/frames.hpp"
#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/twirl.hpp"

namespace qrf {

/// Tolerance on the Schmidt-coefficient gap when asserting that the
/// disentangler output factorizes.
constexpr double kSchmidtGapTolerance = 1e-8;

// ---------------------------------------------------------------------------
// Perspective-neutral transformations
// ---------------------------------------------------------------------------

/// Change the frame of a pure relative description by routing through the
/// charge-zero global state: reconstruct at sector 0, then reduce with
/// respect to the new frame.  The composite is unitary on relative bodies,
/// and the identity when the target frame equals the source.
inline RelativeState pn_change(const RelativeState& rel, const FrameSpec& to,
                               double tolerance = kInvarianceTolerance) {
  const CyclicGroup group = detail::group_of(rel.full_layout(), "pn_change");
  const StateVector global =
      reconstruct(rel, ChargeSector(group, 0), tolerance);
  return reduce(global, to, tolerance);
}

/// Matrix of the pn_change map on relative bodies (columns are the images
/// of the computational basis bodies).  Used to transform mixed relative
/// bodies by conjugation.
inline Mat pn_transfer_matrix(const FrameSpec& from, const FrameSpec& to,
                              const RegisterLayout& full_layout) {
  detail::require_frame_in(full_layout, from, "pn_transfer_matrix");
  detail::require_frame_in(full_layout, to, "pn_transfer_matrix");
  const RegisterLayout from_rest = full_layout.without(from.register_index());
  const RegisterLayout to_rest = full_layout.without(to.register_index());
  Mat v(to_rest.total_dim(), from_rest.total_dim());
  for (int j = 0; j < from_rest.total_dim(); ++j) {
    const RelativeState rel(from, full_layout,
                            StateVector::basis(from_rest, j));
    v.col(j) = pn_change(rel, to).vector_body().amplitudes();
  }
  return v;
}

// ---------------------------------------------------------------------------
// Extra-particle transformations
// ---------------------------------------------------------------------------

/// A state in the extra-particle form: an explicit charge register holding
/// a shift eigenvector |chi_k>, the sector it marks, and the relative body
/// with respect to the chosen frame.
struct ExtraParticleState {
  StateVector charge_register;  // single register of dimension N
  ChargeSector sector;
  RelativeState relative;
};

/// The character vector of sector k expressed in a frame's coherent system,
/// (1/sqrt N) sum_g omega^{-k g} |g>_f.  For the computational seed this is
/// fourier_vector(k).
inline StateVector frame_charge_vector(const ChargeSector& sector,
                                       const FrameSpec& frame) {
  const CyclicGroup& group = sector.group();
  const int n = group.order();
  if (frame.local_dim() != n) {
    throw std::invalid_argument(
        "frame_charge_vector: frame dimension does not match the group");
  }
  Vec v = Vec::Zero(n);
  for (int g = 0; g < n; ++g) {
    v += (group.omega(-static_cast<long long>(sector.k()) * g) /
          std::sqrt(static_cast<double>(n))) *
         frame.coherent_vector(g);
  }
  return StateVector(RegisterLayout({n}), std::move(v));
}

/// The controlled-shift correction that decouples a frame register from the
/// rest:
///
///   T^f = sum_g |g><g|_f (x) (X^dagger g)^(x rest).
///
/// Subtracting the frame's displacement from every other register makes a
/// charge-k state factorize as T^f psi = |chi_k>_f (x) psi_rel.  (At N = 2
/// the correcting shifts X^dagger g coincide with X^g.)
inline Operator disentangler(const FrameSpec& frame,
                             const RegisterLayout& full_layout) {
  detail::require_frame_in(full_layout, frame, "disentangler");
  const CyclicGroup group = detail::group_of(full_layout, "disentangler");
  const int f = frame.register_index();
  const RegisterLayout rest = full_layout.without(f);
  Operator out = Operator::zero(full_layout);
  for (int g = 0; g < group.order(); ++g) {
    const Vec orient = frame.coherent_vector(g);
    const Mat proj = orient * orient.adjoint();
    const Operator correction =
        global_unitary(GroupElement(group, -g), rest);
    out = out + interleave(proj, f, correction);
  }
  return out;
}

/// Split a single-sector global state into (charge register, relative body)
/// by applying the disentangler and peeling off the frame factor.  Errors
/// on states spread over several sectors -- those callers must keep a
/// density operator and work with charge_weights instead.
inline ExtraParticleState extract_extra_particle(
    const StateVector& global, const FrameSpec& frame,
    double tolerance = kInvarianceTolerance) {
  const RegisterLayout& layout = global.layout();
  detail::require_frame_in(layout, frame, "extract_extra_particle");
  const CyclicGroup group = detail::group_of(layout, "extract_extra_particle");

  const std::vector<double> weights = sector_weights(global, group);
  int k = 0;
  for (int i = 1; i < group.order(); ++i) {
    if (weights[i] > weights[k]) k = i;
  }
  if (weights[k] < 1.0 - tolerance) {
    throw invariance_error(
        "extract_extra_particle: state is spread over several charge "
        "sectors (largest weight " +
        std::to_string(weights[k]) + ")");
  }
  const ChargeSector sector(group, k);

  const RelativeState rel = reduce(global, frame, tolerance);
  const StateVector decoupled = disentangler(frame, layout).apply(global);

  // Schmidt check across the frame / rest split: the top coefficient must
  // carry all the weight, i.e. the disentangled state is a product.
  const int f = frame.register_index();
  const RegisterLayout rest = layout.without(f);
  Mat across(group.order(), rest.total_dim());
  for (int i = 0; i < group.order(); ++i) {
    for (int j = 0; j < rest.total_dim(); ++j) {
      across(i, j) = decoupled.amp(layout.insert_digit(j, f, i));
    }
  }
  Eigen::JacobiSVD<Mat> svd(across);
  if (1.0 - svd.singularValues()(0) > kSchmidtGapTolerance) {
    throw invariance_error(
        "extract_extra_particle: disentangled state does not factorize "
        "(top Schmidt coefficient " +
        std::to_string(svd.singularValues()(0)) + ")");
  }

  // The frame factor is the charge vector of sector k; verify exactly.
  const StateVector chi = frame_charge_vector(sector, frame);
  const StateVector predicted = [&] {
    Vec v = Vec::Zero(layout.total_dim());
    for (int j = 0; j < rest.total_dim(); ++j) {
      for (int i = 0; i < group.order(); ++i) {
        v(layout.insert_digit(j, f, i)) =
            chi.amp(i) * rel.vector_body().amp(j);
      }
    }
    return StateVector(layout, std::move(v));
  }();
  if ((decoupled - predicted).norm() > kInvarianceTolerance) {
    throw invariance_error(
        "extract_extra_particle: frame factor is not the expected charge "
        "vector");
  }

  return ExtraParticleState{chi, sector, rel};
}

/// Reassemble the global state from an extra-particle description (the
/// inverse of extract_extra_particle).
inline StateVector ep_to_global(const ExtraParticleState& x,
                                double tolerance = kInvarianceTolerance) {
  return reconstruct(x.relative, x.sector, tolerance);
}

namespace detail {

/// Position of full-layout register r after another register f is removed.
inline int reduced_position(int r, int f) { return r < f ? r : r - 1; }

}  // namespace detail

/// The explicit frame-swap unitary on (charge register) (x) (body wrt
/// `from`), conditioned on the charge:
///
///   S = sum_k |chi_k><chi_k| (x) W_k,
///
/// where W_0 = P_0 (x) I + P_1 (x) X^(x others) and W_1 is the same with
/// the flipped block negated, the projectors P_i acting on the slot that
/// the new frame occupies inside the body.  After applying S that slot
/// holds the old frame's orientation, so the body registers are
/// reinterpreted accordingly (see ep_change, which also moves the slot when
/// the two frames are not adjacent).  Defined for group order 2 only --
/// larger orders change frames through the reconstruction route -- and
/// requires computational seeds on both frames.
inline Operator swap_operator(const FrameSpec& from, const FrameSpec& to,
                              const RegisterLayout& full_layout) {
  detail::require_frame_in(full_layout, from, "swap_operator");
  detail::require_frame_in(full_layout, to, "swap_operator");
  if (from.register_index() == to.register_index()) {
    throw std::invalid_argument("swap_operator: frames coincide");
  }
  if (!from.is_computational() || !to.is_computational()) {
    throw std::invalid_argument(
        "swap_operator: explicit swap requires computational frame seeds");
  }
  const CyclicGroup group = detail::group_of(full_layout, "swap_operator");
  if (group.order() != 2) {
    throw std::invalid_argument(
        "swap_operator: the explicit swap unitary is only defined for group "
        "order 2");
  }
  const int n = group.order();
  const RegisterLayout body =
      full_layout.without(from.register_index());
  const int slot =
      detail::reduced_position(to.register_index(), from.register_index());

  Operator s = Operator::zero(RegisterLayout({n}).concatenated(body));
  for (int k = 0; k < n; ++k) {
    // W_k on the body registers.
    Mat w = Mat::Zero(body.total_dim(), body.total_dim());
    for (int g = 0; g < n; ++g) {
      const cplx phase = group.omega(-static_cast<long long>(k) * g);
      for (int col = 0; col < body.total_dim(); ++col) {
        if (body.digit(col, slot) != ((n - g) % n)) continue;
        int row = body.replace_digit(col, slot, g);
        for (int r = 0; r < body.registers(); ++r) {
          if (r == slot) continue;
          row = body.replace_digit(row, r, (body.digit(row, r) + g) % n);
        }
        w(row, col) = phase;
      }
    }
    const StateVector chi = fourier_vector(ChargeSector(group, k));
    const Mat proj = chi.amplitudes() * chi.amplitudes().adjoint();
    s = s + interleave(proj, 0, Operator(body, std::move(w)));
  }
  return s;
}

/// Change the frame of an extra-particle description.  The charge register
/// is untouched; the relative body is rebuilt through the global state
/// (reconstruct at the marked sector, reduce with respect to the new
/// frame).  At group order 2 with computational seeds, the explicit swap
/// unitary is applied as an independent second route and the two answers
/// are required to agree.
inline ExtraParticleState ep_change(const ExtraParticleState& x,
                                    const FrameSpec& to,
                                    double tolerance = kDefaultTolerance) {
  const FrameSpec& from = x.relative.frame();
  if (to.register_index() == from.register_index()) {
    throw std::invalid_argument("ep_change: target frame equals the source");
  }
  const RegisterLayout& full = x.relative.full_layout();
  const StateVector global = reconstruct(x.relative, x.sector);
  const RelativeState rel_to = reduce(global, to);

  if (x.sector.group().order() == 2 && from.is_computational() &&
      to.is_computational()) {
    const Operator s = swap_operator(from, to, full);
    const StateVector swapped =
        s.apply(tensor(x.charge_register, x.relative.vector_body()));
    // Peel the (unchanged) charge register back off.
    const StateVector chi = frame_charge_vector(x.sector, to);
    StateVector body = bra_contract(swapped, 0, chi.amplitudes());
    if (std::abs(body.norm() - 1.0) > kInvarianceTolerance) {
      throw std::logic_error(
          "ep_change: swap route moved weight out of the charge sector");
    }
    const int slot_before =
        detail::reduced_position(to.register_index(), from.register_index());
    const int slot_after =
        detail::reduced_position(from.register_index(), to.register_index());
    if (slot_before != slot_after) {
      body = move_register(body, slot_before, slot_after);
    }
    const double gap =
        (body - rel_to.vector_body()).norm();
    if (gap > std::max(tolerance, 1e-10)) {
      throw std::logic_error(
          "ep_change: swap route and reconstruction route disagree (" +
          std::to_string(gap) + ")");
    }
  }

  return ExtraParticleState{frame_charge_vector(x.sector, to), x.sector,
                            rel_to};
}

// ---------------------------------------------------------------------------
// Operational transformations
// ---------------------------------------------------------------------------

/// An operational equivalence class of relative descriptions: everything
/// that agrees on all observables framed by `inner_frame` collapses to one
/// representative, obtained by dephasing the inner frame register.
struct OperationalClass {
  RelativeState representative;  // density body, dephased on the inner frame
  int inner_frame;               // register index in the full layout
};

/// Canonical representative of the operational class of a relative state.
inline OperationalClass op_canonicalize(const RelativeState& rel,
                                        int inner_frame) {
  return OperationalClass{dephase_toward_frame(rel, inner_frame), inner_frame};
}

/// Blocks <j|_pos rho |j>_pos of an operator along one register.
inline std::vector<Operator> register_blocks(const Operator& op, int pos) {
  const int d = op.layout().local_dim(pos);
  std::vector<Operator> blocks;
  blocks.reserve(d);
  for (int j = 0; j < d; ++j) {
    Vec e = Vec::Zero(d);
    e(j) = 1.0;
    blocks.push_back(contract_register(op, pos, e));
  }
  return blocks;
}

/// Operational change of frame.  For a class described relative to frame A
/// with inner frame B and block decomposition sum_j |j><j|_B (x) M_j, the
/// class relative to B with inner frame A is
///
///   sum_k |k><k|_A (x) (X^k)^(x others) M_{-k mod N} (X^k others)^dagger.
///
/// This is an isometry of the dephased block structure, invertible on
/// classes (applying it twice returns the input class).  Both frames use
/// the computational orientation basis.
inline OperationalClass op_change(const OperationalClass& c,
                                  double tolerance = kInvarianceTolerance) {
  const RelativeState& rel = c.representative;
  const FrameSpec& from = rel.frame();
  if (!from.is_computational()) {
    throw std::invalid_argument(
        "op_change: operational changes require computational frame seeds");
  }
  const RegisterLayout& full = rel.full_layout();
  const CyclicGroup group = detail::group_of(full, "op_change");
  const int n = group.order();
  const int a = from.register_index();
  const int b = c.inner_frame;
  if (b == a) {
    throw std::invalid_argument(
        "op_change: inner frame equals the outer frame");
  }

  const DensityOperator body = rel.density_body();
  const int pos_b = detail::reduced_position(b, a);
  {
    const Operator dephased = dephase_register(body.as_operator(), pos_b);
    if (frobenius_distance(dephased, body.as_operator()) > tolerance) {
      throw std::invalid_argument(
          "op_change: representative is not dephased on the inner frame");
    }
  }

  const std::vector<Operator> blocks =
      register_blocks(body.as_operator(), pos_b);
  const RegisterLayout others = body.layout().without(pos_b);

  const RegisterLayout to_rest = full.without(b);
  const int pos_a = detail::reduced_position(a, b);
  Operator out = Operator::zero(to_rest);
  for (int k = 0; k < n; ++k) {
    const Operator shift = global_unitary(GroupElement(group, k), others);
    Mat proj = Mat::Zero(n, n);
    proj(k, k) = 1.0;
    out = out + interleave(proj, pos_a, shift.conjugate(blocks[(n - k) % n]));
  }

  const FrameSpec to = FrameSpec::computational(b, n);
  return OperationalClass{
      RelativeState(to, full, DensityOperator(to_rest, out.matrix())), a};
}

// ---------------------------------------------------------------------------
// Side-by-side comparison of the three routes between two frames
// ---------------------------------------------------------------------------

/// One leg of the comparison triangle.  `representative` is the final
/// answer of the leg, canonicalized to an operational class representative
/// (relative to the target frame, dephased on the source frame register) so
/// the three formalisms become directly comparable.
struct PathOutcome {
  bool available = false;
  std::string note;  // why unavailable, or extra diagnostics
  std::optional<DensityOperator> relative_to;  // body wrt the target frame
  std::optional<DensityOperator> representative;
};

/// Record of running the extra-particle (disentangler + swap), the
/// perspective-neutral, and the operational route between two frames on one
/// invariant global state, with the residuals of every internal identity
/// the routes rely on.
struct PathReport {
  std::vector<double> charge_weights;

  PathOutcome extra_particle;   // disentangle at A, swap, reassemble at B
  PathOutcome perspective_neutral;  // sector-0 reduce/reconstruct route
  PathOutcome operational;      // reduce at A, dephase toward B, block map

  double charge_offdiagonal = -1.0;  // charge coherence after disentangling
  double swap_route_gap = -1.0;      // swap vs reconstruction (computational)
  double global_roundtrip = -1.0;    // reassembled global vs input
  double q_roundtrip = -1.0;         // op_change applied twice vs identity

  // Pairwise Frobenius distances between the available representatives.
  double ep_vs_pn = -1.0;
  double ep_vs_op = -1.0;
  double pn_vs_op = -1.0;
  bool representatives_agree = false;
};

namespace detail {

/// Lift a (possibly mixed) relative body into its sector-k invariant global
/// density, N Pi_k (P_seed (x) body) Pi_k, then read it out relative to the
/// target frame.  Vector bodies route through reconstruct/reduce directly.
inline DensityOperator sector_body_change(const DensityOperator& body,
                                          const FrameSpec& from,
                                          const FrameSpec& to, int k,
                                          const RegisterLayout& full) {
  const CyclicGroup group = group_of(full, "sector_body_change");
  const int n = group.order();
  const Operator embedded = interleave(
      from.seed() * from.seed().adjoint(), from.register_index(),
      body.as_operator());
  // N Pi_k M Pi_k = (1/N) sum_{g,h} omega^{-k(g-h)} U_g M U_h^dagger,
  // assembled by index permutation to avoid materializing Pi_k.
  const int d = full.total_dim();
  Mat lifted = Mat::Zero(d, d);
  std::vector<std::vector<int>> shifted(n, std::vector<int>(d));
  for (int g = 0; g < n; ++g) {
    for (int i = 0; i < d; ++i) {
      shifted[g][i] = globally_shifted_index(full, i, g);
    }
  }
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const cplx phase =
          group.omega(-static_cast<long long>(k) * (g - h)) /
          static_cast<double>(n);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          lifted(shifted[g][r], shifted[h][c]) += phase * embedded.entry(r, c);
        }
      }
    }
  }
  const DensityOperator global(full, std::move(lifted));
  return predual_reduce(global, to);
}

}  // namespace detail

/// Run all three published routes from `from` to `to` on one invariant
/// global state and compare their canonicalized outputs.  The
/// perspective-neutral leg is only defined on charge-zero states; outside
/// that sector it is reported as rejected rather than failing the whole
/// comparison.
inline PathReport path_comparison(const DensityOperator& global,
                                  const FrameSpec& from, const FrameSpec& to,
                                  double tolerance = kDefaultTolerance) {
  const RegisterLayout& full = global.layout();
  detail::require_frame_in(full, from, "path_comparison");
  detail::require_frame_in(full, to, "path_comparison");
  if (from.register_index() == to.register_index()) {
    throw std::invalid_argument("path_comparison: frames coincide");
  }
  const CyclicGroup group = detail::group_of(full, "path_comparison");
  const int n = group.order();

  PathReport report;
  report.charge_weights = charge_weights(global, group);

  const int a = from.register_index();
  const int b = to.register_index();

  // --- Extra-particle leg: disentangle at A, move each charge block to B.
  {
    const Operator t = disentangler(from, full);
    const Operator decoupled = t.conjugate(global.as_operator());
    // Split along the frame register in A's charge-vector basis.
    Operator assembled = Operator::zero(full);
    Operator rel_to = Operator::zero(full.without(b));
    for (int k = 0; k < n; ++k) {
      const double weight = report.charge_weights[k];
      const StateVector chi = frame_charge_vector(ChargeSector(group, k), from);
      const Operator block =
          contract_register(decoupled, a, chi.amplitudes());
      assembled = assembled + interleave(
          chi.amplitudes() * chi.amplitudes().adjoint(), a, block);
      if (weight < 1e-12) continue;
      const DensityOperator body(
          block.layout(), block.matrix() / block.trace());
      const DensityOperator moved =
          detail::sector_body_change(body, from, to, k, full);
      rel_to = rel_to + cplx(weight, 0.0) * moved.as_operator();
    }
    // Invariant inputs have no coherence between charge blocks.
    report.charge_offdiagonal = frobenius_distance(decoupled, assembled);

    const DensityOperator rel(rel_to.layout(), rel_to.matrix());
    report.extra_particle.available = true;
    report.extra_particle.relative_to = rel;
    report.extra_particle.representative =
        op_canonicalize(RelativeState(to, full, rel), a)
            .representative.density_body();

    // Cross-check: the same leg through the explicit swap unitary.
    if (n == 2 && from.is_computational() && to.is_computational()) {
      const Operator s = swap_operator(from, to, full);
      const RegisterLayout swap_layout = s.layout();
      const int slot_before = detail::reduced_position(b, a);
      const int slot_after = detail::reduced_position(a, b);
      Operator via_swap = Operator::zero(full.without(b));
      for (int k = 0; k < n; ++k) {
        const double weight = report.charge_weights[k];
        if (weight < 1e-12) continue;
        const StateVector chi = fourier_vector(ChargeSector(group, k));
        const Operator block =
            contract_register(decoupled, a, chi.amplitudes());
        const Operator joint = interleave(
            chi.amplitudes() * chi.amplitudes().adjoint(), 0,
            Operator(block.layout(), block.matrix() / block.trace()));
        const Operator swapped = s.conjugate(Operator(swap_layout, joint.matrix()));
        Operator body = contract_register(swapped, 0, chi.amplitudes());
        if (slot_before != slot_after) {
          body = move_register(body, slot_before, slot_after);
        }
        via_swap = via_swap + cplx(weight, 0.0) * body;
      }
      report.swap_route_gap = frobenius_distance(via_swap, rel.as_operator());
    }

    // Round trip: undoing the disentangler must return the input state.
    const Operator back = t.adjoint().conjugate(assembled);
    report.global_roundtrip = frobenius_distance(back, global.as_operator());
  }

  // --- Operational leg: reduce at A, dephase toward B, block change map.
  {
    const RelativeState rel_a = reduce(global, from);
    const OperationalClass class_a = op_canonicalize(rel_a, b);
    const OperationalClass class_b = op_change(class_a);
    const OperationalClass back = op_change(class_b);
    report.q_roundtrip =
        frobenius_distance(back.representative.density_body(),
                           class_a.representative.density_body());
    report.operational.available = true;
    report.operational.relative_to = class_b.representative.density_body();
    report.operational.representative = class_b.representative.density_body();
  }

  // --- Perspective-neutral leg: only charge-zero states are physical.
  {
    const double w0 = report.charge_weights[0];
    if (std::abs(w0 - 1.0) > kInvarianceTolerance) {
      report.perspective_neutral.available = false;
      report.perspective_neutral.note =
          "not a physical state: weight " + std::to_string(1.0 - w0) +
          " lies outside the charge-zero sector";
    } else {
      const RelativeState rel_a = reduce(global, from);
      DensityOperator body_b = [&] {
        if (rel_a.purity() > 1.0 - kInvarianceTolerance) {
          // Pure body: transform the vector directly.
          Eigen::SelfAdjointEigenSolver<Mat> eig(rel_a.density_body().matrix());
          const int top = static_cast<int>(eig.eigenvalues().size()) - 1;
          const StateVector vec(rel_a.reduced_layout(),
                                eig.eigenvectors().col(top));
          const RelativeState pure_rel(from, full, vec.normalized());
          return pn_change(pure_rel, to).density_body();
        }
        const Mat v = pn_transfer_matrix(from, to, full);
        const Mat moved = v * rel_a.density_body().matrix() * v.adjoint();
        return DensityOperator(full.without(b), moved);
      }();
      report.perspective_neutral.available = true;
      report.perspective_neutral.relative_to = body_b;
      report.perspective_neutral.representative =
          op_canonicalize(RelativeState(to, full, body_b), a)
              .representative.density_body();
    }
  }

  // --- Pairwise agreement of the canonicalized outputs.
  const auto& ep = report.extra_particle;
  const auto& pn = report.perspective_neutral;
  const auto& op = report.operational;
  if (ep.available && pn.available) {
    report.ep_vs_pn =
        frobenius_distance(*ep.representative, *pn.representative);
  }
  if (ep.available && op.available) {
    report.ep_vs_op =
        frobenius_distance(*ep.representative, *op.representative);
  }
  if (pn.available && op.available) {
    report.pn_vs_op =
        frobenius_distance(*pn.representative, *op.representative);
  }
  report.representatives_agree =
      (report.ep_vs_pn < 0 || report.ep_vs_pn <= tolerance) &&
      (report.ep_vs_op < 0 || report.ep_vs_op <= tolerance) &&
      (report.pn_vs_op < 0 || report.pn_vs_op <= tolerance);
  return report;
}

}  // namespace qrf
