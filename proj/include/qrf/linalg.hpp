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

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrf/errors.hpp"
#include "qrf/layout.hpp"

namespace qrf {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Default numeric tolerance for equality / rank / positivity decisions.
constexpr double kDefaultTolerance = 1e-10;

/// Looser tolerance used for symmetry-invariance preconditions, where the
/// input typically went through a chain of floating-point channel
/// applications before reaching the check.
constexpr double kInvarianceTolerance = 1e-8;

// ---------------------------------------------------------------------------
// States and operators on a register layout
// ---------------------------------------------------------------------------

/// Pure state amplitudes over a register layout's basis.
class StateVector {
 public:
  StateVector(RegisterLayout layout, Vec amplitudes)
      : layout_(std::move(layout)), amp_(std::move(amplitudes)) {
    if (amp_.size() != layout_.total_dim()) {
      throw std::invalid_argument(
          "StateVector: amplitude count does not match layout dimension " +
          layout_.describe());
    }
  }

  static StateVector zero(const RegisterLayout& layout) {
    return StateVector(layout, Vec::Zero(layout.total_dim()));
  }

  /// Computational basis state |index>.
  static StateVector basis(const RegisterLayout& layout, int index) {
    if (index < 0 || index >= layout.total_dim()) {
      throw std::out_of_range("StateVector: basis index out of range");
    }
    Vec v = Vec::Zero(layout.total_dim());
    v(index) = 1.0;
    return StateVector(layout, std::move(v));
  }

  const RegisterLayout& layout() const { return layout_; }
  int dim() const { return static_cast<int>(amp_.size()); }
  const Vec& amplitudes() const { return amp_; }
  cplx amp(int index) const { return amp_(index); }

  double norm() const { return amp_.norm(); }

  StateVector normalized(double tolerance = kDefaultTolerance) const {
    const double n = norm();
    if (n <= tolerance) {
      throw contraction_error("StateVector: cannot normalize a zero vector");
    }
    return StateVector(layout_, amp_ / n);
  }

  StateVector operator+(const StateVector& other) const {
    require_same_layout(other);
    return StateVector(layout_, amp_ + other.amp_);
  }
  StateVector operator-(const StateVector& other) const {
    require_same_layout(other);
    return StateVector(layout_, amp_ - other.amp_);
  }
  friend StateVector operator*(cplx scale, const StateVector& v) {
    return StateVector(v.layout_, scale * v.amp_);
  }

 private:
  void require_same_layout(const StateVector& other) const {
    if (layout_ != other.layout_) {
      throw std::invalid_argument("StateVector: register layouts differ");
    }
  }

  RegisterLayout layout_;
  Vec amp_;
};

/// <a|b> with the usual physics convention (conjugate-linear in the bra).
inline cplx inner(const StateVector& a, const StateVector& b) {
  if (a.layout() != b.layout()) {
    throw std::invalid_argument("inner: register layouts differ");
  }
  return a.amplitudes().dot(b.amplitudes());
}

/// General linear operator on a register layout.
class Operator {
 public:
  Operator(RegisterLayout layout, Mat matrix)
      : layout_(std::move(layout)), mat_(std::move(matrix)) {
    if (mat_.rows() != layout_.total_dim() ||
        mat_.cols() != layout_.total_dim()) {
      throw std::invalid_argument(
          "Operator: matrix shape does not match layout dimension " +
          layout_.describe());
    }
  }

  static Operator identity(const RegisterLayout& layout) {
    return Operator(layout,
                    Mat::Identity(layout.total_dim(), layout.total_dim()));
  }
  static Operator zero(const RegisterLayout& layout) {
    return Operator(layout, Mat::Zero(layout.total_dim(), layout.total_dim()));
  }

  const RegisterLayout& layout() const { return layout_; }
  int dim() const { return layout_.total_dim(); }
  const Mat& matrix() const { return mat_; }
  cplx entry(int row, int col) const { return mat_(row, col); }

  Operator adjoint() const { return Operator(layout_, mat_.adjoint()); }
  cplx trace() const { return mat_.trace(); }
  double frobenius_norm() const { return mat_.norm(); }

  bool is_hermitian(double tolerance = kDefaultTolerance) const {
    return (mat_ - mat_.adjoint()).norm() <= tolerance;
  }
  bool is_unitary(double tolerance = kDefaultTolerance) const {
    const Mat gram = mat_.adjoint() * mat_;
    return (gram - Mat::Identity(mat_.rows(), mat_.cols())).norm() <= tolerance;
  }

  Operator operator*(const Operator& other) const {
    require_same_layout(other);
    return Operator(layout_, mat_ * other.mat_);
  }
  Operator operator+(const Operator& other) const {
    require_same_layout(other);
    return Operator(layout_, mat_ + other.mat_);
  }
  Operator operator-(const Operator& other) const {
    require_same_layout(other);
    return Operator(layout_, mat_ - other.mat_);
  }
  friend Operator operator*(cplx scale, const Operator& op) {
    return Operator(op.layout_, scale * op.mat_);
  }

  StateVector apply(const StateVector& v) const {
    if (layout_ != v.layout()) {
      throw std::invalid_argument("Operator::apply: register layouts differ");
    }
    return StateVector(layout_, mat_ * v.amplitudes());
  }

  /// A B A^dagger, the action of this operator on a density-like matrix.
  Operator conjugate(const Operator& other) const {
    require_same_layout(other);
    return Operator(layout_, mat_ * other.mat_ * mat_.adjoint());
  }

 private:
  void require_same_layout(const Operator& other) const {
    if (layout_ != other.layout_) {
      throw std::invalid_argument("Operator: register layouts differ");
    }
  }

  RegisterLayout layout_;
  Mat mat_;
};

/// Density operator: Hermitian, unit trace, positive semidefinite (the
/// first two are enforced on construction; positivity is an O(dim^3)
/// eigenvalue check available through validate_positive, applied at API
/// boundaries rather than on every intermediate).
class DensityOperator {
 public:
  DensityOperator(RegisterLayout layout, Mat matrix,
                  double tolerance = kInvarianceTolerance)
      : layout_(std::move(layout)), mat_(std::move(matrix)) {
    if (mat_.rows() != layout_.total_dim() ||
        mat_.cols() != layout_.total_dim()) {
      throw std::invalid_argument(
          "DensityOperator: matrix shape does not match layout dimension " +
          layout_.describe());
    }
    if ((mat_ - mat_.adjoint()).norm() > tolerance) {
      throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
    }
    if (std::abs(mat_.trace() - cplx(1.0, 0.0)) > tolerance) {
      throw std::invalid_argument("DensityOperator: trace is not 1");
    }
  }

  static DensityOperator from_pure(const StateVector& psi,
                                   double tolerance = kInvarianceTolerance) {
    const Vec& a = psi.amplitudes();
    return DensityOperator(psi.layout(), a * a.adjoint(), tolerance);
  }

  /// Maximally mixed state I/dim.
  static DensityOperator maximally_mixed(const RegisterLayout& layout) {
    const int d = layout.total_dim();
    return DensityOperator(layout, Mat::Identity(d, d) / static_cast<double>(d));
  }

  const RegisterLayout& layout() const { return layout_; }
  int dim() const { return layout_.total_dim(); }
  const Mat& matrix() const { return mat_; }
  cplx entry(int row, int col) const { return mat_(row, col); }

  /// Tr(rho^2); 1 for pure states.
  double purity() const { return (mat_ * mat_).trace().real(); }

  /// Smallest eigenvalue must not dip below -tolerance.
  void validate_positive(double tolerance = kDefaultTolerance) const {
    Eigen::SelfAdjointEigenSolver<Mat> solver(mat_);
    if (solver.eigenvalues().minCoeff() < -tolerance) {
      throw std::invalid_argument(
          "DensityOperator: matrix has a negative eigenvalue");
    }
  }

  Operator as_operator() const { return Operator(layout_, mat_); }

 private:
  RegisterLayout layout_;
  Mat mat_;
};

// ---------------------------------------------------------------------------
// Register-indexed operations
// ---------------------------------------------------------------------------

inline StateVector tensor(const StateVector& a, const StateVector& b) {
  const RegisterLayout layout = a.layout().concatenated(b.layout());
  Vec out(layout.total_dim());
  const int db = b.dim();
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < db; ++j) {
      out(i * db + j) = a.amp(i) * b.amp(j);
    }
  }
  return StateVector(layout, std::move(out));
}

inline Operator tensor(const Operator& a, const Operator& b) {
  const RegisterLayout layout = a.layout().concatenated(b.layout());
  const int db = b.dim();
  Mat out(layout.total_dim(), layout.total_dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int k = 0; k < a.dim(); ++k) {
      out.block(i * db, k * db, db, db) = a.entry(i, k) * b.matrix();
    }
  }
  return Operator(layout, std::move(out));
}

inline DensityOperator tensor(const DensityOperator& a,
                              const DensityOperator& b) {
  const Operator prod = tensor(a.as_operator(), b.as_operator());
  return DensityOperator(prod.layout(), prod.matrix());
}

/// Contract one register of `psi` against a local bra vector (given as a
/// ket; it is conjugated here).  No normalization is applied:
/// result_j = sum_i conj(bra_i) psi_{insert(j, r, i)}.
inline StateVector bra_contract(const StateVector& psi, int r,
                                const Vec& bra) {
  const RegisterLayout& layout = psi.layout();
  if (r < 0 || r >= layout.registers()) {
    throw std::out_of_range("bra_contract: register index out of range");
  }
  if (bra.size() != layout.local_dim(r)) {
    throw std::invalid_argument(
        "bra_contract: bra dimension does not match register dimension");
  }
  const RegisterLayout rest = layout.without(r);
  Vec out = Vec::Zero(rest.total_dim());
  for (int j = 0; j < rest.total_dim(); ++j) {
    cplx sum = 0.0;
    for (int i = 0; i < layout.local_dim(r); ++i) {
      sum += std::conj(bra(i)) * psi.amp(layout.insert_digit(j, r, i));
    }
    out(j) = sum;
  }
  return StateVector(rest, std::move(out));
}

/// Two-sided contraction <bra|_r M |bra>_r of one register of an operator.
inline Operator contract_register(const Operator& op, int r, const Vec& bra) {
  const RegisterLayout& layout = op.layout();
  if (r < 0 || r >= layout.registers()) {
    throw std::out_of_range("contract_register: register index out of range");
  }
  if (bra.size() != layout.local_dim(r)) {
    throw std::invalid_argument(
        "contract_register: bra dimension does not match register dimension");
  }
  const RegisterLayout rest = layout.without(r);
  const int d = layout.local_dim(r);
  Mat out = Mat::Zero(rest.total_dim(), rest.total_dim());
  for (int j = 0; j < rest.total_dim(); ++j) {
    for (int k = 0; k < rest.total_dim(); ++k) {
      cplx sum = 0.0;
      for (int i = 0; i < d; ++i) {
        for (int l = 0; l < d; ++l) {
          sum += std::conj(bra(i)) * bra(l) *
                 op.entry(layout.insert_digit(j, r, i),
                          layout.insert_digit(k, r, l));
        }
      }
      out(j, k) = sum;
    }
  }
  return Operator(rest, std::move(out));
}

/// Operator L (x) M with the local factor L placed at register position r
/// and M covering the remaining registers in order.
inline Operator interleave(const Mat& local, int r, const Operator& rest) {
  const int d = static_cast<int>(local.rows());
  if (local.cols() != d) {
    throw std::invalid_argument("interleave: local factor must be square");
  }
  const RegisterLayout layout = rest.layout().with_inserted(r, d);
  Mat out(layout.total_dim(), layout.total_dim());
  for (int j = 0; j < rest.dim(); ++j) {
    for (int k = 0; k < rest.dim(); ++k) {
      for (int i = 0; i < d; ++i) {
        for (int l = 0; l < d; ++l) {
          out(layout.insert_digit(j, r, i), layout.insert_digit(k, r, l)) =
              local(i, l) * rest.entry(j, k);
        }
      }
    }
  }
  return Operator(layout, std::move(out));
}

/// Local operator acting on register r of `layout`, identity elsewhere.
inline Operator embed_local(const Mat& local, int r,
                            const RegisterLayout& layout) {
  if (r < 0 || r >= layout.registers()) {
    throw std::out_of_range("embed_local: register index out of range");
  }
  if (local.rows() != layout.local_dim(r) ||
      local.cols() != layout.local_dim(r)) {
    throw std::invalid_argument(
        "embed_local: local operator does not match register dimension");
  }
  return interleave(local, r, Operator::identity(layout.without(r)));
}

/// Kill every matrix element whose bra and ket digits differ at register r
/// (complete dephasing of that register in the computational basis).
inline Operator dephase_register(const Operator& op, int r) {
  const RegisterLayout& layout = op.layout();
  if (r < 0 || r >= layout.registers()) {
    throw std::out_of_range("dephase_register: register index out of range");
  }
  Mat out = op.matrix();
  for (int row = 0; row < layout.total_dim(); ++row) {
    for (int col = 0; col < layout.total_dim(); ++col) {
      if (layout.digit(row, r) != layout.digit(col, r)) out(row, col) = 0.0;
    }
  }
  return Operator(layout, std::move(out));
}

inline DensityOperator dephase_register(const DensityOperator& rho, int r) {
  const Operator out = dephase_register(rho.as_operator(), r);
  return DensityOperator(out.layout(), out.matrix());
}

/// Trace out the listed registers; the remaining registers keep their
/// relative order.  Tracing out everything is rejected (use trace()).
inline Operator partial_trace(const Operator& op,
                              std::vector<int> registers_to_trace) {
  const RegisterLayout& layout = op.layout();
  for (int r : registers_to_trace) {
    if (r < 0 || r >= layout.registers()) {
      throw std::out_of_range("partial_trace: register index out of range");
    }
  }
  std::sort(registers_to_trace.begin(), registers_to_trace.end());
  for (std::size_t i = 1; i < registers_to_trace.size(); ++i) {
    if (registers_to_trace[i] == registers_to_trace[i - 1]) {
      throw std::invalid_argument("partial_trace: duplicate register index");
    }
  }
  if (static_cast<int>(registers_to_trace.size()) == layout.registers()) {
    throw std::invalid_argument(
        "partial_trace: tracing out every register leaves no operator");
  }
  Operator current = op;
  // Remove from the highest index down so earlier positions stay valid.
  for (auto it = registers_to_trace.rbegin(); it != registers_to_trace.rend();
       ++it) {
    const RegisterLayout& cur = current.layout();
    const int r = *it;
    const int d = cur.local_dim(r);
    const RegisterLayout rest = cur.without(r);
    Mat out = Mat::Zero(rest.total_dim(), rest.total_dim());
    for (int j = 0; j < rest.total_dim(); ++j) {
      for (int k = 0; k < rest.total_dim(); ++k) {
        cplx sum = 0.0;
        for (int i = 0; i < d; ++i) {
          sum += current.entry(cur.insert_digit(j, r, i),
                               cur.insert_digit(k, r, i));
        }
        out(j, k) = sum;
      }
    }
    current = Operator(rest, std::move(out));
  }
  return current;
}

inline DensityOperator partial_trace(const DensityOperator& rho,
                                     const std::vector<int>& registers) {
  const Operator out = partial_trace(rho.as_operator(), registers);
  return DensityOperator(out.layout(), out.matrix());
}

/// Permutation that moves register `from` to position `to`, preserving the
/// relative order of all other registers.
inline StateVector move_register(const StateVector& v, int from, int to) {
  const RegisterLayout& layout = v.layout();
  const int d = layout.local_dim(from);
  const RegisterLayout target = layout.without(from).with_inserted(to, d);
  Vec out(v.dim());
  for (int j = 0; j < layout.total_dim() / d; ++j) {
    for (int i = 0; i < d; ++i) {
      out(target.insert_digit(j, to, i)) = v.amp(layout.insert_digit(j, from, i));
    }
  }
  return StateVector(target, std::move(out));
}

inline Operator move_register(const Operator& op, int from, int to) {
  const RegisterLayout& layout = op.layout();
  const int d = layout.local_dim(from);
  const RegisterLayout target = layout.without(from).with_inserted(to, d);
  Mat out(op.dim(), op.dim());
  const int rest_dim = layout.total_dim() / d;
  for (int j = 0; j < rest_dim; ++j) {
    for (int i = 0; i < d; ++i) {
      const int row_t = target.insert_digit(j, to, i);
      const int row_s = layout.insert_digit(j, from, i);
      for (int k = 0; k < rest_dim; ++k) {
        for (int l = 0; l < d; ++l) {
          out(row_t, target.insert_digit(k, to, l)) =
              op.entry(row_s, layout.insert_digit(k, from, l));
        }
      }
    }
  }
  return Operator(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Hilbert-Schmidt geometry
// ---------------------------------------------------------------------------

/// Tr(A^dagger B).
inline cplx hs_inner(const Operator& a, const Operator& b) {
  if (a.layout() != b.layout()) {
    throw std::invalid_argument("hs_inner: register layouts differ");
  }
  return (a.matrix().adjoint() * b.matrix()).trace();
}

inline double frobenius_distance(const Operator& a, const Operator& b) {
  if (a.layout() != b.layout()) {
    throw std::invalid_argument("frobenius_distance: register layouts differ");
  }
  return (a.matrix() - b.matrix()).norm();
}

inline double frobenius_distance(const DensityOperator& a,
                                 const DensityOperator& b) {
  return frobenius_distance(a.as_operator(), b.as_operator());
}

inline cplx expectation(const StateVector& psi, const Operator& op) {
  return inner(psi, op.apply(psi));
}

inline cplx expectation(const DensityOperator& rho, const Operator& op) {
  if (rho.layout() != op.layout()) {
    throw std::invalid_argument("expectation: register layouts differ");
  }
  return (rho.matrix() * op.matrix()).trace();
}

/// Dimension of the complex span of a family of operators, computed as the
/// rank of their Hilbert-Schmidt Gram matrix.  Eigenvalues below
/// tolerance * max(1, largest eigenvalue) count as zero.
inline int span_rank(const std::vector<Operator>& ops,
                     double tolerance = kDefaultTolerance) {
  if (ops.empty()) {
    throw std::invalid_argument("span_rank: empty operator list");
  }
  const int m = static_cast<int>(ops.size());
  Mat gram(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const cplx g = hs_inner(ops[i], ops[j]);
      gram(i, j) = g;
      gram(j, i) = std::conj(g);
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(gram);
  const double cutoff =
      tolerance * std::max(1.0, solver.eigenvalues().maxCoeff());
  int rank = 0;
  for (int i = 0; i < m; ++i) {
    if (solver.eigenvalues()(i) > cutoff) ++rank;
  }
  return rank;
}

}  // namespace qrf
