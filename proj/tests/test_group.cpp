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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

#include "qrf/errors.hpp"
#include "qrf/group.hpp"

namespace qrf {
namespace {

constexpr double kEps = 1e-13;

TEST(CyclicGroup, OmegaIsThePrimitiveRoot) {
  EXPECT_THROW(CyclicGroup(1), std::invalid_argument);
  const CyclicGroup four(4);
  EXPECT_EQ(four.order(), 4);
  EXPECT_NEAR(std::abs(four.omega(1) - cplx(0.0, 1.0)), 0.0, kEps);
  EXPECT_NEAR(std::abs(four.omega(2) - cplx(-1.0, 0.0)), 0.0, kEps);
  // Exponents reduce mod N, including negative ones.
  EXPECT_NEAR(std::abs(four.omega(-1) - four.omega(3)), 0.0, kEps);
  EXPECT_NEAR(std::abs(four.omega(6) - four.omega(2)), 0.0, kEps);
  EXPECT_TRUE(four == CyclicGroup(4));
  EXPECT_TRUE(four != CyclicGroup(2));
}

TEST(GroupElement, ReducesModuloTheOrder) {
  const CyclicGroup three(3);
  EXPECT_EQ(GroupElement(three, -1).value(), 2);
  EXPECT_EQ(GroupElement(three, 7).value(), 1);
  EXPECT_EQ(GroupElement(three, 2).inverse().value(), 1);
  EXPECT_EQ((GroupElement(three, 2) + GroupElement(three, 2)).value(), 1);
  EXPECT_THROW(GroupElement(three, 0) + GroupElement(CyclicGroup(2), 0),
               std::invalid_argument);
  EXPECT_EQ(ChargeSector(three, -2).k(), 1);
}

TEST(ShiftOperator, IsTheCyclicPermutation) {
  const Operator x2 = shift_operator(CyclicGroup(2));
  Mat pauli_x(2, 2);
  pauli_x << 0, 1, 1, 0;
  EXPECT_NEAR((x2.matrix() - pauli_x).norm(), 0.0, kEps);

  const Operator x3 = shift_operator(CyclicGroup(3));
  EXPECT_TRUE(x3.is_unitary());
  for (int j = 0; j < 3; ++j) {
    const StateVector out = x3.apply(StateVector::basis(x3.layout(), j));
    EXPECT_NEAR(std::abs(out.amp((j + 1) % 3) - 1.0), 0.0, kEps);
  }
}

TEST(FourierVector, MatchesHandExpansion) {
  // N = 2: the characters are |+> and |->.
  const CyclicGroup two(2);
  const StateVector chi0 = fourier_vector(ChargeSector(two, 0));
  const StateVector chi1 = fourier_vector(ChargeSector(two, 1));
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(chi0.amp(0) - r), 0.0, kEps);
  EXPECT_NEAR(std::abs(chi0.amp(1) - r), 0.0, kEps);
  EXPECT_NEAR(std::abs(chi1.amp(0) - r), 0.0, kEps);
  EXPECT_NEAR(std::abs(chi1.amp(1) + r), 0.0, kEps);

  // N = 3, k = 1: amplitudes (1, omega^-1, omega^-2)/sqrt(3).
  const CyclicGroup three(3);
  const StateVector chi = fourier_vector(ChargeSector(three, 1));
  const double s = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(std::abs(chi.amp(0) - s), 0.0, kEps);
  EXPECT_NEAR(std::abs(chi.amp(1) - s * three.omega(-1)), 0.0, kEps);
  EXPECT_NEAR(std::abs(chi.amp(2) - s * three.omega(-2)), 0.0, kEps);
}

TEST(FourierVector, DiagonalizesTheShift) {
  // X chi_k = omega^k chi_k for every k: the sign convention that fixes
  // every other phase in the library.
  for (int n : {2, 3, 5}) {
    const CyclicGroup group(n);
    const Operator x = shift_operator(group);
    for (int k = 0; k < n; ++k) {
      const StateVector chi = fourier_vector(ChargeSector(group, k));
      const StateVector shifted = x.apply(chi);
      EXPECT_NEAR((shifted - group.omega(k) * chi).norm(), 0.0, kEps)
          << "N=" << n << " k=" << k;
    }
    // Orthonormal basis.
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        const cplx overlap = inner(fourier_vector(ChargeSector(group, k)),
                                   fourier_vector(ChargeSector(group, l)));
        EXPECT_NEAR(std::abs(overlap - (k == l ? 1.0 : 0.0)), 0.0, kEps);
      }
    }
  }
}

TEST(FourierVector, AgreesWithEigenSolver) {
  // Independent cross-check at N = 3: feed the raw shift matrix to Eigen's
  // general eigensolver and match each eigenpair against (omega^k, chi_k).
  const CyclicGroup three(3);
  const Mat x = shift_operator(three).matrix();
  Eigen::ComplexEigenSolver<Mat> solver(x);
  ASSERT_EQ(solver.info(), Eigen::Success);
  for (int i = 0; i < 3; ++i) {
    const cplx lambda = solver.eigenvalues()(i);
    int k = -1;
    for (int c = 0; c < 3; ++c) {
      if (std::abs(lambda - three.omega(c)) < 1e-9) k = c;
    }
    ASSERT_NE(k, -1) << "eigenvalue " << lambda << " is not a root of unity";
    const Vec v = solver.eigenvectors().col(i).normalized();
    const Vec chi = fourier_vector(ChargeSector(three, k)).amplitudes();
    // Same ray: |<chi|v>| = 1.
    EXPECT_NEAR(std::abs(chi.dot(v)), 1.0, 1e-9);
  }
}

TEST(GlobalUnitary, ShiftsEveryDigit) {
  const CyclicGroup two(2);
  const RegisterLayout three = RegisterLayout::uniform(3, 2);
  const Operator u = global_unitary(GroupElement(two, 1), three);
  // (X (x) X (x) X)|011> = |100>.
  const StateVector out = u.apply(StateVector::basis(three, 3));
  EXPECT_NEAR(std::abs(out.amp(4) - 1.0), 0.0, kEps);
  EXPECT_TRUE(u.is_unitary());
  EXPECT_NEAR(frobenius_distance(global_unitary(GroupElement(two, 0), three),
                                 Operator::identity(three)),
              0.0, kEps);
  // U_g U_h = U_{g+h}.
  const CyclicGroup three_g(3);
  const RegisterLayout pair = RegisterLayout::uniform(2, 3);
  const Operator u1 = global_unitary(GroupElement(three_g, 1), pair);
  const Operator u2 = global_unitary(GroupElement(three_g, 2), pair);
  EXPECT_NEAR(frobenius_distance(u1 * u2, Operator::identity(pair)), 0.0,
              kEps);

  EXPECT_THROW(global_unitary(GroupElement(two, 1), RegisterLayout({2, 3})),
               std::invalid_argument);
  EXPECT_THROW(global_unitary(GroupElement(three_g, 1), three),
               std::invalid_argument);
}

TEST(ChargeProjector, MatchesHandBuiltResolution) {
  // N = 2, two registers: Pi_0 = (I + XX)/2 and Pi_1 = (I - XX)/2.
  const CyclicGroup two(2);
  const RegisterLayout pair = RegisterLayout::uniform(2, 2);
  const Operator pi0 = charge_projector(ChargeSector(two, 0), pair);
  const Operator pi1 = charge_projector(ChargeSector(two, 1), pair);
  const Operator xx = global_unitary(GroupElement(two, 1), pair);
  const Operator id = Operator::identity(pair);
  EXPECT_NEAR(frobenius_distance(pi0, cplx(0.5, 0) * (id + xx)), 0.0, kEps);
  EXPECT_NEAR(frobenius_distance(pi1, cplx(0.5, 0) * (id - xx)), 0.0, kEps);
}

TEST(ChargeProjector, ResolvesTheIdentity) {
  for (int n : {2, 3}) {
    for (int registers : {2, 3}) {
      const CyclicGroup group(n);
      const RegisterLayout layout = RegisterLayout::uniform(registers, n);
      Operator sum = Operator::zero(layout);
      for (int k = 0; k < n; ++k) {
        const Operator pi = charge_projector(ChargeSector(group, k), layout);
        EXPECT_TRUE(pi.is_hermitian());
        // Pi_k Pi_l = delta_kl Pi_k.
        for (int l = 0; l < n; ++l) {
          const Operator pl = charge_projector(ChargeSector(group, l), layout);
          const Operator expected = k == l ? pi : Operator::zero(layout);
          EXPECT_NEAR(frobenius_distance(pi * pl, expected), 0.0, 1e-12)
              << "N=" << n << " registers=" << registers;
        }
        // Every sector has dimension N^(registers-1).
        const double expected_rank = std::pow(n, registers - 1);
        EXPECT_NEAR(pi.trace().real(), expected_rank, 1e-12);
        // U_g Pi_k = omega^{kg} Pi_k.
        const Operator u = global_unitary(GroupElement(group, 1), layout);
        EXPECT_NEAR(frobenius_distance(u * pi, group.omega(k) * pi), 0.0,
                    1e-12);
        sum = sum + pi;
      }
      EXPECT_NEAR(frobenius_distance(sum, Operator::identity(layout)), 0.0,
                  1e-12);
    }
  }
}

TEST(InvarianceResidual, ZeroExactlyOnInvariantStates) {
  const CyclicGroup two(2);
  const RegisterLayout pair = RegisterLayout::uniform(2, 2);
  EXPECT_NEAR(invariance_residual(DensityOperator::maximally_mixed(pair), two),
              0.0, kEps);
  // |01><01| maps to |10><10| under the collective flip: distance sqrt(2).
  const DensityOperator basis01 =
      DensityOperator::from_pure(StateVector::basis(pair, 1));
  EXPECT_NEAR(invariance_residual(basis01, two), std::sqrt(2.0), kEps);
}

TEST(ChargeWeights, UniformOnTheTwirledOrigin) {
  const CyclicGroup two(2);
  const RegisterLayout pair = RegisterLayout::uniform(2, 2);
  // (|00><00| + |11><11|)/2 splits evenly between the two sectors.
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  const std::vector<double> w = charge_weights(DensityOperator(pair, m), two);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w[0], 0.5, kEps);
  EXPECT_NEAR(w[1], 0.5, kEps);

  const DensityOperator basis01 =
      DensityOperator::from_pure(StateVector::basis(pair, 1));
  EXPECT_THROW(charge_weights(basis01, two), invariance_error);
}

TEST(SectorWeights, SplitsPureStates) {
  const CyclicGroup two(2);
  const RegisterLayout pair = RegisterLayout::uniform(2, 2);
  const double r = 1.0 / std::sqrt(2.0);

  Vec bell_plus = Vec::Zero(4);
  bell_plus(0) = r;
  bell_plus(3) = r;
  const std::vector<double> w0 = sector_weights(StateVector(pair, bell_plus), two);
  EXPECT_NEAR(w0[0], 1.0, kEps);
  EXPECT_NEAR(w0[1], 0.0, kEps);

  Vec bell_minus = Vec::Zero(4);
  bell_minus(0) = r;
  bell_minus(3) = -r;
  const std::vector<double> w1 =
      sector_weights(StateVector(pair, bell_minus), two);
  EXPECT_NEAR(w1[0], 0.0, kEps);
  EXPECT_NEAR(w1[1], 1.0, kEps);

  const std::vector<double> wb =
      sector_weights(StateVector::basis(pair, 0), two);
  EXPECT_NEAR(wb[0], 0.5, kEps);
  EXPECT_NEAR(wb[1], 0.5, kEps);
}

}  // namespace
}  // namespace qrf
