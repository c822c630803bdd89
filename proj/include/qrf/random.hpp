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
#include <cstdint>
#include <numbers>
#include <random>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/twirl.hpp"

namespace qrf {

/// Seeded random source for property checks and fuzzing.
///
/// Uses MT19937-64, whose output sequence is fixed by the C++ standard, and
/// a hand-rolled Box-Muller transform for Gaussians (std::normal_distribution
/// is implementation-defined, which would make reports differ across standard
/// libraries).  Given the same seed, the produced states and operators are
/// bit-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi] via rejection sampling (unbiased and
  /// portable, unlike std::uniform_int_distribution).
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  /// Standard complex normal (unit variance overall).
  cplx complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return cplx(re, im) / std::sqrt(2.0);
  }

  Vec gaussian_vector(int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_gaussian();
    return v;
  }

  /// Haar-ish random unit vector (Gaussian direction, normalized).
  StateVector unit_vector(const RegisterLayout& layout) {
    return StateVector(layout, gaussian_vector(layout.total_dim())).normalized();
  }

  /// Random unit vector inside charge sector k (projected, renormalized).
  StateVector sector_vector(const RegisterLayout& layout,
                            const ChargeSector& sector) {
    for (;;) {
      const StateVector candidate =
          coherent_twirl(unit_vector(layout), sector);
      if (candidate.norm() > 1e-6) return candidate.normalized();
    }
  }

  /// Random operator with independent complex Gaussian entries.
  Operator operator_on(const RegisterLayout& layout) {
    const int d = layout.total_dim();
    Mat m(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) m(i, j) = complex_gaussian();
    }
    return Operator(layout, std::move(m));
  }

  Operator hermitian_on(const RegisterLayout& layout) {
    const Operator a = operator_on(layout);
    return Operator(layout, 0.5 * (a.matrix() + a.matrix().adjoint()));
  }

  /// Random full-rank density operator A A^dagger / Tr.
  DensityOperator density_on(const RegisterLayout& layout) {
    const Operator a = operator_on(layout);
    Mat m = a.matrix() * a.matrix().adjoint();
    m /= m.trace();
    return DensityOperator(layout, std::move(m));
  }

  /// Random shift-invariant density operator (a random density, twirled).
  DensityOperator invariant_density_on(const RegisterLayout& layout,
                                       const CyclicGroup& group) {
    return incoherent_twirl(density_on(layout), group);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qrf
