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

#include <stdexcept>
#include <string>

namespace qrf {

/// An operation required a symmetry-invariant input (invariant density
/// operator or single-sector vector) and the argument was not invariant
/// within tolerance.  Callers holding generic states should twirl or
/// project first.
class invariance_error : public std::runtime_error {
 public:
  explicit invariance_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// A frame contraction produced a (near-)zero vector: the state has no
/// support on the frame's seed orientation, so no relative description
/// exists.  Distinct from invariance_error so callers can tell "wrong
/// kind of state" apart from "state invisible to this frame".
class contraction_error : public std::runtime_error {
 public:
  explicit contraction_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// A change of description was requested for data whose underlying global
/// state lies outside the physical (charge-zero) sector of the formalism
/// being applied.
class physical_state_error : public std::runtime_error {
 public:
  explicit physical_state_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qrf
