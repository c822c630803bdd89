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

/// Umbrella header: quantum reference frames on finite cyclic groups.
///
/// Layer order (each header includes the ones above it):
///   layout   - register-indexed tensor factor bookkeeping
///   linalg   - dense states, operators, densities, register-level maps
///   group    - cyclic shift action, charge sectors, Fourier vectors
///   twirl    - incoherent/coherent group averaging
///   random   - portable seeded generators for states and operators
///   frames   - ideal frames, relative states, reduction/reconstruction,
///              relativisation, framed observables, dephasing
///   approaches - the three frame-change routes and their comparison
///   render   - exact-form pretty printing
///   report   - check records, JSON/text report emission
///   scenario - the worked example, comparison, and fuzz drivers

#pragma once

#include "qrf/approaches.hpp"
#include "qrf/errors.hpp"
#include "qrf/frames.hpp"
#include "qrf/group.hpp"
#include "qrf/layout.hpp"
#include "qrf/linalg.hpp"
#include "qrf/random.hpp"
#include "qrf/render.hpp"
#include "qrf/report.hpp"
#include "qrf/scenario.hpp"
#include "qrf/twirl.hpp"
