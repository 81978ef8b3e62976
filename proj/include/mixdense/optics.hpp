// Copyright 2026 The mixdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Linear-optics elements as mode unitaries on (path, polarization) modes.

#pragma once

#include <optional>
#include <vector>

#include "mixdense/fock.hpp"
#include "mixdense/modes.hpp"

namespace mixdense::optics {

/// Symmetric, polarization-preserving 50/50 beam splitter:
///   a^dagger -> (a^dagger + i b^dagger)/sqrt2,  b^dagger -> (i a^dagger + b^dagger)/sqrt2
/// on the H pair and, independently, on the V pair.
ModeUnitary beam_splitter(Path path_a, Path path_b);

/// Polarizing beam splitter: H stays on its path, V swaps paths. Real
/// permutation, reflection phase +1.
ModeUnitary pbs(Path path_1, Path path_2);

/// Half-wave plate with Jones matrix [[cos 2t, sin 2t], [sin 2t, -cos 2t]]
/// acting on (H, V) of `path`. Requires 0 <= theta_degrees < 180.
ModeUnitary hwp(double theta_degrees, Path path);

/// PBS-type polarizer whose rejected port feeds a monitor detector. The
/// `orientation` component stays on `path`; the orthogonal component is
/// swapped onto `monitor_path`. The monitor may not be `path`, Bob's path or
/// an analyzer output.
ModeUnitary polarizer_monitor(Path path, Polarization orientation, Path monitor_path);

/// Exchanges both polarization modes of two paths (a routing mirror).
ModeUnitary path_swap(Path path_1, Path path_2);

enum class ElementKind { BeamSplitter, PBS, HalfWavePlate, PolarizerMonitor };

/// Declarative description of one element, validated by build().
struct ElementSpec {
    ElementKind kind;
    std::vector<Path> paths;
    double theta_degrees = 0.0;
    std::optional<Polarization> orientation;
    std::optional<Path> monitor_path;
};

/// Throws ValidationError when the spec's parameters do not fit its kind.
ModeUnitary build(const ElementSpec& spec);

}  // namespace mixdense::optics
