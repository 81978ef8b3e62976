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

#include "mixdense/optics.hpp"

#include <cmath>
#include <numbers>

#include "mixdense/errors.hpp"

namespace mixdense::optics {

namespace {

constexpr Polarization kH = Polarization::H;
constexpr Polarization kV = Polarization::V;

void require_distinct(Path a, Path b, const char* what) {
    if (a == b) {
        throw ValidationError(std::string(what) + ": paths must differ, got " + to_string(a) + " twice");
    }
}

// Permutation exchanging each listed index pair of `targets`; other targets stay.
ModeUnitary permutation(std::vector<ModeLabel> targets, const std::vector<std::pair<int, int>>& swaps) {
    const auto n = static_cast<Eigen::Index>(targets.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    for (auto [i, j] : swaps) {
        m(i, i) = 0.0;
        m(j, j) = 0.0;
        m(i, j) = 1.0;
        m(j, i) = 1.0;
    }
    return ModeUnitary(std::move(targets), std::move(m));
}

}  // namespace

ModeUnitary beam_splitter(Path path_a, Path path_b) {
    require_distinct(path_a, path_b, "beam_splitter");
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex i{0.0, 1.0};
    // Target order: aH, bH, aV, bV.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    for (int block : {0, 2}) {
        m(block, block) = r;
        m(block + 1, block) = i * r;
        m(block, block + 1) = i * r;
        m(block + 1, block + 1) = r;
    }
    return ModeUnitary({{path_a, kH}, {path_b, kH}, {path_a, kV}, {path_b, kV}}, std::move(m));
}

ModeUnitary pbs(Path path_1, Path path_2) {
    require_distinct(path_1, path_2, "pbs");
    return permutation({{path_1, kH}, {path_2, kH}, {path_1, kV}, {path_2, kV}}, {{2, 3}});
}

ModeUnitary hwp(double theta_degrees, Path path) {
    if (!(theta_degrees >= 0.0 && theta_degrees < 180.0)) {
        throw ValidationError("hwp angle must lie in [0, 180) degrees");
    }
    const double two_theta = 2.0 * theta_degrees * std::numbers::pi / 180.0;
    double c = std::cos(two_theta);
    double s = std::sin(two_theta);
    // Snap the cardinal angles so HWP(0) and HWP(45) are exact permutations/signs.
    if (std::abs(c) < 1e-15) c = 0.0;
    if (std::abs(s) < 1e-15) s = 0.0;
    Eigen::MatrixXcd m(2, 2);
    m << c, s, s, -c;
    return ModeUnitary({{path, kH}, {path, kV}}, std::move(m));
}

ModeUnitary polarizer_monitor(Path path, Polarization orientation, Path monitor_path) {
    require_distinct(path, monitor_path, "polarizer_monitor");
    if (monitor_path == Path::Bob || monitor_path == Path::AnalyzerOutA || monitor_path == Path::AnalyzerOutB) {
        throw ValidationError("polarizer_monitor: monitor path " + to_string(monitor_path) +
                              " collides with the analyzer");
    }
    const Polarization rejected = orientation == kH ? kV : kH;
    return permutation({{path, rejected}, {monitor_path, rejected}}, {{0, 1}});
}

ModeUnitary path_swap(Path path_1, Path path_2) {
    require_distinct(path_1, path_2, "path_swap");
    return permutation({{path_1, kH}, {path_2, kH}, {path_1, kV}, {path_2, kV}}, {{0, 1}, {2, 3}});
}

ModeUnitary build(const ElementSpec& spec) {
    const auto need_paths = [&](std::size_t n) {
        if (spec.paths.size() != n) {
            throw ValidationError("element expects " + std::to_string(n) + " path(s), got " +
                                  std::to_string(spec.paths.size()));
        }
    };
    if (spec.orientation && spec.kind != ElementKind::PolarizerMonitor) {
        throw ValidationError("orientation is only defined for a polarizer");
    }
    switch (spec.kind) {
        case ElementKind::BeamSplitter:
            need_paths(2);
            return beam_splitter(spec.paths[0], spec.paths[1]);
        case ElementKind::PBS:
            need_paths(2);
            return pbs(spec.paths[0], spec.paths[1]);
        case ElementKind::HalfWavePlate:
            need_paths(1);
            return hwp(spec.theta_degrees, spec.paths[0]);
        case ElementKind::PolarizerMonitor:
            need_paths(1);
            if (!spec.orientation || !spec.monitor_path) {
                throw ValidationError("polarizer needs an orientation and a monitor path");
            }
            return polarizer_monitor(spec.paths[0], *spec.orientation, *spec.monitor_path);
    }
    throw ValidationError("unknown element kind");
}

}  // namespace mixdense::optics
