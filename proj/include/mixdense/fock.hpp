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

#pragma once

#include <complex>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mixdense/modes.hpp"
#include "mixdense/rng.hpp"

namespace mixdense {

using Complex = std::complex<double>;

inline constexpr double kPruneTolerance = 1e-14;
inline constexpr double kUnitarityTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kDistributionTolerance = 1e-9;

/// Occupation numbers, one per registry mode.
struct FockBasisState {
    std::vector<int> occupations;

    int total() const;
    auto operator<=>(const FockBasisState&) const = default;
};

class ModeUnitary;
struct ConditionedState;

/// Normalized superposition of Fock basis states with a fixed photon number.
///
/// Amplitudes below kPruneTolerance in magnitude are dropped. The global
/// phase is kept as computed; compare states with fidelity(), never with ==.
class PureState {
public:
    using AmplitudeMap = std::map<FockBasisState, Complex>;

    const RegistryPtr& registry() const { return registry_; }
    const AmplitudeMap& amplitudes() const { return amplitudes_; }
    int photon_number() const { return photons_; }
    double norm_squared() const;
    Complex amplitude(const FockBasisState& basis) const;

    /// Builds a state from raw amplitudes. Prunes, checks one photon number
    /// and occupation length, and normalizes. Throws ValidationError on a
    /// zero vector or inconsistent basis states.
    static PureState from_amplitudes(RegistryPtr registry, AmplitudeMap amplitudes);

private:
    PureState(RegistryPtr registry, AmplitudeMap amplitudes, int photons)
        : registry_(std::move(registry)), amplitudes_(std::move(amplitudes)), photons_(photons) {}

    friend PureState apply_element(const PureState& state, const ModeUnitary& element);
    friend ConditionedState condition_on(const PureState& state, std::span<const ModeLabel> modes,
                                         const std::vector<int>& counts, bool absorb);

    RegistryPtr registry_;
    AmplitudeMap amplitudes_;
    int photons_ = 0;
};

/// Largest elementwise deviation of U^dagger U from the identity.
double unitarity_defect(const Eigen::MatrixXcd& matrix);

/// Unitary scattering matrix of one linear-optics element.
///
/// Column j holds the image of the creation operator of target mode j:
/// a_j^dagger -> sum_k matrix(k, j) a_k^dagger.
class ModeUnitary {
public:
    /// Throws ValidationError for a non-square or non-unitary matrix, or a
    /// size mismatch, and RegistryError for repeated target modes.
    ModeUnitary(std::vector<ModeLabel> targets, Eigen::MatrixXcd matrix);

    std::span<const ModeLabel> targets() const { return targets_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    ModeUnitary adjoint() const;

private:
    std::vector<ModeLabel> targets_;
    Eigen::MatrixXcd matrix_;
};

/// Fock state with one photon created per listed mode, repeats accumulating.
PureState make_state(const RegistryPtr& registry, std::span<const ModeLabel> creation_list);
PureState make_state(const RegistryPtr& registry, std::initializer_list<ModeLabel> creation_list);

/// Normalized linear combination. All terms must share one registry and
/// photon number.
PureState superpose(std::span<const std::pair<Complex, PureState>> terms);
PureState superpose(std::initializer_list<std::pair<Complex, PureState>> terms);

PureState apply_element(const PureState& state, const ModeUnitary& element);

/// <lhs|rhs>.
Complex overlap(const PureState& lhs, const PureState& rhs);
/// |<lhs|rhs>|^2.
double fidelity(const PureState& lhs, const PureState& rhs);

/// Photon counts on an ordered list of detector modes.
using ModeCounts = std::vector<int>;

struct OutcomeDistribution {
    std::vector<ModeLabel> detectors;
    std::map<ModeCounts, double> probabilities;

    double total() const;
    double probability(const ModeCounts& counts) const;
};

/// Exact photon-number-resolved detection statistics. Throws CoverageError
/// when any photon can be found outside `detectors`.
OutcomeDistribution outcome_distribution(const PureState& state, std::span<const ModeLabel> detectors);

/// Detection statistics of a subset of modes, with every other mode left
/// unobserved. No coverage requirement.
OutcomeDistribution marginal_distribution(const PureState& state, std::span<const ModeLabel> modes);

/// Inverse-CDF draw over the map's key order. Throws ValidationError on an
/// empty distribution or one that does not sum to 1 within 1e-9.
ModeCounts sample_outcome(const OutcomeDistribution& distribution, RngStream& rng);

struct ConditionedState {
    double probability = 0.0;
    /// Absent when the outcome has zero probability.
    std::optional<PureState> state;
};

/// Projects onto `counts` photons in `modes` (a photon-number measurement of
/// those modes). With `absorb`, the detected photons are removed and the
/// remaining state has correspondingly fewer photons.
ConditionedState condition_on(const PureState& state, std::span<const ModeLabel> modes,
                              const ModeCounts& counts, bool absorb);

}  // namespace mixdense
