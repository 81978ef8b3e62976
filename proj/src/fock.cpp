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

#include "mixdense/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mixdense/errors.hpp"

namespace mixdense {

namespace {

double sqrt_factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return std::sqrt(f);
}

void prune(PureState::AmplitudeMap& amps) {
    std::erase_if(amps, [](const auto& kv) { return std::abs(kv.second) < kPruneTolerance; });
}

void require_same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    if (a != b && !(a && b && *a == *b)) {
        throw RegistryError("states live on different mode registries");
    }
}

std::vector<std::size_t> indices_of(const ModeRegistry& registry, std::span<const ModeLabel> modes) {
    std::vector<std::size_t> out;
    out.reserve(modes.size());
    for (const auto& m : modes) {
        out.push_back(registry.index_of(m));
    }
    return out;
}

}  // namespace

int FockBasisState::total() const { return std::accumulate(occupations.begin(), occupations.end(), 0); }

double PureState::norm_squared() const {
    double n = 0.0;
    for (const auto& [basis, amp] : amplitudes_) {
        n += std::norm(amp);
    }
    return n;
}

Complex PureState::amplitude(const FockBasisState& basis) const {
    auto it = amplitudes_.find(basis);
    return it == amplitudes_.end() ? Complex{} : it->second;
}

PureState PureState::from_amplitudes(RegistryPtr registry, AmplitudeMap amplitudes) {
    if (!registry) {
        throw RegistryError("null registry");
    }
    prune(amplitudes);
    if (amplitudes.empty()) {
        throw ValidationError("state has no nonzero amplitudes");
    }
    int photons = -1;
    double norm = 0.0;
    for (const auto& [basis, amp] : amplitudes) {
        if (basis.occupations.size() != registry->size()) {
            throw ValidationError("occupation vector length does not match registry size");
        }
        if (std::any_of(basis.occupations.begin(), basis.occupations.end(), [](int n) { return n < 0; })) {
            throw ValidationError("negative occupation number");
        }
        int total = basis.total();
        if (photons >= 0 && total != photons) {
            throw ValidationError("basis states with different photon numbers");
        }
        photons = total;
        norm += std::norm(amp);
    }
    norm = std::sqrt(norm);
    if (norm <= kNormTolerance) {
        throw ValidationError("cannot normalize a (near) zero vector");
    }
    for (auto& [basis, amp] : amplitudes) {
        amp /= norm;
    }
    return PureState(std::move(registry), std::move(amplitudes), photons);
}

double unitarity_defect(const Eigen::MatrixXcd& matrix) {
    if (matrix.rows() != matrix.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    Eigen::MatrixXcd d = matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols());
    return d.cwiseAbs().maxCoeff();
}

ModeUnitary::ModeUnitary(std::vector<ModeLabel> targets, Eigen::MatrixXcd matrix)
    : targets_(std::move(targets)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw ValidationError("element matrix is not square");
    }
    if (static_cast<std::size_t>(matrix_.rows()) != targets_.size()) {
        throw ValidationError("element matrix size does not match its target modes");
    }
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        for (std::size_t j = i + 1; j < targets_.size(); ++j) {
            if (targets_[i] == targets_[j]) {
                throw RegistryError("element targets mode twice: " + to_string(targets_[i]));
            }
        }
    }
    double defect = unitarity_defect(matrix_);
    if (!(defect < kUnitarityTolerance)) {
        throw ValidationError("element matrix is not unitary (defect " + std::to_string(defect) + ")");
    }
}

ModeUnitary ModeUnitary::adjoint() const { return ModeUnitary(targets_, matrix_.adjoint()); }

PureState make_state(const RegistryPtr& registry, std::span<const ModeLabel> creation_list) {
    if (!registry) {
        throw RegistryError("null registry");
    }
    FockBasisState basis{std::vector<int>(registry->size(), 0)};
    for (const auto& mode : creation_list) {
        ++basis.occupations[registry->index_of(mode)];
    }
    // (a^dagger)^n |0> / sqrt(n!) is already the normalized |n>, so the
    // amplitude on the occupation basis is exactly 1.
    return PureState::from_amplitudes(registry, {{std::move(basis), Complex{1.0, 0.0}}});
}

PureState make_state(const RegistryPtr& registry, std::initializer_list<ModeLabel> creation_list) {
    return make_state(registry, std::span<const ModeLabel>(creation_list.begin(), creation_list.size()));
}

PureState superpose(std::span<const std::pair<Complex, PureState>> terms) {
    if (terms.empty()) {
        throw ValidationError("superpose needs at least one term");
    }
    const auto& registry = terms.front().second.registry();
    const int photons = terms.front().second.photon_number();
    PureState::AmplitudeMap sum;
    for (const auto& [coeff, state] : terms) {
        require_same_registry(registry, state.registry());
        if (state.photon_number() != photons) {
            throw ValidationError("superposed states differ in photon number");
        }
        for (const auto& [basis, amp] : state.amplitudes()) {
            sum[basis] += coeff * amp;
        }
    }
    return PureState::from_amplitudes(registry, std::move(sum));
}

PureState superpose(std::initializer_list<std::pair<Complex, PureState>> terms) {
    return superpose(std::span<const std::pair<Complex, PureState>>(terms.begin(), terms.size()));
}

PureState apply_element(const PureState& state, const ModeUnitary& element) {
    const ModeRegistry& registry = *state.registry();
    const auto target_index = indices_of(registry, element.targets());
    const auto& u = element.matrix();

    // Position of each registry mode within the element, or -1.
    std::vector<int> local(registry.size(), -1);
    for (std::size_t j = 0; j < target_index.size(); ++j) {
        local[target_index[j]] = static_cast<int>(j);
    }

    PureState::AmplitudeMap out;
    std::vector<std::size_t> photons;
    FockBasisState scratch{std::vector<int>(registry.size(), 0)};

    for (const auto& [basis, amp] : state.amplitudes()) {
        // |n> = prod_m (a_m^dagger)^{n_m} / sqrt(n_m!) |0>: expand each creation
        // operator photon by photon.
        photons.clear();
        double norm_in = 1.0;
        for (std::size_t m = 0; m < basis.occupations.size(); ++m) {
            for (int c = 0; c < basis.occupations[m]; ++c) {
                photons.push_back(m);
            }
            norm_in *= sqrt_factorial(basis.occupations[m]);
        }
        const Complex prefactor = amp / norm_in;

        auto expand = [&](auto&& self, std::size_t p, Complex coeff) -> void {
            if (p == photons.size()) {
                double norm_out = 1.0;
                for (int n : scratch.occupations) {
                    norm_out *= sqrt_factorial(n);
                }
                out[scratch] += prefactor * coeff * norm_out;
                return;
            }
            const std::size_t m = photons[p];
            if (local[m] < 0) {
                ++scratch.occupations[m];
                self(self, p + 1, coeff);
                --scratch.occupations[m];
                return;
            }
            const auto j = static_cast<Eigen::Index>(local[m]);
            for (Eigen::Index k = 0; k < u.rows(); ++k) {
                const Complex entry = u(k, j);
                if (entry == Complex{}) {
                    continue;
                }
                const std::size_t mk = target_index[static_cast<std::size_t>(k)];
                ++scratch.occupations[mk];
                self(self, p + 1, coeff * entry);
                --scratch.occupations[mk];
            }
        };
        expand(expand, 0, Complex{1.0, 0.0});
    }
    prune(out);
    return PureState(state.registry(), std::move(out), state.photon_number());
}

Complex overlap(const PureState& lhs, const PureState& rhs) {
    require_same_registry(lhs.registry(), rhs.registry());
    Complex acc{};
    for (const auto& [basis, amp] : lhs.amplitudes()) {
        acc += std::conj(amp) * rhs.amplitude(basis);
    }
    return acc;
}

double fidelity(const PureState& lhs, const PureState& rhs) { return std::norm(overlap(lhs, rhs)); }

double OutcomeDistribution::total() const {
    double t = 0.0;
    for (const auto& [counts, p] : probabilities) {
        t += p;
    }
    return t;
}

double OutcomeDistribution::probability(const ModeCounts& counts) const {
    auto it = probabilities.find(counts);
    return it == probabilities.end() ? 0.0 : it->second;
}

OutcomeDistribution outcome_distribution(const PureState& state, std::span<const ModeLabel> detectors) {
    const ModeRegistry& registry = *state.registry();
    const auto det_index = indices_of(registry, detectors);
    std::vector<bool> detected(registry.size(), false);
    for (auto i : det_index) {
        detected[i] = true;
    }

    OutcomeDistribution dist;
    dist.detectors.assign(detectors.begin(), detectors.end());
    ModeCounts counts(det_index.size());
    for (const auto& [basis, amp] : state.amplitudes()) {
        for (std::size_t m = 0; m < basis.occupations.size(); ++m) {
            if (basis.occupations[m] != 0 && !detected[m]) {
                throw CoverageError("photons on undetected mode " + to_string(registry.at(m)));
            }
        }
        for (std::size_t d = 0; d < det_index.size(); ++d) {
            counts[d] = basis.occupations[det_index[d]];
        }
        dist.probabilities[counts] += std::norm(amp);
    }
    return dist;
}

OutcomeDistribution marginal_distribution(const PureState& state, std::span<const ModeLabel> modes) {
    const auto idx = indices_of(*state.registry(), modes);
    OutcomeDistribution dist;
    dist.detectors.assign(modes.begin(), modes.end());
    ModeCounts counts(idx.size());
    for (const auto& [basis, amp] : state.amplitudes()) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            counts[i] = basis.occupations[idx[i]];
        }
        dist.probabilities[counts] += std::norm(amp);
    }
    return dist;
}

ModeCounts sample_outcome(const OutcomeDistribution& distribution, RngStream& rng) {
    if (distribution.probabilities.empty()) {
        throw ValidationError("cannot sample from an empty distribution");
    }
    if (std::abs(distribution.total() - 1.0) > kDistributionTolerance) {
        throw ValidationError("distribution does not sum to 1");
    }
    const double u = rng.uniform();
    double cumulative = 0.0;
    const ModeCounts* last_supported = nullptr;
    for (const auto& [counts, p] : distribution.probabilities) {
        if (p <= 0.0) {
            continue;
        }
        cumulative += p;
        last_supported = &counts;
        if (u < cumulative) {
            return counts;
        }
    }
    // Rounding left u just above the final cumulative sum.
    return *last_supported;
}

ConditionedState condition_on(const PureState& state, std::span<const ModeLabel> modes, const ModeCounts& counts,
                              bool absorb) {
    if (counts.size() != modes.size()) {
        throw ValidationError("condition_on: counts and modes differ in length");
    }
    const ModeRegistry& registry = *state.registry();
    const auto idx = indices_of(registry, modes);

    PureState::AmplitudeMap kept;
    double probability = 0.0;
    for (const auto& [basis, amp] : state.amplitudes()) {
        bool match = true;
        for (std::size_t i = 0; i < idx.size() && match; ++i) {
            match = basis.occupations[idx[i]] == counts[i];
        }
        if (!match) {
            continue;
        }
        probability += std::norm(amp);
        FockBasisState b = basis;
        if (absorb) {
            for (auto i : idx) {
                b.occupations[i] = 0;
            }
        }
        kept[std::move(b)] += amp;
    }

    ConditionedState result;
    result.probability = probability;
    if (probability > kPruneTolerance * kPruneTolerance) {
        const double norm = std::sqrt(probability);
        for (auto& [basis, amp] : kept) {
            amp /= norm;
        }
        const int removed = absorb ? std::accumulate(counts.begin(), counts.end(), 0) : 0;
        prune(kept);
        result.state = PureState(state.registry(), std::move(kept), state.photon_number() - removed);
    }
    return result;
}

}  // namespace mixdense
