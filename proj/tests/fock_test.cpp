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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mixdense/errors.hpp"
#include "mixdense/optics.hpp"
#include "oracle.hpp"

using namespace mixdense;

namespace {

constexpr ModeLabel aH{Path::Alice, Polarization::H};
constexpr ModeLabel aV{Path::Alice, Polarization::V};
constexpr ModeLabel bH{Path::Bob, Polarization::H};
constexpr ModeLabel bV{Path::Bob, Polarization::V};
constexpr std::array<ModeLabel, 4> kPair{aH, aV, bH, bV};
const double kR = 1.0 / std::numbers::sqrt2;

RegistryPtr registry4() { return ModeRegistry::from_paths({Path::Alice, Path::Bob}); }

FockBasisState occ(std::vector<int> v) { return FockBasisState{std::move(v)}; }

PureState psi(const RegistryPtr& reg, double sign) {
    return superpose({{kR, make_state(reg, {aH, bV})}, {sign * kR, make_state(reg, {aV, bH})}});
}

Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace

TEST(MakeState, product_ket) {
    auto reg = registry4();
    auto s = make_state(reg, {aH, bH});
    ASSERT_EQ(s.amplitudes().size(), 1u);
    EXPECT_EQ(s.amplitude(occ({1, 0, 1, 0})), Complex(1.0, 0.0));
    EXPECT_EQ(s.photon_number(), 2);
}

TEST(MakeState, repeated_label_accumulates) {
    auto reg = registry4();
    auto s = make_state(reg, {aH, aH});
    EXPECT_EQ(s.amplitude(occ({2, 0, 0, 0})), Complex(1.0, 0.0));
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(MakeState, unknown_mode_is_registry_error) {
    auto reg = registry4();
    EXPECT_THROW(make_state(reg, {aH, ModeLabel{Path::MonitorD, Polarization::H}}), RegistryError);
    EXPECT_THROW(ModeRegistry({aH, aH}), RegistryError);
}

TEST(Superpose, psi_plus_and_minus) {
    auto reg = registry4();
    for (double sign : {1.0, -1.0}) {
        auto s = psi(reg, sign);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(s.amplitude(occ({1, 0, 0, 1})) - kR), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(s.amplitude(occ({0, 1, 1, 0})) - sign * kR), 0.0, 1e-15);
    }
    EXPECT_NEAR(fidelity(psi(reg, 1.0), psi(reg, -1.0)), 0.0, 1e-15);
}

TEST(Superpose, zero_coefficient_term_is_pruned) {
    auto reg = registry4();
    auto s = superpose({{1.0, make_state(reg, {aH, bH})}, {0.0, make_state(reg, {aV, bV})}});
    EXPECT_EQ(s.amplitudes().size(), 1u);
    EXPECT_NEAR(fidelity(s, make_state(reg, {aH, bH})), 1.0, 1e-15);
}

TEST(Superpose, phi_minus) {
    auto reg = registry4();
    auto s = superpose({{kR, make_state(reg, {aH, bH})}, {-kR, make_state(reg, {aV, bV})}});
    EXPECT_NEAR(std::real(s.amplitude(occ({1, 0, 1, 0}))), kR, 1e-15);
    EXPECT_NEAR(std::real(s.amplitude(occ({0, 1, 0, 1}))), -kR, 1e-15);
}

TEST(Superpose, errors) {
    auto reg = registry4();
    auto other = ModeRegistry::from_paths({Path::Alice, Path::MonitorD});
    EXPECT_THROW(superpose({{1.0, make_state(reg, {aH, bH})}, {1.0, make_state(other, {aH, aV})}}), RegistryError);
    EXPECT_THROW(superpose({{1.0, make_state(reg, {aH, bH})}, {-1.0, make_state(reg, {aH, bH})}}), ValidationError);
    EXPECT_THROW(superpose({{1.0, make_state(reg, {aH, bH})}, {1.0, make_state(reg, {aH})}}), ValidationError);
}

TEST(ApplyElement, hom_bunching_amplitudes) {
    auto reg = registry4();
    auto out = apply_element(make_state(reg, {aH, bH}), optics::beam_splitter(Path::Alice, Path::Bob));
    // (a+ib)(ia+b)/2 = i(a^2 + b^2)/2, and a^2|0> = sqrt2 |2>.
    EXPECT_NEAR(std::abs(out.amplitude(occ({2, 0, 0, 0})) - Complex(0.0, kR)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitude(occ({0, 0, 2, 0})) - Complex(0.0, kR)), 0.0, 1e-15);
    EXPECT_EQ(out.amplitude(occ({1, 0, 1, 0})), Complex{});
    EXPECT_EQ(out.amplitudes().size(), 2u);
}

TEST(ApplyElement, identity_leaves_state) {
    auto reg = registry4();
    auto s = psi(reg, -1.0);
    ModeUnitary id({aH, aV, bH, bV}, Eigen::MatrixXcd::Identity(4, 4));
    auto out = apply_element(s, id);
    EXPECT_EQ(out.amplitudes(), s.amplitudes());
}

TEST(ApplyElement, psi_minus_stays_split) {
    auto reg = registry4();
    auto out = apply_element(psi(reg, -1.0), optics::beam_splitter(Path::Alice, Path::Bob));
    auto dist = outcome_distribution(out, kPair);
    double split = 0.0;
    for (const auto& [c, p] : dist.probabilities)
        if (c[0] + c[1] == 1 && c[2] + c[3] == 1) split += p;
    EXPECT_NEAR(split, 1.0, 1e-12);
}

TEST(ApplyElement, rejects_bad_elements) {
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, 0.0, 0.0, 1.1;
    EXPECT_THROW(ModeUnitary({aH, aV}, m), ValidationError);
    EXPECT_THROW(ModeUnitary({aH, aH}, Eigen::MatrixXcd::Identity(2, 2)), RegistryError);
    EXPECT_THROW(ModeUnitary({aH}, Eigen::MatrixXcd::Identity(2, 2)), ValidationError);

    auto reg = registry4();
    EXPECT_THROW(apply_element(make_state(reg, {aH, bH}), optics::path_swap(Path::Alice, Path::MonitorD)),
                 RegistryError);
}

TEST(OutcomeDistribution, basis_state_is_a_point_mass) {
    auto reg = registry4();
    auto dist = outcome_distribution(make_state(reg, {aH, bH}), kPair);
    ASSERT_EQ(dist.probabilities.size(), 1u);
    EXPECT_EQ(dist.probability({1, 0, 1, 0}), 1.0);
}

TEST(OutcomeDistribution, perpendicular_photons_half_bunch) {
    auto reg = registry4();
    auto out = apply_element(make_state(reg, {aH, bV}), optics::beam_splitter(Path::Alice, Path::Bob));
    auto dist = outcome_distribution(out, kPair);
    EXPECT_NEAR(dist.total(), 1.0, 1e-12);
    const double bunched = dist.probability({1, 1, 0, 0}) + dist.probability({0, 0, 1, 1});
    const double split = dist.probability({1, 0, 0, 1}) + dist.probability({0, 1, 1, 0});
    EXPECT_NEAR(bunched, 0.5, 1e-12);
    EXPECT_NEAR(split, 0.5, 1e-12);
}

TEST(OutcomeDistribution, coverage_error) {
    auto reg = registry4();
    const std::array<ModeLabel, 2> alice_only{aH, aV};
    EXPECT_THROW(outcome_distribution(make_state(reg, {aH, bH}), alice_only), CoverageError);
}

TEST(SampleOutcome, point_distribution) {
    OutcomeDistribution d{{aH}, {{{1}, 1.0}}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RngStream rng(seed);
        EXPECT_EQ(sample_outcome(d, rng), ModeCounts{1});
    }
}

TEST(SampleOutcome, fair_coin_is_reproducible_and_balanced) {
    OutcomeDistribution d{{aH}, {{{0}, 0.5}, {{1}, 0.5}}};
    RngStream a(42), b(42);
    int ones = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        auto x = sample_outcome(d, a);
        ASSERT_EQ(x, sample_outcome(d, b));
        ones += x[0];
    }
    EXPECT_NEAR(static_cast<double>(ones) / n, 0.5, 0.01);
}

TEST(SampleOutcome, errors) {
    RngStream rng(1);
    EXPECT_THROW(sample_outcome(OutcomeDistribution{}, rng), ValidationError);
    OutcomeDistribution off{{aH}, {{{0}, 0.5}, {{1}, 0.4}}};
    EXPECT_THROW(sample_outcome(off, rng), ValidationError);
}

TEST(SampleOutcome, frequencies_within_three_sigma) {
    auto reg = registry4();
    auto s = apply_element(make_state(reg, {aH, bV}), optics::beam_splitter(Path::Alice, Path::Bob));
    s = apply_element(s, optics::hwp(22.5, Path::Alice));
    auto dist = outcome_distribution(s, kPair);
    std::map<ModeCounts, int> hits;
    RngStream rng(2024);
    const int n = 100000;
    for (int i = 0; i < n; ++i) ++hits[sample_outcome(dist, rng)];
    for (const auto& [c, p] : dist.probabilities) {
        const double sigma = std::sqrt(n * p * (1.0 - p));
        EXPECT_LE(std::abs(hits[c] - n * p), 3.0 * sigma);
    }
    for (const auto& [c, k] : hits) EXPECT_GT(dist.probability(c), 0.0);
}

TEST(ConditionOn, absorbing_removes_photons) {
    auto reg = registry4();
    const std::array<ModeLabel, 2> alice{aH, aV};
    auto r = condition_on(psi(reg, 1.0), alice, {1, 0}, true);
    EXPECT_NEAR(r.probability, 0.5, 1e-15);
    ASSERT_TRUE(r.state);
    EXPECT_EQ(r.state->photon_number(), 1);
    EXPECT_NEAR(fidelity(*r.state, make_state(reg, {bV})), 1.0, 1e-15);
    EXPECT_FALSE(condition_on(psi(reg, 1.0), alice, {2, 0}, true).state);
}

// Randomized invariants, cross-checked against the permanent oracle.
TEST(ApplyElementProperty, random_interferometers_match_permanent_oracle) {
    auto reg = ModeRegistry::from_paths({Path::Alice, Path::Bob, Path::MonitorD});
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; ++trial) {
        // Random two-photon superposition over three basis kets.
        std::vector<std::pair<Complex, PureState>> terms;
        for (int k = 0; k < 3; ++k) {
            const auto& m1 = reg->at(rng() % reg->size());
            const auto& m2 = reg->at(rng() % reg->size());
            terms.emplace_back(Complex(g(rng), g(rng)), make_state(reg, {m1, m2}));
        }
        PureState in = [&] {
            try {
                return superpose(terms);
            } catch (const ValidationError&) {
                return terms.front().second;
            }
        }();

        // Random unitary on a random subset of 2..4 modes.
        std::vector<ModeLabel> modes(reg->modes().begin(), reg->modes().end());
        std::shuffle(modes.begin(), modes.end(), rng);
        modes.resize(2 + rng() % 3);
        ModeUnitary u(modes, random_unitary(static_cast<int>(modes.size()), rng));

        auto out = apply_element(in, u);
        EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
        for (const auto& [b, a] : out.amplitudes()) EXPECT_EQ(b.total(), 2);

        const auto expected = oracle::evolve(oracle::compose(*reg, {u}), in);
        for (const auto& [o, amp] : expected) EXPECT_NEAR(std::abs(out.amplitude(FockBasisState{o}) - amp), 0.0, 1e-12);
        for (const auto& [b, amp] : out.amplitudes()) EXPECT_TRUE(expected.contains(b.occupations) || std::abs(amp) < 1e-12);

        auto back = apply_element(out, u.adjoint());
        for (const auto& [b, amp] : in.amplitudes()) EXPECT_NEAR(std::abs(back.amplitude(b) - amp), 0.0, 1e-12);
        EXPECT_NEAR(fidelity(back, in), 1.0, 1e-12);
    }
}

TEST(ApplyElementProperty, hom_dip_for_both_polarizations) {
    auto reg = registry4();
    for (auto [x, y] : {std::pair{aH, bH}, std::pair{aV, bV}}) {
        auto out = apply_element(make_state(reg, {x, y}), optics::beam_splitter(Path::Alice, Path::Bob));
        for (const auto& [b, amp] : out.amplitudes()) {
            const bool split = (b.occupations[0] + b.occupations[1]) == 1;
            EXPECT_FALSE(split) << "coincidence amplitude " << std::abs(amp);
        }
    }
}
