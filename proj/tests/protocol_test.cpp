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

#include "mixdense/protocol.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mixdense/capacity.hpp"
#include "mixdense/errors.hpp"
#include "oracle.hpp"

using namespace mixdense;
using namespace mixdense::protocol;

namespace {

using P = DetectionPattern;

P pat(std::initializer_list<std::pair<P::Slot, int>> entries) {
    P p;
    for (auto [slot, n] : entries) p.counts[slot] = n;
    return p;
}

const RegistryPtr& reg() { return protocol_registry(); }

// Analyzer written out by hand as one 10x10 single-photon matrix, so the
// distributions below do not go through optics:: or apply_element().
Eigen::MatrixXcd hand_analyzer() {
    const auto& r = *reg();
    auto idx = [&](Path p, Polarization s) { return static_cast<Eigen::Index>(r.index_of({p, s})); };
    const double k = 1.0 / std::numbers::sqrt2;
    const Complex i(0.0, 1.0);
    Eigen::MatrixXcd bs = Eigen::MatrixXcd::Identity(10, 10);
    for (auto s : {Polarization::H, Polarization::V}) {
        const auto a = idx(Path::Alice, s), b = idx(Path::Bob, s);
        bs(a, a) = k;
        bs(b, a) = i * k;
        bs(a, b) = i * k;
        bs(b, b) = k;
    }
    Eigen::MatrixXcd route = Eigen::MatrixXcd::Identity(10, 10);
    for (auto [from, to] : {std::pair{Path::Alice, Path::AnalyzerOutA}, std::pair{Path::Bob, Path::AnalyzerOutB}}) {
        const auto x = idx(from, Polarization::V), y = idx(to, Polarization::V);
        route(x, x) = route(y, y) = 0.0;
        route(x, y) = route(y, x) = 1.0;
    }
    return route * bs;
}

PatternDistribution oracle_analyze(const PureState& s) {
    const auto& r = *reg();
    const std::array<ModeLabel, 4> det{ModeLabel{Path::Alice, Polarization::H}, {Path::AnalyzerOutA, Polarization::V},
                                       {Path::Bob, Polarization::H}, {Path::AnalyzerOutB, Polarization::V}};
    PatternDistribution d;
    for (const auto& [occ, amp] : oracle::evolve(hand_analyzer(), s)) {
        P p;
        int seen = 0;
        for (std::size_t k = 0; k < det.size(); ++k) {
            p.counts[k] = occ[r.index_of(det[k])];
            seen += p.counts[k];
        }
        EXPECT_EQ(seen, s.photon_number()) << "photon escaped the detectors";
        d[p] += std::norm(amp);
    }
    return d;
}

void expect_same(const PatternDistribution& got, const PatternDistribution& want) {
    EXPECT_LT(capacity::total_variation_distance(got, want), 1e-12);
}

}  // namespace

TEST(Protocol, symbols_parse_and_print) {
    for (Symbol s : kAlphabet) {
        EXPECT_EQ(parse_symbol(to_string(s)), s);
        EXPECT_EQ(symbol_for(action_for(s)), s);
    }
    EXPECT_EQ(parse_symbol("3"), Symbol::Chi3);
    EXPECT_THROW(parse_symbol("chi5"), ConfigError);
    EXPECT_THROW(parse_symbol(""), ConfigError);
}

TEST(Protocol, analyzer_examples) {
    const double q = 0.25;
    expect_same(analyze(mixed_basis_state(reg(), Symbol::Chi1)), {{pat({{P::aH, 1}, {P::aV, 1}}), 0.5}, {pat({{P::bH, 1}, {P::bV, 1}}), 0.5}});
    expect_same(analyze(mixed_basis_state(reg(), Symbol::Chi2)), {{pat({{P::aH, 1}, {P::bV, 1}}), 0.5}, {pat({{P::aV, 1}, {P::bH, 1}}), 0.5}});
    expect_same(analyze(mixed_basis_state(reg(), Symbol::Chi3)), {{pat({{P::aH, 2}}), 0.5}, {pat({{P::bH, 2}}), 0.5}});
    const PatternDistribution phi{
        {pat({{P::aH, 2}}), q}, {pat({{P::aV, 2}}), q}, {pat({{P::bH, 2}}), q}, {pat({{P::bV, 2}}), q}};
    expect_same(analyze(reference_state(reg(), ReferenceState::PhiPlus)), phi);
    expect_same(analyze(reference_state(reg(), ReferenceState::PhiMinus)), phi);
}

TEST(Protocol, analyzer_matches_hand_built_interferometer) {
    std::vector<PureState> states;
    for (Symbol s : kAlphabet) states.push_back(mixed_basis_state(reg(), s));
    states.push_back(reference_state(reg(), ReferenceState::PhiPlus));
    states.push_back(reference_state(reg(), ReferenceState::PhiMinus));
    const ModeLabel aH{Path::Alice, Polarization::H}, bV{Path::Bob, Polarization::V};
    states.push_back(make_state(reg(), {aH, bV}));
    states.push_back(superpose({{Complex(0.6, 0.0), make_state(reg(), {aH, aH})}, {Complex(0.0, 0.8), make_state(reg(), {aH, bV})}}));
    for (const auto& s : states) expect_same(analyze(s), oracle_analyze(s));
}

TEST(Protocol, source_decodes_as_chi1) {
    const auto d = analyze(source_emit(reg()));
    for (const auto& [p, prob] : d) EXPECT_EQ(classify(p), (ClassifiedOutcome{Verdict::Decoded, Symbol::Chi1}));
    EXPECT_THROW(source_emit(ModeRegistry::from_paths({Path::Alice, Path::MonitorD})), RegistryError);
}

TEST(Protocol, signature_table_rows) {
    const auto& t = signature_table();
    ASSERT_EQ(t.size(), 4u);
    using Set = std::set<P>;
    EXPECT_EQ(t.at(Symbol::Chi1), (Set{pat({{P::aH, 1}, {P::aV, 1}}), pat({{P::bH, 1}, {P::bV, 1}})}));
    EXPECT_EQ(t.at(Symbol::Chi2), (Set{pat({{P::aH, 1}, {P::bV, 1}}), pat({{P::aV, 1}, {P::bH, 1}})}));
    EXPECT_EQ(t.at(Symbol::Chi3), (Set{pat({{P::aH, 2}}), pat({{P::bH, 2}})}));
    EXPECT_EQ(t.at(Symbol::Chi4), (Set{pat({{P::aV, 2}}), pat({{P::bV, 2}})}));
    for (auto a = t.begin(); a != t.end(); ++a)
        for (auto b = std::next(a); b != t.end(); ++b)
            for (const auto& p : a->second) EXPECT_FALSE(b->second.contains(p));
}

TEST(Protocol, classify_examples) {
    EXPECT_EQ(classify(pat({{P::aH, 1}, {P::aV, 1}})), (ClassifiedOutcome{Verdict::Decoded, Symbol::Chi1}));
    EXPECT_EQ(classify(pat({{P::aH, 1}})).verdict, Verdict::SinglePhoton);
    EXPECT_EQ(classify(pat({{P::aH, 1}, {P::d, 1}})).verdict, Verdict::SinglePhoton);
    EXPECT_EQ(classify(pat({{P::aH, 2}})), (ClassifiedOutcome{Verdict::Decoded, Symbol::Chi3}));
    EXPECT_EQ(classify(pat({{P::aH, 1}, {P::bH, 1}})).verdict, Verdict::Ambiguous);
    EXPECT_EQ(classify(P{}).verdict, Verdict::Ambiguous);
}

TEST(Protocol, pattern_text_round_trip) {
    for (const auto& [s, patterns] : signature_table())
        for (const auto& p : patterns) EXPECT_EQ(P::parse(p.to_string()), p);
    const P p = pat({{P::aV, 1}, {P::d, 1}});
    EXPECT_EQ(p.to_string(), "aV:1,d:1");
    EXPECT_EQ(P::parse("aV:1,d:1"), p);
    EXPECT_EQ(P::parse(""), P{});
    for (const char* bad : {"aH", "aH:0", "zz:1", "bH:1,aH:1", "aH:1,aH:1", "aH:x"}) EXPECT_THROW(P::parse(bad), ValidationError) << bad;
}

TEST(Protocol, encode_bell_actions_are_deterministic) {
    RngStream rng(1);
    auto e1 = encode(Symbol::Chi1, source_emit(reg()), rng);
    EXPECT_EQ(e1.branch, Branch::Controlled);
    EXPECT_NEAR(fidelity(e1.state, mixed_basis_state(reg(), Symbol::Chi1)), 1.0, 1e-12);
    auto e2 = encode(Symbol::Chi2, source_emit(reg()), rng);
    EXPECT_EQ(e2.branch, Branch::Controlled);
    EXPECT_NEAR(fidelity(e2.state, mixed_basis_state(reg(), Symbol::Chi2)), 1.0, 1e-12);
}

TEST(Protocol, encode_polarizer_branches) {
    for (Symbol s : {Symbol::Chi3, Symbol::Chi4}) {
        const Symbol other = s == Symbol::Chi3 ? Symbol::Chi4 : Symbol::Chi3;
        bool saw[2] = {false, false};
        for (std::uint64_t seed = 0; seed < 64; ++seed) {
            RngStream rng(seed);
            auto e = encode(s, source_emit(reg()), rng);
            saw[e.branch == Branch::Wrong] = true;
            EXPECT_NEAR(e.state.norm_squared(), 1.0, 1e-12);
            EXPECT_EQ(e.state.photon_number(), 2);
            const Symbol expect = e.branch == Branch::Controlled ? s : other;
            EXPECT_NEAR(fidelity(e.state, mixed_basis_state(reg(), expect)), 1.0, 1e-12);
        }
        EXPECT_TRUE(saw[0] && saw[1]);
        EXPECT_NEAR(controlled_probability(s), 0.5, 1e-12);
    }
    EXPECT_EQ(controlled_probability(Symbol::Chi1), 1.0);
    EXPECT_EQ(controlled_probability(Symbol::Chi2), 1.0);
}

TEST(Protocol, controlled_encodings_always_decode) {
    for (Symbol s : kAlphabet) {
        for (std::uint64_t seed = 0; seed < 32; ++seed) {
            RngStream rng(seed);
            auto e = encode(s, source_emit(reg()), rng);
            if (e.branch != Branch::Controlled) continue;
            for (const auto& [p, prob] : analyze(e.state)) EXPECT_EQ(classify(p), (ClassifiedOutcome{Verdict::Decoded, s}));
        }
    }
}
