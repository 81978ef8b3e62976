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

#include "mixdense/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "mixdense/capacity.hpp"
#include "mixdense/optics.hpp"
#include "mixdense/protocol.hpp"

namespace mixdense::verify {

namespace {

using protocol::Symbol;

constexpr ModeLabel kAH{Path::Alice, Polarization::H};
constexpr ModeLabel kAV{Path::Alice, Polarization::V};
constexpr ModeLabel kBH{Path::Bob, Polarization::H};
constexpr ModeLabel kBV{Path::Bob, Polarization::V};
constexpr std::array<ModeLabel, 4> kPairModes{kAH, kAV, kBH, kBV};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

// Probability of one photon on each side of the pair's BS output.
double split_probability(const OutcomeDistribution& d) {
    double p = 0.0;
    for (const auto& [c, prob] : d.probabilities) {
        if (c[0] + c[1] == 1 && c[2] + c[3] == 1) p += prob;
    }
    return p;
}

OutcomeDistribution through_bs(std::initializer_list<ModeLabel> photons) {
    const auto reg = ModeRegistry::from_paths({Path::Alice, Path::Bob});
    const auto out = apply_element(make_state(reg, photons), optics::beam_splitter(Path::Alice, Path::Bob));
    return outcome_distribution(out, kPairModes);
}

CheckResult check_unitarity(bool inject) {
    std::vector<std::pair<std::string, Eigen::MatrixXcd>> mats{
        {"bs", optics::beam_splitter(Path::Alice, Path::Bob).matrix()},
        {"pbs", optics::pbs(Path::Alice, Path::AnalyzerOutA).matrix()},
        {"pol(H)", optics::polarizer_monitor(Path::Alice, Polarization::H, Path::MonitorD).matrix()},
        {"pol(V)", optics::polarizer_monitor(Path::Alice, Polarization::V, Path::MonitorD).matrix()},
        {"swap", optics::path_swap(Path::Alice, Path::MonitorD).matrix()},
    };
    for (double theta : {0.0, 22.5, 45.0, 67.5, 90.0, 135.0, 179.0}) {
        mats.emplace_back("hwp(" + fmt(theta) + ")", optics::hwp(theta, Path::Alice).matrix());
    }
    if (inject) {
        Eigen::MatrixXcd bad(2, 2);
        bad << 1.0, 0.0, 0.0, 1.1;
        mats.emplace_back("injected", bad);
    }
    double worst = 0.0;
    std::string worst_name;
    for (const auto& [name, m] : mats) {
        const double d = unitarity_defect(m);
        if (d >= worst) {
            worst = d;
            worst_name = name;
        }
    }
    return {"unitarity", worst < kUnitarityTolerance, "max |U^dagger U - I| = " + fmt(worst) + " (" + worst_name + ")"};
}

CheckResult check_conservation() {
    const auto& reg = protocol::protocol_registry();
    double worst_norm = 0.0;
    bool photons_ok = true;
    RngStream rng(7);
    for (Symbol s : protocol::kAlphabet) {
        PureState st = protocol::source_emit(reg);
        for (const auto& e : protocol::encoder_elements(protocol::action_for(s))) {
            st = apply_element(st, e);
            worst_norm = std::max(worst_norm, std::abs(st.norm_squared() - 1.0));
            for (const auto& [b, a] : st.amplitudes()) photons_ok = photons_ok && b.total() == 2;
        }
        for (const auto& e : {optics::beam_splitter(Path::Alice, Path::Bob), optics::pbs(Path::Alice, Path::AnalyzerOutA),
                              optics::pbs(Path::Bob, Path::AnalyzerOutB)}) {
            st = apply_element(st, e);
            worst_norm = std::max(worst_norm, std::abs(st.norm_squared() - 1.0));
            for (const auto& [b, a] : st.amplitudes()) photons_ok = photons_ok && b.total() == 2;
        }
    }
    return {"norm_and_photon_number", worst_norm < kNormTolerance && photons_ok,
            "max |norm^2 - 1| = " + fmt(worst_norm) + (photons_ok ? ", photon number conserved" : ", photon number BROKEN")};
}

CheckResult check_hom() {
    const double hh = split_probability(through_bs({kAH, kBH}));
    const double vv = split_probability(through_bs({kAV, kBV}));
    return {"hom_dip", hh < 1e-12 && vv < 1e-12, "coincidence HH = " + fmt(hh) + ", VV = " + fmt(vv)};
}

CheckResult check_perpendicular() {
    const double split = split_probability(through_bs({kAH, kBV}));
    const bool ok = std::abs(split - 0.5) < 1e-12;
    return {"hv_bunch_split", ok, "split = " + fmt(split) + ", bunch = " + fmt(1.0 - split)};
}

CheckResult check_signatures() {
    try {
        const auto& table = protocol::signature_table();
        bool ok = table.size() == 4;
        for (const auto& [s, patterns] : table) ok = ok && !patterns.empty();
        return {"signature_disjointness", ok, std::to_string(table.size()) + " pairwise disjoint rows"};
    } catch (const std::exception& e) {
        return {"signature_disjointness", false, e.what()};
    }
}

CheckResult check_decoding() {
    const auto& reg = protocol::protocol_registry();
    bool ok = true;
    std::string detail;
    for (Symbol s : protocol::kAlphabet) {
        // Force the controlled branch by conditioning on an empty monitor.
        PureState st = protocol::source_emit(reg);
        for (const auto& e : protocol::encoder_elements(protocol::action_for(s))) st = apply_element(st, e);
        const std::array<ModeLabel, 2> monitor{ModeLabel{Path::MonitorD, Polarization::H},
                                               ModeLabel{Path::MonitorD, Polarization::V}};
        const auto controlled = condition_on(st, monitor, {0, 0}, false);
        double decoded_mass = 0.0;
        for (const auto& [pattern, p] : protocol::analyze(*controlled.state)) {
            const auto c = protocol::classify(pattern);
            if (c.verdict == protocol::Verdict::Decoded && c.symbol == s) decoded_mass += p;
        }
        ok = ok && std::abs(decoded_mass - 1.0) < 1e-12;
        detail += protocol::to_string(s) + ":" + fmt(decoded_mass) + " ";
    }
    return {"deterministic_decoding", ok, detail};
}

CheckResult check_phi() {
    const auto& reg = protocol::protocol_registry();
    const double tvd =
        capacity::total_variation_distance(protocol::analyze(protocol::reference_state(reg, protocol::ReferenceState::PhiPlus)),
                                           protocol::analyze(protocol::reference_state(reg, protocol::ReferenceState::PhiMinus)));
    return {"phi_indistinguishable", tvd < 1e-12, "TVD = " + fmt(tvd)};
}

CheckResult check_branches(std::uint64_t seed, std::int64_t n) {
    const auto& reg = protocol::protocol_registry();
    const double exact = protocol::controlled_probability(Symbol::Chi3);
    const double exact4 = protocol::controlled_probability(Symbol::Chi4);
    RngStream rng = RngStream::derive(seed, stream::kTrial, 0);
    std::int64_t wrong = 0;
    const PureState source = protocol::source_emit(reg);
    for (std::int64_t i = 0; i < n; ++i) {
        wrong += protocol::encode(Symbol::Chi3, source, rng).branch == protocol::Branch::Wrong;
    }
    const double sigma = std::sqrt(static_cast<double>(n) * 0.25);
    const double dev = std::abs(static_cast<double>(wrong) - 0.5 * static_cast<double>(n));
    const bool ok = std::abs(exact - 0.5) < 1e-12 && std::abs(exact4 - 0.5) < 1e-12 && dev <= 3.0 * sigma;
    return {"branch_statistics", ok,
            "exact P(controlled) chi3 = " + fmt(exact) + ", chi4 = " + fmt(exact4) + "; wrong " + std::to_string(wrong) +
                "/" + std::to_string(n) + " (" + fmt(dev / sigma) + " sigma)"};
}

CheckResult check_capacity() {
    const auto a = capacity::analytic_capacity(Scenario::A, capacity::kUniformAlphabet);
    capacity::CapacityInputs dense;
    dense.alphabet_size = 3;
    dense.pairs_consumed = dense.messages_delivered = 3;
    capacity::CapacityInputs ideal;
    ideal.pairs_consumed = ideal.messages_delivered = 4;
    const double dense_bits = capacity::capacity_from_counts(dense).bits_per_pair;
    const double ideal_bits = capacity::capacity_from_counts(ideal).bits_per_pair;

    bool ok = std::abs(a.efficiency - 2.0 / 3.0) < 1e-12 && std::abs(a.discard_fraction - 1.0 / 3.0) < 1e-12 &&
              std::abs(a.bits_per_pair - 1.4150) <= 0.0005 && std::abs(dense_bits - 1.585) <= 0.001 &&
              std::abs(ideal_bits - 2.0) < 1e-12 && std::abs(a.bits_per_pair_rounded - 1.433) <= 0.0005;
    for (double share : a.sent_share) ok = ok && std::abs(share - 1.0 / 6.0) < 1e-12;
    return {"capacity_references", ok,
            "efficiency " + fmt(a.efficiency) + ", discard " + fmt(a.discard_fraction) + ", bits/pair " +
                fmt(a.bits_per_pair) + " (rounded " + fmt(a.bits_per_pair_rounded) + "), dense " + fmt(dense_bits) +
                ", ideal " + fmt(ideal_bits)};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<std::function<CheckResult()>> checks{
        [&] { return check_unitarity(options.inject_nonunitary); },
        check_conservation,
        check_hom,
        check_perpendicular,
        check_signatures,
        check_decoding,
        check_phi,
        [&] { return check_branches(options.seed, options.branch_samples); },
        check_capacity,
    };
    std::vector<CheckResult> results;
    for (auto& c : checks) {
        try {
            results.push_back(c());
        } catch (const std::exception& e) {
            results.push_back({"exception", false, e.what()});
        }
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace mixdense::verify
