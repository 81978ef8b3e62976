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

#include <charconv>
#include <cmath>
#include <numbers>

#include "mixdense/errors.hpp"
#include "mixdense/optics.hpp"

namespace mixdense::protocol {

namespace {

constexpr ModeLabel kAliceH{Path::Alice, Polarization::H};
constexpr ModeLabel kAliceV{Path::Alice, Polarization::V};
constexpr ModeLabel kBobH{Path::Bob, Polarization::H};
constexpr ModeLabel kBobV{Path::Bob, Polarization::V};

constexpr std::array<ModeLabel, 2> kMonitorModes{ModeLabel{Path::MonitorD, Polarization::H},
                                                 ModeLabel{Path::MonitorD, Polarization::V}};

// Analyzer detector for each DetectionPattern slot. PBS transmission keeps H
// on the BS output path; reflection moves V onto the analyzer output path.
constexpr std::array<ModeLabel, 4> kAnalyzerDetectors{
    ModeLabel{Path::Alice, Polarization::H}, ModeLabel{Path::AnalyzerOutA, Polarization::V},
    ModeLabel{Path::Bob, Polarization::H}, ModeLabel{Path::AnalyzerOutB, Polarization::V}};

constexpr std::array<std::string_view, 5> kSlotNames{"aH", "aV", "bH", "bV", "d"};

const std::vector<ModeUnitary>& analyzer_elements() {
    static const std::vector<ModeUnitary> elements{
        optics::beam_splitter(Path::Alice, Path::Bob),
        optics::pbs(Path::Alice, Path::AnalyzerOutA),
        optics::pbs(Path::Bob, Path::AnalyzerOutB),
    };
    return elements;
}

PureState propagate(PureState state, const std::vector<ModeUnitary>& elements) {
    for (const auto& e : elements) {
        state = apply_element(state, e);
    }
    return state;
}

bool uses_polarizer(EncoderAction a) { return a == EncoderAction::Hwp45PolH || a == EncoderAction::Hwp45PolVReflect; }

}  // namespace

std::string to_string(Symbol s) {
    switch (s) {
        case Symbol::Chi1: return "chi1";
        case Symbol::Chi2: return "chi2";
        case Symbol::Chi3: return "chi3";
        case Symbol::Chi4: return "chi4";
    }
    return "?";
}

std::string to_string(ReferenceState r) { return r == ReferenceState::PhiPlus ? "PhiPlus" : "PhiMinus"; }

Symbol parse_symbol(std::string_view text) {
    for (Symbol s : kAlphabet) {
        const std::string name = to_string(s);
        if (text == name || text == name.substr(3)) {
            return s;
        }
    }
    throw ConfigError("unknown message symbol '" + std::string(text) + "' (expected chi1..chi4)");
}

std::size_t index_of(Symbol s) { return static_cast<std::size_t>(s); }

EncoderAction action_for(Symbol s) {
    switch (s) {
        case Symbol::Chi1: return EncoderAction::Identity;
        case Symbol::Chi2: return EncoderAction::Hwp0;
        case Symbol::Chi3: return EncoderAction::Hwp45PolH;
        case Symbol::Chi4: return EncoderAction::Hwp45PolVReflect;
    }
    throw ValidationError("symbol outside the encodable alphabet");
}

Symbol symbol_for(EncoderAction a) {
    switch (a) {
        case EncoderAction::Identity: return Symbol::Chi1;
        case EncoderAction::Hwp0: return Symbol::Chi2;
        case EncoderAction::Hwp45PolH: return Symbol::Chi3;
        case EncoderAction::Hwp45PolVReflect: return Symbol::Chi4;
    }
    throw ValidationError("unknown encoder action");
}

std::string to_string(EncoderAction a) {
    switch (a) {
        case EncoderAction::Identity: return "identity";
        case EncoderAction::Hwp0: return "hwp0";
        case EncoderAction::Hwp45PolH: return "hwp45+pol(H)";
        case EncoderAction::Hwp45PolVReflect: return "hwp45+pol(V)";
    }
    return "?";
}

std::string to_string(Branch b) { return b == Branch::Controlled ? "controlled" : "wrong"; }

const RegistryPtr& protocol_registry() {
    static const RegistryPtr registry = ModeRegistry::from_paths(
        {Path::Alice, Path::Bob, Path::MonitorD, Path::AnalyzerOutA, Path::AnalyzerOutB});
    return registry;
}

PureState mixed_basis_state(const RegistryPtr& registry, Symbol s) {
    const double r = 1.0 / std::numbers::sqrt2;
    switch (s) {
        case Symbol::Chi1:
            return superpose({{r, make_state(registry, {kAliceH, kBobV})}, {r, make_state(registry, {kAliceV, kBobH})}});
        case Symbol::Chi2:
            return superpose({{r, make_state(registry, {kAliceH, kBobV})}, {-r, make_state(registry, {kAliceV, kBobH})}});
        case Symbol::Chi3:
            return make_state(registry, {kAliceH, kBobH});
        case Symbol::Chi4:
            return make_state(registry, {kAliceV, kBobV});
    }
    throw ValidationError("symbol outside the alphabet");
}

PureState reference_state(const RegistryPtr& registry, ReferenceState ref) {
    const double r = 1.0 / std::numbers::sqrt2;
    const double sign = ref == ReferenceState::PhiPlus ? 1.0 : -1.0;
    return superpose({{r, mixed_basis_state(registry, Symbol::Chi3)}, {sign * r, mixed_basis_state(registry, Symbol::Chi4)}});
}

PureState source_emit(const RegistryPtr& registry) {
    if (!registry->has_path(Path::Alice) || !registry->has_path(Path::Bob)) {
        throw RegistryError("source needs alice and bob paths");
    }
    return mixed_basis_state(registry, Symbol::Chi1);
}

std::vector<ModeUnitary> encoder_elements(EncoderAction action) {
    switch (action) {
        case EncoderAction::Identity:
            return {};
        case EncoderAction::Hwp0:
            return {optics::hwp(0.0, Path::Alice)};
        case EncoderAction::Hwp45PolH:
            return {optics::hwp(45.0, Path::Alice), optics::polarizer_monitor(Path::Alice, Polarization::H, Path::MonitorD)};
        case EncoderAction::Hwp45PolVReflect:
            return {optics::hwp(45.0, Path::Alice), optics::polarizer_monitor(Path::Alice, Polarization::V, Path::MonitorD)};
    }
    throw ValidationError("unknown encoder action");
}

Encoded encode(Symbol message, const PureState& state, RngStream& rng) {
    const EncoderAction action = action_for(message);
    PureState out = propagate(state, encoder_elements(action));
    if (!uses_polarizer(action)) {
        return {std::move(out), Branch::Controlled};
    }

    const auto monitor = marginal_distribution(out, kMonitorModes);
    const ModeCounts seen = sample_outcome(monitor, rng);
    auto conditioned = condition_on(out, kMonitorModes, seen, /*absorb=*/false);
    const bool click = seen[0] + seen[1] > 0;
    if (!click) {
        return {std::move(*conditioned.state), Branch::Controlled};
    }
    // Alice's photon left through the rejected port; route it back onto her path.
    return {apply_element(*conditioned.state, optics::path_swap(Path::Alice, Path::MonitorD)), Branch::Wrong};
}

double controlled_probability(Symbol message) {
    const auto& registry = protocol_registry();
    const EncoderAction action = action_for(message);
    if (!uses_polarizer(action)) {
        return 1.0;
    }
    const PureState out = propagate(source_emit(registry), encoder_elements(action));
    return marginal_distribution(out, kMonitorModes).probability({0, 0});
}

std::string DetectionPattern::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += ',';
        }
        s += kSlotNames[i];
        s += ':';
        s += std::to_string(counts[i]);
    }
    return s;
}

DetectionPattern DetectionPattern::parse(std::string_view text) {
    DetectionPattern p;
    std::array<bool, 5> seen{};
    std::size_t last_slot = 0;
    bool any = false;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw ValidationError("malformed pattern entry '" + std::string(item) + "'");
        }
        const std::string_view key = item.substr(0, colon);
        const std::string_view value = item.substr(colon + 1);
        std::size_t slot = kSlotNames.size();
        for (std::size_t i = 0; i < kSlotNames.size(); ++i) {
            if (kSlotNames[i] == key) {
                slot = i;
            }
        }
        if (slot == kSlotNames.size() || seen[slot] || (any && slot < last_slot)) {
            throw ValidationError("unknown, repeated or out-of-order pattern key '" + std::string(key) + "'");
        }
        int n = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc{} || ptr != value.data() + value.size() || n <= 0) {
            throw ValidationError("bad count in pattern entry '" + std::string(item) + "'");
        }
        seen[slot] = true;
        last_slot = slot;
        any = true;
        p.counts[slot] = n;
    }
    return p;
}

std::span<const ModeLabel> analyzer_detectors() { return kAnalyzerDetectors; }

PatternDistribution analyze(const PureState& state) {
    const PureState out = propagate(state, analyzer_elements());
    const auto dist = outcome_distribution(out, kAnalyzerDetectors);
    PatternDistribution result;
    for (const auto& [counts, p] : dist.probabilities) {
        DetectionPattern pattern;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            pattern.counts[i] = counts[i];
        }
        result[pattern] += p;
    }
    return result;
}

const std::map<Symbol, std::set<DetectionPattern>>& signature_table() {
    static const auto table = [] {
        std::map<Symbol, std::set<DetectionPattern>> t;
        for (Symbol s : kAlphabet) {
            for (const auto& [pattern, p] : analyze(mixed_basis_state(protocol_registry(), s))) {
                if (p > kNormTolerance) {
                    t[s].insert(pattern);
                }
            }
        }
        for (auto a = t.begin(); a != t.end(); ++a) {
            for (auto b = std::next(a); b != t.end(); ++b) {
                for (const auto& pattern : a->second) {
                    if (b->second.contains(pattern)) {
                        throw InternalConsistencyError("signatures of " + to_string(a->first) + " and " +
                                                       to_string(b->first) + " overlap at " + pattern.to_string());
                    }
                }
            }
        }
        return t;
    }();
    return table;
}

std::string ClassifiedOutcome::to_string() const {
    switch (verdict) {
        case Verdict::Decoded: return protocol::to_string(*symbol);
        case Verdict::SinglePhoton: return "single_photon";
        case Verdict::Ambiguous: return "ambiguous";
    }
    return "?";
}

ClassifiedOutcome classify(const DetectionPattern& pattern) {
    DetectionPattern analyzer = pattern;
    analyzer.counts[DetectionPattern::d] = 0;
    for (const auto& [symbol, patterns] : signature_table()) {
        if (patterns.contains(analyzer)) {
            return {Verdict::Decoded, symbol};
        }
    }
    if (analyzer.analyzer_total() == 1) {
        return {Verdict::SinglePhoton, std::nullopt};
    }
    return {Verdict::Ambiguous, std::nullopt};
}

}  // namespace mixdense::protocol
