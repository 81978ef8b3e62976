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

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mixdense/fock.hpp"
#include "mixdense/rng.hpp"

namespace mixdense::protocol {

/// The four-letter mixed-basis alphabet:
///   Chi1 = Psi+ = (HV + VH)/sqrt2,  Chi2 = Psi- = (HV - VH)/sqrt2,
///   Chi3 = HH,                      Chi4 = VV
/// with the first photon on Alice's path and the second on Bob's.
enum class Symbol { Chi1, Chi2, Chi3, Chi4 };

inline constexpr std::array<Symbol, 4> kAlphabet{Symbol::Chi1, Symbol::Chi2, Symbol::Chi3, Symbol::Chi4};

/// Bell states outside the alphabet. Usable as analyzer inputs, never encodable.
enum class ReferenceState { PhiPlus, PhiMinus };

std::string to_string(Symbol s);
std::string to_string(ReferenceState r);
/// Accepts "chi1".."chi4" and "1".."4". Throws ConfigError otherwise.
Symbol parse_symbol(std::string_view text);
std::size_t index_of(Symbol s);

enum class EncoderAction { Identity, Hwp0, Hwp45PolH, Hwp45PolVReflect };

EncoderAction action_for(Symbol s);
Symbol symbol_for(EncoderAction a);
std::string to_string(EncoderAction a);

enum class Branch { Controlled, Wrong };
std::string to_string(Branch b);

/// Registry with alice, bob, monitor_d, analyzer_out_a and analyzer_out_b.
const RegistryPtr& protocol_registry();

PureState mixed_basis_state(const RegistryPtr& registry, Symbol s);
PureState reference_state(const RegistryPtr& registry, ReferenceState r);

/// Ideal down-conversion source: Psi+ across alice and bob.
PureState source_emit(const RegistryPtr& registry);

/// Elements Alice inserts on her path for one action, in beam order.
std::vector<ModeUnitary> encoder_elements(EncoderAction action);

struct Encoded {
    PureState state;
    Branch branch;
};

/// Applies Alice's action to a fresh source state. For Chi3/Chi4 the
/// polarizer's monitor port is measured: no photon there gives the controlled
/// branch; a photon there gives the wrong branch, whose photon is handed back
/// onto Alice's path so the pair sits in the complementary computational state.
/// Throws ValidationError if `message` is not an alphabet symbol.
Encoded encode(Symbol message, const PureState& state, RngStream& rng);

/// Exact probability that encode() lands on the controlled branch, evaluated
/// from the source state through the action's elements.
double controlled_probability(Symbol message);

/// Photon counts on Bob's four analyzer detectors plus Alice's monitor d.
struct DetectionPattern {
    enum Slot : std::size_t { aH = 0, aV, bH, bV, d };
    std::array<int, 5> counts{};

    int analyzer_total() const { return counts[aH] + counts[aV] + counts[bH] + counts[bV]; }
    int total() const { return analyzer_total() + counts[d]; }

    /// Canonical "aH:n,aV:n,bH:n,bV:n,d:n" with zero entries omitted.
    std::string to_string() const;
    /// Inverse of to_string(). Throws ValidationError on malformed text.
    static DetectionPattern parse(std::string_view text);

    auto operator<=>(const DetectionPattern&) const = default;
};

using PatternDistribution = std::map<DetectionPattern, double>;

/// Analyzer detector modes, in DetectionPattern slot order.
std::span<const ModeLabel> analyzer_detectors();

/// Bob's analyzer: BS(alice, bob), then a PBS behind each output, detected
/// with photon-number resolution. Accepts one- or two-photon states on the
/// alice and bob paths.
PatternDistribution analyze(const PureState& state);

/// Analyzer support of each alphabet state, computed from analyze(). Throws
/// InternalConsistencyError if two supports overlap.
const std::map<Symbol, std::set<DetectionPattern>>& signature_table();

enum class Verdict { Decoded, SinglePhoton, Ambiguous };

struct ClassifiedOutcome {
    Verdict verdict = Verdict::Ambiguous;
    std::optional<Symbol> symbol;

    std::string to_string() const;
    bool operator==(const ClassifiedOutcome&) const = default;
};

/// Decoded(m) when the analyzer counts match a signature of m; SinglePhoton
/// when exactly one analyzer photon was seen; Ambiguous otherwise. The
/// monitor count is ignored.
ClassifiedOutcome classify(const DetectionPattern& pattern);

}  // namespace mixdense::protocol
