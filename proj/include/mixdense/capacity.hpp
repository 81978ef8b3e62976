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
#include <cstdint>

#include "mixdense/fock.hpp"
#include "mixdense/protocol.hpp"
#include "mixdense/scenario.hpp"

namespace mixdense::capacity {

struct SymbolCounts {
    std::int64_t intended = 0;
    std::int64_t attempts = 0;
    std::int64_t delivered = 0;
    std::int64_t repeats = 0;
    std::int64_t discarded = 0;
    std::int64_t cloned = 0;
    std::int64_t wrong_branch = 0;

    bool operator==(const SymbolCounts&) const = default;
};

using PerSymbol = std::array<SymbolCounts, 4>;

struct CapacityInputs {
    PerSymbol per_symbol{};
    std::int64_t pairs_consumed = 0;
    std::int64_t messages_delivered = 0;
    int alphabet_size = 4;
};

/// Channel accounting against source pairs. All derived fields are filled by
/// capacity_from_counts().
struct CapacityReport {
    PerSymbol per_symbol_counts{};
    std::int64_t pairs_consumed = 0;
    std::int64_t messages_delivered = 0;
    int alphabet_size = 4;
    double efficiency = 0.0;          // messages_delivered / pairs_consumed
    double effective_alphabet = 0.0;  // alphabet_size * efficiency
    double bits_per_pair = 0.0;       // log2(effective_alphabet)
    double bits_per_received_message = 0.0;
    /// log2 of the effective alphabet after rounding efficiency to two
    /// decimals and the alphabet to one (4 * 0.67 = 2.68 -> 2.7 -> 1.433).
    double bits_per_pair_rounded = 0.0;
    /// Wrong-branch encodings over all pairs, and per symbol over its attempts.
    double uncontrolled_fraction = 0.0;
    std::array<double, 4> per_symbol_uncontrolled_fraction{};

    bool operator==(const CapacityReport&) const = default;
};

/// Throws ValidationError unless pairs_consumed >= messages_delivered >= 1.
CapacityReport capacity_from_counts(const CapacityInputs& inputs);

double rounded_reference_bits(double efficiency, int alphabet_size);

using AlphabetDistribution = std::array<double, 4>;

inline constexpr AlphabetDistribution kUniformAlphabet{0.25, 0.25, 0.25, 0.25};

/// Expected accounting per intended message, from the encoder's exact branch
/// probabilities. Scenarios A and C retry until success (geometric, mean
/// 1/p pairs per message); B never retries.
struct AnalyticCapacity {
    double pairs_per_message = 0.0;
    double efficiency = 0.0;
    double discard_fraction = 0.0;
    std::array<double, 4> sent_share{};    // successful pairs of symbol i / all pairs
    std::array<double, 4> wasted_share{};  // failed pairs of symbol i / all pairs
    double effective_alphabet = 0.0;
    double bits_per_pair = 0.0;
    double bits_per_pair_rounded = 0.0;
};

/// Throws ValidationError if `alphabet` is not a probability distribution.
AnalyticCapacity analytic_capacity(Scenario scenario, const AlphabetDistribution& alphabet);

double expected_discard_fraction(Scenario scenario, const AlphabetDistribution& alphabet);

/// 1/2 sum |p - q| over the union of supports. Throws ValidationError when
/// either input is off normalization by more than 1e-9 (or, for mode-level
/// distributions, when detector lists differ).
double total_variation_distance(const protocol::PatternDistribution& p, const protocol::PatternDistribution& q);
double total_variation_distance(const OutcomeDistribution& p, const OutcomeDistribution& q);

}  // namespace mixdense::capacity
