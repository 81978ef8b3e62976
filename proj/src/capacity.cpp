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

#include "mixdense/capacity.hpp"

#include <cmath>
#include <set>

#include "mixdense/errors.hpp"

namespace mixdense::capacity {

namespace {

template <typename Map>
double map_tvd(const Map& p, const Map& q) {
    auto total = [](const Map& m) {
        double t = 0.0;
        for (const auto& [k, v] : m) t += v;
        return t;
    };
    if (std::abs(total(p) - 1.0) > kDistributionTolerance || std::abs(total(q) - 1.0) > kDistributionTolerance) {
        throw ValidationError("total_variation_distance: inputs must be normalized");
    }
    double sum = 0.0;
    for (const auto& [k, v] : p) {
        auto it = q.find(k);
        sum += std::abs(v - (it == q.end() ? 0.0 : it->second));
    }
    for (const auto& [k, v] : q) {
        if (!p.contains(k)) sum += v;
    }
    return 0.5 * sum;
}

}  // namespace

CapacityReport capacity_from_counts(const CapacityInputs& in) {
    if (in.pairs_consumed <= 0) {
        throw ValidationError("capacity needs at least one consumed pair");
    }
    if (in.messages_delivered < 1 || in.messages_delivered > in.pairs_consumed) {
        throw ValidationError("capacity needs 1 <= messages_delivered <= pairs_consumed");
    }
    if (in.alphabet_size < 1) {
        throw ValidationError("alphabet size must be positive");
    }
    CapacityReport r;
    r.per_symbol_counts = in.per_symbol;
    r.pairs_consumed = in.pairs_consumed;
    r.messages_delivered = in.messages_delivered;
    r.alphabet_size = in.alphabet_size;
    r.efficiency = static_cast<double>(in.messages_delivered) / static_cast<double>(in.pairs_consumed);
    r.effective_alphabet = in.alphabet_size * r.efficiency;
    r.bits_per_pair = std::log2(r.effective_alphabet);
    r.bits_per_received_message = std::log2(static_cast<double>(in.alphabet_size));
    r.bits_per_pair_rounded = rounded_reference_bits(r.efficiency, in.alphabet_size);

    std::int64_t wrong = 0;
    for (std::size_t i = 0; i < in.per_symbol.size(); ++i) {
        const auto& c = in.per_symbol[i];
        wrong += c.wrong_branch;
        r.per_symbol_uncontrolled_fraction[i] =
            c.attempts > 0 ? static_cast<double>(c.wrong_branch) / static_cast<double>(c.attempts) : 0.0;
    }
    r.uncontrolled_fraction = static_cast<double>(wrong) / static_cast<double>(in.pairs_consumed);
    return r;
}

double rounded_reference_bits(double efficiency, int alphabet_size) {
    const double eff2 = std::round(efficiency * 100.0) / 100.0;
    const double alphabet1 = std::round(eff2 * alphabet_size * 10.0) / 10.0;
    return std::log2(alphabet1);
}

AnalyticCapacity analytic_capacity(Scenario scenario, const AlphabetDistribution& alphabet) {
    double sum = 0.0;
    for (double q : alphabet) {
        if (!(q >= 0.0)) {
            throw ValidationError("alphabet probabilities must be non-negative");
        }
        sum += q;
    }
    if (std::abs(sum - 1.0) > kDistributionTolerance) {
        throw ValidationError("alphabet probabilities must sum to 1");
    }

    const bool retries = scenario != Scenario::B;
    std::array<double, 4> pairs{};  // expected pairs per intended message of each symbol
    AnalyticCapacity a;
    for (protocol::Symbol s : protocol::kAlphabet) {
        const auto i = protocol::index_of(s);
        pairs[i] = retries ? 1.0 / protocol::controlled_probability(s) : 1.0;
        a.pairs_per_message += alphabet[i] * pairs[i];
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        a.sent_share[i] = alphabet[i] / a.pairs_per_message;
        a.wasted_share[i] = alphabet[i] * (pairs[i] - 1.0) / a.pairs_per_message;
        a.discard_fraction += a.wasted_share[i];
    }
    a.efficiency = 1.0 / a.pairs_per_message;
    a.effective_alphabet = 4.0 * a.efficiency;
    a.bits_per_pair = std::log2(a.effective_alphabet);
    a.bits_per_pair_rounded = rounded_reference_bits(a.efficiency, 4);
    return a;
}

double expected_discard_fraction(Scenario scenario, const AlphabetDistribution& alphabet) {
    return analytic_capacity(scenario, alphabet).discard_fraction;
}

double total_variation_distance(const protocol::PatternDistribution& p, const protocol::PatternDistribution& q) {
    return map_tvd(p, q);
}

double total_variation_distance(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    if (p.detectors != q.detectors) {
        throw ValidationError("total_variation_distance: distributions over different detectors");
    }
    return map_tvd(p.probabilities, q.probabilities);
}

}  // namespace mixdense::capacity
