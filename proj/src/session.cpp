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

#include "mixdense/session.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mixdense/errors.hpp"

namespace mixdense::session {

namespace {

constexpr std::array<ModeLabel, 2> kAliceModes{ModeLabel{Path::Alice, Polarization::H},
                                               ModeLabel{Path::Alice, Polarization::V}};

protocol::DetectionPattern to_bob(const PureState& state, RngStream& rng) {
    const auto dist = protocol::analyze(state);
    // Sample via the fock-level sampler so the draw order is the map order.
    OutcomeDistribution flat;
    flat.detectors.assign(protocol::analyzer_detectors().begin(), protocol::analyzer_detectors().end());
    for (const auto& [pattern, p] : dist) {
        ModeCounts c(pattern.counts.begin(), pattern.counts.begin() + 4);
        flat.probabilities[c] = p;
    }
    const ModeCounts drawn = sample_outcome(flat, rng);
    protocol::DetectionPattern out;
    std::copy(drawn.begin(), drawn.end(), out.counts.begin());
    return out;
}

}  // namespace

void ScenarioConfig::validate() const {
    if (!owner_allowed(scenario, owner)) {
        throw ConfigError("owner '" + to_string(owner) + "' is not a valid variant of scenario " + to_string(scenario));
    }
    if (classical_delay < 0) {
        throw ConfigError("classical delay must be >= 0");
    }
    if (erase_notes && scenario != Scenario::C) {
        throw ConfigError("erase notes only apply to scenario c");
    }
}

std::string to_string(ScenarioAction a) {
    switch (a) {
        case ScenarioAction::Sent: return "sent";
        case ScenarioAction::DiscardedByAlice: return "discarded_by_alice";
        case ScenarioAction::PairStopped: return "pair_stopped";
        case ScenarioAction::ClonedResend: return "cloned_resend";
    }
    return "?";
}

std::string ClassicalNote::to_string() const {
    switch (kind) {
        case Kind::Repeat: return "repeat";
        case Kind::CorrectTo: return "correct_to:" + protocol::to_string(*symbol);
        case Kind::Erase: return "erase";
    }
    return "?";
}

ClassicalChannel::ClassicalChannel(int delay) : delay_(delay) {
    if (delay < 0) {
        throw ConfigError("classical delay must be >= 0");
    }
}

void ClassicalChannel::send(std::int64_t sent_at, std::int64_t about_trial, ClassicalNote note) {
    queue_.push_back({about_trial, sent_at, sent_at + delay_, std::move(note)});
}

std::vector<Delivery> ClassicalChannel::deliver_until(std::int64_t now) {
    std::vector<Delivery> out;
    // Constant delay keeps the queue sorted by due time.
    while (!queue_.empty() && queue_.front().delivered_at <= now) {
        Delivery d = std::move(queue_.front());
        queue_.pop_front();
        d.delivered_at = now;
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Delivery> ClassicalChannel::flush(std::int64_t now) {
    std::vector<Delivery> out;
    while (!queue_.empty()) {
        Delivery d = std::move(queue_.front());
        queue_.pop_front();
        d.delivered_at = std::max(d.delivered_at, now);
        out.push_back(std::move(d));
    }
    return out;
}

TrialRecord scenario_step(const ScenarioConfig& config, Symbol message, std::int64_t trial,
                          std::int64_t message_index, RngStream& rng, ClassicalChannel& channel) {
    const auto& registry = protocol::protocol_registry();
    TrialRecord rec;
    rec.trial = trial;
    rec.message_index = message_index;
    rec.intended = message;
    rec.owner = config.owner;

    auto encoded = protocol::encode(message, protocol::source_emit(registry), rng);
    rec.branch = encoded.branch;

    auto deliver = [&](const PureState& state) {
        rec.pattern = to_bob(state, rng);
        rec.decoded = protocol::classify(*rec.pattern);
    };

    if (encoded.branch == protocol::Branch::Controlled) {
        rec.action = ScenarioAction::Sent;
        deliver(encoded.state);
        return rec;
    }

    switch (config.scenario) {
        case Scenario::A: {
            // Detector d absorbs Alice's photon; Bob's photon travels alone.
            const auto alice = marginal_distribution(encoded.state, kAliceModes);
            const ModeCounts seen = sample_outcome(alice, rng);
            auto bob_only = condition_on(encoded.state, kAliceModes, seen, /*absorb=*/true);
            rec.action = ScenarioAction::DiscardedByAlice;
            deliver(*bob_only.state);
            rec.pattern->counts[protocol::DetectionPattern::d] = seen[0] + seen[1];
            rec.note = ClassicalNote{ClassicalNote::Kind::Repeat, std::nullopt};
            break;
        }
        case Scenario::B:
            if (config.clone_policy == ClonePolicy::CloneIntended) {
                rec.action = ScenarioAction::ClonedResend;
                deliver(protocol::mixed_basis_state(registry, message));
            } else {
                rec.action = ScenarioAction::Sent;
                deliver(encoded.state);
                rec.note = ClassicalNote{ClassicalNote::Kind::CorrectTo, message};
                channel.send(trial, trial, *rec.note);
            }
            break;
        case Scenario::C:
            rec.action = ScenarioAction::PairStopped;
            if (config.erase_notes) {
                rec.note = ClassicalNote{ClassicalNote::Kind::Erase, std::nullopt};
                channel.send(trial, trial, *rec.note);
            } else {
                rec.note = ClassicalNote{ClassicalNote::Kind::Repeat, std::nullopt};
            }
            break;
    }
    return rec;
}

std::vector<Symbol> intended_messages(const MessageSource& source, std::int64_t n, std::uint64_t seed) {
    if (n < 1) {
        throw ConfigError("number of messages must be >= 1");
    }
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(n));
    if (const auto* fixed = std::get_if<FixedSequence>(&source)) {
        if (fixed->symbols.empty()) {
            throw ConfigError("fixed message sequence is empty");
        }
        for (std::int64_t i = 0; i < n; ++i) {
            out.push_back(fixed->symbols[static_cast<std::size_t>(i) % fixed->symbols.size()]);
        }
        return out;
    }
    const auto& probs = std::get<IidSource>(source).probabilities;
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw ConfigError("message probabilities must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kDistributionTolerance) {
        throw ConfigError("message probabilities must sum to 1");
    }
    for (std::int64_t i = 0; i < n; ++i) {
        RngStream rng = RngStream::derive(seed, stream::kMessage, static_cast<std::uint64_t>(i));
        const double u = rng.uniform();
        double cumulative = 0.0;
        std::size_t pick = 3;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            cumulative += probs[k];
            if (probs[k] > 0.0 && u < cumulative) {
                pick = k;
                break;
            }
        }
        while (probs[pick] <= 0.0) --pick;  // rounding fallback: last supported symbol
        out.push_back(protocol::kAlphabet[pick]);
    }
    return out;
}

SessionResult run_session(const ScenarioConfig& config, const MessageSource& source, std::int64_t n,
                          std::uint64_t seed) {
    config.validate();
    SessionResult result;
    result.intended = intended_messages(source, n, seed);

    ClassicalChannel channel(config.classical_delay);
    capacity::CapacityInputs counts;
    std::int64_t trial = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const Symbol message = result.intended[static_cast<std::size_t>(i)];
        auto& c = counts.per_symbol[protocol::index_of(message)];
        ++c.intended;
        while (true) {
            RngStream rng = RngStream::derive(seed, stream::kTrial, static_cast<std::uint64_t>(trial));
            TrialRecord rec = scenario_step(config, message, trial, i, rng, channel);
            auto due = channel.deliver_until(trial);
            result.deliveries.insert(result.deliveries.end(), due.begin(), due.end());
            ++trial;

            ++c.attempts;
            if (rec.branch == protocol::Branch::Wrong) ++c.wrong_branch;
            if (rec.action == ScenarioAction::ClonedResend) ++c.cloned;
            const bool retry = rec.repeat_scheduled();
            if (retry) {
                ++c.repeats;
                ++c.discarded;
            } else {
                ++c.delivered;
            }
            result.records.push_back(std::move(rec));
            if (!retry) break;
        }
    }
    auto rest = channel.flush(trial);
    result.deliveries.insert(result.deliveries.end(), rest.begin(), rest.end());

    counts.pairs_consumed = trial;
    for (const auto& c : counts.per_symbol) {
        counts.messages_delivered += c.delivered;
    }
    result.report = capacity::capacity_from_counts(counts);
    return result;
}

std::vector<BobEntry> bob_log(const std::vector<TrialRecord>& records) {
    std::vector<BobEntry> out;
    for (const auto& r : records) {
        if (r.pattern) {
            protocol::DetectionPattern seen = *r.pattern;
            seen.counts[protocol::DetectionPattern::d] = 0;  // Alice's detector, not Bob's
            out.push_back({r.trial, seen, *r.decoded});
        }
    }
    return out;
}

std::vector<Symbol> bob_reconstruction(const std::vector<TrialRecord>& records,
                                       const std::vector<Delivery>& deliveries) {
    std::map<std::int64_t, Symbol> received;
    for (const auto& entry : bob_log(records)) {
        if (entry.decoded.verdict == protocol::Verdict::Decoded) {
            received[entry.trial] = *entry.decoded.symbol;
        }
    }
    for (const auto& d : deliveries) {
        switch (d.note.kind) {
            case ClassicalNote::Kind::CorrectTo:
                if (auto it = received.find(d.about_trial); it != received.end()) {
                    it->second = *d.note.symbol;
                }
                break;
            case ClassicalNote::Kind::Erase:
                received.erase(d.about_trial);
                break;
            case ClassicalNote::Kind::Repeat:
                break;
        }
    }
    std::vector<Symbol> out;
    out.reserve(received.size());
    for (const auto& [t, s] : received) {
        out.push_back(s);
    }
    return out;
}

}  // namespace mixdense::session
