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

// Scenario state machines: one trial per source pair, a delayed classical
// side channel, and whole-session orchestration.

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mixdense/capacity.hpp"
#include "mixdense/protocol.hpp"
#include "mixdense/rng.hpp"
#include "mixdense/scenario.hpp"

namespace mixdense::session {

using protocol::Symbol;

struct ScenarioConfig {
    Scenario scenario = Scenario::A;
    Owner owner = Owner::Bob;
    ClonePolicy clone_policy = ClonePolicy::SendAsIs;
    /// Trials between enqueueing a classical note and Bob receiving it.
    int classical_delay = 0;
    /// Scenario C only: tell Bob to erase his half of stopped pairs.
    bool erase_notes = false;

    /// Throws ConfigError for owner/scenario combinations outside A{bob,anna},
    /// B{anna,bob}, C{alice}, a negative delay, or erase notes outside C.
    void validate() const;
};

enum class ScenarioAction { Sent, DiscardedByAlice, PairStopped, ClonedResend };
std::string to_string(ScenarioAction a);

struct ClassicalNote {
    enum class Kind { Repeat, CorrectTo, Erase };
    Kind kind = Kind::Repeat;
    std::optional<Symbol> symbol;  // CorrectTo only

    std::string to_string() const;
    bool operator==(const ClassicalNote&) const = default;
};

struct TrialRecord {
    std::int64_t trial = 0;
    std::int64_t message_index = 0;
    Symbol intended = Symbol::Chi1;
    protocol::Branch branch = protocol::Branch::Controlled;
    ScenarioAction action = ScenarioAction::Sent;
    Owner owner = Owner::Bob;
    /// What Bob's analyzer registered (plus Alice's d click in scenario A).
    /// Absent when no photon reached Bob.
    std::optional<protocol::DetectionPattern> pattern;
    std::optional<protocol::ClassifiedOutcome> decoded;
    std::optional<ClassicalNote> note;

    /// Alice repeats the message after this trial.
    bool repeat_scheduled() const {
        return action == ScenarioAction::DiscardedByAlice || action == ScenarioAction::PairStopped;
    }
    bool operator==(const TrialRecord&) const = default;
};

struct Delivery {
    std::int64_t about_trial = 0;
    std::int64_t sent_at = 0;
    std::int64_t delivered_at = 0;
    ClassicalNote note;

    bool operator==(const Delivery&) const = default;
};

/// FIFO public channel from Alice to Bob. A note sent at trial t becomes
/// available at trial t + delay.
class ClassicalChannel {
public:
    /// Throws ConfigError for a negative delay.
    explicit ClassicalChannel(int delay);

    int delay() const { return delay_; }
    void send(std::int64_t sent_at, std::int64_t about_trial, ClassicalNote note);
    /// Notes due at or before `now`, in send order.
    std::vector<Delivery> deliver_until(std::int64_t now);
    /// Everything still in flight, delivered at max(due, now).
    std::vector<Delivery> flush(std::int64_t now);
    bool empty() const { return queue_.empty(); }

private:
    int delay_;
    std::deque<Delivery> queue_;
};

/// One source pair through Alice and the scenario's wrong-branch rule, then
/// Bob's analyzer. Randomness comes only from `rng`.
TrialRecord scenario_step(const ScenarioConfig& config, Symbol message, std::int64_t trial,
                          std::int64_t message_index, RngStream& rng, ClassicalChannel& channel);

struct FixedSequence {
    std::vector<Symbol> symbols;  // cycled to the session length
};
struct IidSource {
    capacity::AlphabetDistribution probabilities = capacity::kUniformAlphabet;
};
using MessageSource = std::variant<FixedSequence, IidSource>;

/// The n intended messages. IID draws use per-message streams from `seed`.
std::vector<Symbol> intended_messages(const MessageSource& source, std::int64_t n, std::uint64_t seed);

struct BobEntry {
    std::int64_t trial = 0;
    protocol::DetectionPattern pattern;
    protocol::ClassifiedOutcome decoded;
};

struct SessionResult {
    std::vector<Symbol> intended;
    std::vector<TrialRecord> records;
    std::vector<Delivery> deliveries;
    capacity::CapacityReport report;
};

/// Runs trials, including repeats, until all n messages are through.
/// Deterministic in (config, source, n, seed): trial t draws from the stream
/// derived from (seed, trial, t). Throws ConfigError for n < 1.
SessionResult run_session(const ScenarioConfig& config, const MessageSource& source, std::int64_t n,
                          std::uint64_t seed);

/// Only the trials where photons reached Bob, as Bob sees them.
std::vector<BobEntry> bob_log(const std::vector<TrialRecord>& records);

/// Bob's message sequence: decoded trials in order, SinglePhoton trials
/// dropped, then CorrectTo and Erase notes applied.
std::vector<Symbol> bob_reconstruction(const std::vector<TrialRecord>& records,
                                       const std::vector<Delivery>& deliveries);

}  // namespace mixdense::session
