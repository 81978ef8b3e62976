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

#include "mixdense/report.hpp"

#include <sstream>

namespace mixdense::report {

using nlohmann::json;

namespace {

json counts_to_json(const capacity::SymbolCounts& c) {
    return json{{"intended", c.intended},   {"attempts", c.attempts},   {"delivered", c.delivered},
                {"repeats", c.repeats},     {"discarded", c.discarded}, {"cloned", c.cloned},
                {"wrong_branch", c.wrong_branch}};
}

capacity::SymbolCounts counts_from_json(const json& j) {
    capacity::SymbolCounts c;
    j.at("intended").get_to(c.intended);
    j.at("attempts").get_to(c.attempts);
    j.at("delivered").get_to(c.delivered);
    j.at("repeats").get_to(c.repeats);
    j.at("discarded").get_to(c.discarded);
    j.at("cloned").get_to(c.cloned);
    j.at("wrong_branch").get_to(c.wrong_branch);
    return c;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

}  // namespace

json capacity_to_json(const capacity::CapacityReport& r) {
    json per_symbol = json::object();
    json uncontrolled = json::object();
    for (protocol::Symbol s : protocol::kAlphabet) {
        const auto i = protocol::index_of(s);
        per_symbol[protocol::to_string(s)] = counts_to_json(r.per_symbol_counts[i]);
        uncontrolled[protocol::to_string(s)] = r.per_symbol_uncontrolled_fraction[i];
    }
    return json{
        {"per_symbol_counts", per_symbol},
        {"pairs_consumed", r.pairs_consumed},
        {"messages_delivered", r.messages_delivered},
        {"alphabet_size", r.alphabet_size},
        {"efficiency", r.efficiency},
        {"effective_alphabet", r.effective_alphabet},
        {"bits_per_pair", r.bits_per_pair},
        {"bits_per_pair_rounded", r.bits_per_pair_rounded},
        {"bits_per_received_message", r.bits_per_received_message},
        {"uncontrolled_fraction", r.uncontrolled_fraction},
        {"per_symbol_uncontrolled_fraction", uncontrolled},
    };
}

capacity::CapacityReport capacity_from_json(const json& j) {
    capacity::CapacityReport r;
    for (protocol::Symbol s : protocol::kAlphabet) {
        const auto i = protocol::index_of(s);
        r.per_symbol_counts[i] = counts_from_json(j.at("per_symbol_counts").at(protocol::to_string(s)));
        j.at("per_symbol_uncontrolled_fraction").at(protocol::to_string(s)).get_to(r.per_symbol_uncontrolled_fraction[i]);
    }
    j.at("pairs_consumed").get_to(r.pairs_consumed);
    j.at("messages_delivered").get_to(r.messages_delivered);
    j.at("alphabet_size").get_to(r.alphabet_size);
    j.at("efficiency").get_to(r.efficiency);
    j.at("effective_alphabet").get_to(r.effective_alphabet);
    j.at("bits_per_pair").get_to(r.bits_per_pair);
    j.at("bits_per_pair_rounded").get_to(r.bits_per_pair_rounded);
    j.at("bits_per_received_message").get_to(r.bits_per_received_message);
    j.at("uncontrolled_fraction").get_to(r.uncontrolled_fraction);
    return r;
}

json analytic_to_json(const capacity::AnalyticCapacity& a) {
    json sent = json::object();
    json wasted = json::object();
    for (protocol::Symbol s : protocol::kAlphabet) {
        sent[protocol::to_string(s)] = a.sent_share[protocol::index_of(s)];
        wasted[protocol::to_string(s)] = a.wasted_share[protocol::index_of(s)];
    }
    return json{
        {"pairs_per_message", a.pairs_per_message},
        {"efficiency", a.efficiency},
        {"discard_fraction", a.discard_fraction},
        {"sent_share", sent},
        {"wasted_share", wasted},
        {"effective_alphabet", a.effective_alphabet},
        {"bits_per_pair", a.bits_per_pair},
        {"bits_per_pair_rounded", a.bits_per_pair_rounded},
    };
}

json session_report(const SessionMeta& meta, const session::SessionResult& result,
                    const capacity::AlphabetDistribution& alphabet) {
    json j = capacity_to_json(result.report);

    json config{
        {"scenario", to_string(meta.config.scenario)},
        {"owner", to_string(meta.config.owner)},
        {"messages", meta.messages},
        {"n_messages", meta.n_messages},
        {"seed", meta.seed},
        {"classical_delay", meta.config.classical_delay},
    };
    if (meta.config.scenario == Scenario::B) {
        config["clone_policy"] = to_string(meta.config.clone_policy);
    }
    if (meta.config.scenario == Scenario::C) {
        config["erase_notes"] = meta.config.erase_notes;
    }
    j["config"] = config;
    j["analytic"] = analytic_to_json(capacity::analytic_capacity(meta.config.scenario, alphabet));

    std::int64_t corrections = 0;
    std::int64_t erasures = 0;
    for (const auto& d : result.deliveries) {
        corrections += d.note.kind == session::ClassicalNote::Kind::CorrectTo;
        erasures += d.note.kind == session::ClassicalNote::Kind::Erase;
    }
    const auto bob = session::bob_log(result.records);
    const auto reconstructed = session::bob_reconstruction(result.records, result.deliveries);
    j["session"] = json{
        {"trials", static_cast<std::int64_t>(result.records.size())},
        {"bob_log_entries", static_cast<std::int64_t>(bob.size())},
        {"correct_to_notes", corrections},
        {"erase_notes", erasures},
        {"bob_sequence_matches_intended", reconstructed == result.intended},
    };
    return j;
}

std::string event_log_csv(const std::vector<session::TrialRecord>& records) {
    std::ostringstream out;
    out << kEventLogHeader << '\n';
    for (const auto& r : records) {
        out << r.trial << ',' << protocol::to_string(r.intended) << ',' << protocol::to_string(r.branch) << ','
            << session::to_string(r.action) << ',' << csv_field(r.pattern ? r.pattern->to_string() : "") << ','
            << (r.decoded ? r.decoded->to_string() : "") << ',' << csv_field(r.note ? r.note->to_string() : "")
            << '\n';
    }
    return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mixdense::report
