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

#include <gtest/gtest.h>

#include <sstream>

using namespace mixdense;
using nlohmann::json;

namespace {

session::SessionResult run(Scenario s, std::uint64_t seed) {
    session::ScenarioConfig c;
    c.scenario = s;
    c.owner = default_owner(s);
    c.classical_delay = 2;
    return session::run_session(c, session::IidSource{}, 300, seed);
}

}  // namespace

TEST(Report, capacity_json_round_trip) {
    for (auto s : {Scenario::A, Scenario::B, Scenario::C}) {
        const auto r = run(s, 9).report;
        const auto text = report::dump(report::capacity_to_json(r));
        EXPECT_EQ(report::capacity_from_json(json::parse(text)), r);
    }
}

TEST(Report, event_log_has_one_row_per_trial) {
    for (auto s : {Scenario::A, Scenario::B, Scenario::C}) {
        const auto r = run(s, 3);
        std::istringstream in(report::event_log_csv(r.records));
        std::string line;
        std::getline(in, line);
        EXPECT_EQ(line, report::kEventLogHeader);
        std::size_t rows = 0;
        while (std::getline(in, line)) ++rows;
        EXPECT_EQ(rows, r.records.size());
        EXPECT_EQ(static_cast<std::int64_t>(rows), r.report.pairs_consumed);
    }
}

TEST(Report, event_log_quotes_patterns) {
    session::TrialRecord rec;
    rec.pattern = protocol::DetectionPattern::parse("aH:1,aV:1");
    rec.decoded = protocol::classify(*rec.pattern);
    const auto csv = report::event_log_csv({rec});
    EXPECT_NE(csv.find("\"aH:1,aV:1\""), std::string::npos);
    EXPECT_NE(csv.find(",chi1,"), std::string::npos);
}

TEST(Report, session_report_is_deterministic) {
    report::SessionMeta meta{{Scenario::A, Owner::Bob}, "uniform", 300, 5};
    const auto a = report::dump(report::session_report(meta, run(Scenario::A, 5), capacity::kUniformAlphabet));
    const auto b = report::dump(report::session_report(meta, run(Scenario::A, 5), capacity::kUniformAlphabet));
    EXPECT_EQ(a, b);
    const auto j = json::parse(a);
    EXPECT_TRUE(j.contains("efficiency"));
    EXPECT_TRUE(j.contains("bits_per_pair_rounded"));
    EXPECT_NEAR(j["analytic"]["efficiency"].get<double>(), 2.0 / 3.0, 1e-12);
    EXPECT_TRUE(j["session"]["bob_sequence_matches_intended"].get<bool>());
}
