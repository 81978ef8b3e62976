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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixdense/capacity.hpp"
#include "mixdense/session.hpp"

namespace mixdense::report {

inline constexpr const char* kEventLogHeader = "trial,intended,branch,action,pattern,decoded,note";

nlohmann::json capacity_to_json(const capacity::CapacityReport& report);
/// Throws nlohmann::json::exception on missing or mistyped fields.
capacity::CapacityReport capacity_from_json(const nlohmann::json& j);

nlohmann::json analytic_to_json(const capacity::AnalyticCapacity& analytic);

struct SessionMeta {
    session::ScenarioConfig config;
    std::string messages;  // "uniform" or the explicit sequence as given
    std::int64_t n_messages = 0;
    std::uint64_t seed = 0;
};

/// Full simulate report: the capacity fields at top level, plus "config",
/// "analytic" (expectation for the configured alphabet) and "session"
/// (delivery checks) objects.
nlohmann::json session_report(const SessionMeta& meta, const session::SessionResult& result,
                              const capacity::AlphabetDistribution& alphabet);

/// One CSV row per trial under kEventLogHeader. Fields holding commas are
/// double-quoted.
std::string event_log_csv(const std::vector<session::TrialRecord>& records);

/// Serializes with two-space indentation and a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace mixdense::report
