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

#include "mixdense/scenario.hpp"

#include "mixdense/errors.hpp"

namespace mixdense {

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::A: return "a";
        case Scenario::B: return "b";
        case Scenario::C: return "c";
    }
    return "?";
}

std::string to_string(Owner o) {
    switch (o) {
        case Owner::Bob: return "bob";
        case Owner::Anna: return "anna";
        case Owner::Alice: return "alice";
    }
    return "?";
}

std::string to_string(ClonePolicy c) { return c == ClonePolicy::CloneIntended ? "clone-intended" : "send-as-is"; }

Scenario parse_scenario(std::string_view text) {
    for (Scenario s : {Scenario::A, Scenario::B, Scenario::C}) {
        if (text == to_string(s)) return s;
    }
    throw ConfigError("unknown scenario '" + std::string(text) + "' (expected a, b or c)");
}

Owner parse_owner(std::string_view text) {
    for (Owner o : {Owner::Bob, Owner::Anna, Owner::Alice}) {
        if (text == to_string(o)) return o;
    }
    throw ConfigError("unknown owner '" + std::string(text) + "' (expected bob, anna or alice)");
}

ClonePolicy parse_clone_policy(std::string_view text) {
    for (ClonePolicy c : {ClonePolicy::CloneIntended, ClonePolicy::SendAsIs}) {
        if (text == to_string(c)) return c;
    }
    throw ConfigError("unknown clone policy '" + std::string(text) + "' (expected clone-intended or send-as-is)");
}

bool owner_allowed(Scenario s, Owner o) {
    switch (s) {
        case Scenario::A:
        case Scenario::B: return o == Owner::Bob || o == Owner::Anna;
        case Scenario::C: return o == Owner::Alice;
    }
    return false;
}

Owner default_owner(Scenario s) {
    switch (s) {
        case Scenario::A: return Owner::Bob;
        case Scenario::B: return Owner::Anna;
        case Scenario::C: return Owner::Alice;
    }
    return Owner::Bob;
}

}  // namespace mixdense
