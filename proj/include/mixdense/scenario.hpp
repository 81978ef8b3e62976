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

#include <string>
#include <string_view>

namespace mixdense {

/// Operational scenarios for handling a wrong-branch encoding.
///   A: Alice discards the wrong photon; Bob sees one photon; Alice repeats.
///   B: Alice uses every photon, sending clones or the wrong photon as is.
///   C: Alice owns the source and stops the whole pair; Alice repeats.
enum class Scenario { A, B, C };

/// Who owns the pair source. Bookkeeping only.
enum class Owner { Bob, Anna, Alice };

enum class ClonePolicy { CloneIntended, SendAsIs };

std::string to_string(Scenario s);
std::string to_string(Owner o);
std::string to_string(ClonePolicy c);

// Parsers throw ConfigError on unknown names.
Scenario parse_scenario(std::string_view text);
Owner parse_owner(std::string_view text);
ClonePolicy parse_clone_policy(std::string_view text);

/// Owners allowed per scenario: A {bob, anna}, B {anna, bob}, C {alice}.
bool owner_allowed(Scenario s, Owner o);
Owner default_owner(Scenario s);

}  // namespace mixdense
