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

namespace mixdense::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Samples for the empirical branch-statistics check.
    std::int64_t branch_samples = 100000;
    /// Negative control: adds a deliberately non-unitary matrix to the
    /// unitarity check.
    bool inject_nonunitary = false;
};

/// Self-check suite: unitarity, norm and photon-number conservation, HOM dip,
/// perpendicular-photon bunching, signature disjointness, deterministic
/// decoding, Phi+/Phi- indistinguishability, branch statistics and capacity
/// reference values.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mixdense::verify
