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
#include <random>

namespace mixdense {

/// Reproducible random stream.
///
/// Streams are derived from a master seed plus a (purpose, index) pair by
/// SplitMix64 mixing; the mixed value seeds a std::mt19937_64, whose output
/// sequence is fixed by the standard. Uniform doubles take the top 53 bits of
/// each draw, so results do not depend on the standard library's
/// distribution implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for item `index` of kind `purpose` under `master_seed`.
    static RngStream derive(std::uint64_t master_seed, std::uint64_t purpose, std::uint64_t index);

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Purpose tags for derived streams.
namespace stream {
inline constexpr std::uint64_t kTrial = 1;
inline constexpr std::uint64_t kMessage = 2;
}  // namespace stream

}  // namespace mixdense
