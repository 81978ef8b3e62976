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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mixdense {

enum class Path { Alice, Bob, MonitorD, AnalyzerOutA, AnalyzerOutB };

enum class Polarization { H, V };

std::string to_string(Path path);
std::string to_string(Polarization pol);

struct ModeLabel {
    Path path;
    Polarization pol;

    auto operator<=>(const ModeLabel&) const = default;
};

std::string to_string(const ModeLabel& mode);

/// Ordered, immutable list of optical modes. Occupation vectors and element
/// matrices index against it.
class ModeRegistry {
public:
    /// Throws RegistryError on duplicate labels.
    explicit ModeRegistry(std::vector<ModeLabel> modes);

    /// Registers an H and a V mode for every path, in the order given.
    static std::shared_ptr<const ModeRegistry> from_paths(std::initializer_list<Path> paths);

    std::size_t size() const { return modes_.size(); }
    std::span<const ModeLabel> modes() const { return modes_; }
    const ModeLabel& at(std::size_t index) const { return modes_.at(index); }

    std::optional<std::size_t> find(const ModeLabel& mode) const;
    /// Throws RegistryError when the mode is not registered.
    std::size_t index_of(const ModeLabel& mode) const;
    bool contains(const ModeLabel& mode) const { return find(mode).has_value(); }
    bool has_path(Path path) const;

    bool operator==(const ModeRegistry& other) const { return modes_ == other.modes_; }

private:
    std::vector<ModeLabel> modes_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

}  // namespace mixdense
