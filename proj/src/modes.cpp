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

#include "mixdense/modes.hpp"

#include <algorithm>

#include "mixdense/errors.hpp"

namespace mixdense {

std::string to_string(Path path) {
    switch (path) {
        case Path::Alice: return "alice";
        case Path::Bob: return "bob";
        case Path::MonitorD: return "monitor_d";
        case Path::AnalyzerOutA: return "analyzer_out_a";
        case Path::AnalyzerOutB: return "analyzer_out_b";
    }
    return "?";
}

std::string to_string(Polarization pol) { return pol == Polarization::H ? "H" : "V"; }

std::string to_string(const ModeLabel& mode) { return to_string(mode.path) + ":" + to_string(mode.pol); }

ModeRegistry::ModeRegistry(std::vector<ModeLabel> modes) : modes_(std::move(modes)) {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        for (std::size_t j = i + 1; j < modes_.size(); ++j) {
            if (modes_[i] == modes_[j]) {
                throw RegistryError("duplicate mode in registry: " + to_string(modes_[i]));
            }
        }
    }
}

std::shared_ptr<const ModeRegistry> ModeRegistry::from_paths(std::initializer_list<Path> paths) {
    std::vector<ModeLabel> modes;
    for (Path p : paths) {
        modes.push_back({p, Polarization::H});
        modes.push_back({p, Polarization::V});
    }
    return std::make_shared<const ModeRegistry>(std::move(modes));
}

std::optional<std::size_t> ModeRegistry::find(const ModeLabel& mode) const {
    auto it = std::find(modes_.begin(), modes_.end(), mode);
    if (it == modes_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - modes_.begin());
}

std::size_t ModeRegistry::index_of(const ModeLabel& mode) const {
    auto idx = find(mode);
    if (!idx) {
        throw RegistryError("mode not registered: " + to_string(mode));
    }
    return *idx;
}

bool ModeRegistry::has_path(Path path) const {
    return std::any_of(modes_.begin(), modes_.end(), [&](const ModeLabel& m) { return m.path == path; });
}

}  // namespace mixdense
