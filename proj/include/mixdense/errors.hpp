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

#include <stdexcept>
#include <string>

namespace mixdense {

/// A mode label is missing from (or duplicated in) a registry, or two
/// objects built on different registries were combined.
struct RegistryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix, state or parameter failed a numerical or structural check.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Photons have support on modes that are not being detected.
struct CoverageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Self-consistency of computed tables was violated. Never expected at runtime.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Bad user-supplied run configuration.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace mixdense
