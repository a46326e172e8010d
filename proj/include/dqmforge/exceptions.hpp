// Copyright 2026 dqmforge developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dqmforge {

/// Thrown when an exhaustive solve would enumerate more configurations than
/// the caller's cap allows.
class SearchSpaceTooLarge : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an embedding is structurally unusable for a given logical
/// model and hardware graph (note: *failing to find* an embedding is a value,
/// not an exception).
class EmbeddingError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Thrown for malformed configuration (bench configs, mode strings,
/// unresolvable hardware references).
class ConfigError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace dqmforge
