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

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace dqmforge::detail {

/// Shortest round-trip decimal representation of a double. Deterministic and
/// locale-independent, so emitted files are byte-stable across runs.
inline std::string format_double(double value) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) throw std::runtime_error("double formatting failed");
    return std::string(buffer, end);
}

/// Scientific notation with 3 significant digits (e.g. 2.27e-13), the format
/// used for p-values in comparison tables.
inline std::string format_scientific3(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2e", value);
    return std::string(buffer);
}

}  // namespace dqmforge::detail
