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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dqmforge/model.hpp"

namespace dqmforge {

/// How the constraint penalty strength of an encoding is chosen.
///
///  - auto_max: the largest |coefficient| of the discrete model being
///    encoded, with 1.0 as the fallback for an all-zero model;
///  - fixed(v): exactly v;
///  - scaled(mult): mult times the auto_max value.
struct PenaltyMode {
    enum class Kind { AutoMax, Fixed, Scaled };

    Kind kind = Kind::AutoMax;
    double value = 1.0;

    static PenaltyMode auto_max() { return {Kind::AutoMax, 1.0}; }
    static PenaltyMode fixed(double v);
    static PenaltyMode scaled(double mult);
};

/// Parse/print the compact mode spelling used in configs and reports:
/// "auto", "fixed:<v>", "scaled:<mult>".
PenaltyMode penalty_mode_from_string(const std::string& text);
std::string to_string(const PenaltyMode& mode);

/// Resolve a penalty mode against a model. Result is strictly positive.
double penalty_strength(const DiscreteModel& model, const PenaltyMode& mode);

struct EncodeOptions {
    Encoding encoding = Encoding::DomainWall;
    PenaltyMode penalty = PenaltyMode::auto_max();
};

/// One-hot encoding. Each discrete variable i becomes m binary indicator
/// variables x_{i,0..m-1}; selecting value alpha means x_{i,alpha} = 1 and
/// the rest 0. D(i,j,alpha,beta) lands on the indicator pair, L(i,alpha) on
/// the indicator, and each variable contributes the expanded penalty
///
///     lambda * (sum_alpha x_{i,alpha} - 1)^2
///       = lambda * (1 - sum_alpha x_{i,alpha} + 2 * sum_{alpha<beta} x_{i,alpha} x_{i,beta})
///
/// i.e. -lambda on each indicator, +2*lambda on same-variable indicator
/// pairs, and +lambda into the offset. The result is a BINARY model of
/// n*m variables carrying EncodingMeta.
BinaryModel encode_one_hot(const DiscreteModel& model,
                           const EncodeOptions& options = {Encoding::OneHot, PenaltyMode::auto_max()});

/// Domain-wall encoding. Each discrete variable i becomes a chain of m-1
/// spins s_{i,0..m-2} with fixed virtual boundaries s_{i,-1} = -1 and
/// s_{i,m-1} = +1; value alpha is read off the position of the single
/// -1 -> +1 domain wall, and the indicator is the exact substitution
///
///     x_{i,alpha} = (s_{i,alpha} - s_{i,alpha-1}) / 2.
///
/// The chain penalty -kappa * sum_alpha s_{i,alpha} s_{i,alpha+1} (over the
/// extended chain including boundaries) adds +kappa to the field of the
/// first chain spin, -kappa to the field of the last, and -kappa couplings
/// between consecutive chain spins; for m == 2 it vanishes entirely, which
/// is what makes single-spin variables unbreakable. The result is a SPIN
/// model of n*(m-1) variables carrying EncodingMeta.
BinaryModel encode_domain_wall(const DiscreteModel& model,
                               const EncodeOptions& options = {Encoding::DomainWall,
                                                               PenaltyMode::auto_max()});

/// Dispatch on options.encoding.
BinaryModel encode(const DiscreteModel& model, const EncodeOptions& options);

/// The result of decoding one binary/spin configuration back to the
/// discrete domain. `assignment` is present iff every variable's
/// constraint is intact; `violated` lists the offenders (sorted).
struct DecodedSample {
    std::optional<Assignment> assignment;
    std::vector<int> violated;

    bool valid() const { return assignment.has_value(); }
};

/// Decode a configuration of an encoded model. Works for both vartypes
/// (one-hot models that were converted to spin for sampling, and vice
/// versa). Throws std::invalid_argument if the model carries no one-hot or
/// domain-wall meta, or on a length/value mismatch.
DecodedSample decode(const BinaryModel& model, std::span<const std::int8_t> config);

/// The encoded configuration of a discrete assignment, in the encoding's
/// native domain: {0,1} indicators for one-hot, {-1,+1} chains for
/// domain-wall. Inverse of decode on valid configurations.
std::vector<std::int8_t> encode_assignment(const EncodingMeta& meta, const Assignment& assignment);

}  // namespace dqmforge
