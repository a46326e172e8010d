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

#include "dqmforge/encode.hpp"

#include <stdexcept>
#include <utility>

#include "dqmforge/detail/format.hpp"
#include "dqmforge/exceptions.hpp"

namespace dqmforge {

PenaltyMode PenaltyMode::fixed(double v) {
    if (!(v > 0.0)) throw std::invalid_argument("fixed penalty strength must be positive");
    return {Kind::Fixed, v};
}

PenaltyMode PenaltyMode::scaled(double mult) {
    if (!(mult > 0.0)) throw std::invalid_argument("penalty multiplier must be positive");
    return {Kind::Scaled, mult};
}

PenaltyMode penalty_mode_from_string(const std::string& text) {
    if (text == "auto") return PenaltyMode::auto_max();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        double value = 0.0;
        try {
            value = std::stod(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("penalty mode \"" + text + "\": malformed number");
        }
        try {
            if (kind == "fixed") return PenaltyMode::fixed(value);
            if (kind == "scaled") return PenaltyMode::scaled(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("penalty mode \"" + text + "\": " + e.what());
        }
    }
    throw ConfigError("penalty mode must be \"auto\", \"fixed:<v>\" or \"scaled:<mult>\", got \"" +
                      text + "\"");
}

std::string to_string(const PenaltyMode& mode) {
    switch (mode.kind) {
        case PenaltyMode::Kind::AutoMax: return "auto";
        case PenaltyMode::Kind::Fixed: return "fixed:" + detail::format_double(mode.value);
        case PenaltyMode::Kind::Scaled: return "scaled:" + detail::format_double(mode.value);
    }
    throw std::logic_error("unknown penalty mode");
}

double penalty_strength(const DiscreteModel& model, const PenaltyMode& mode) {
    const auto auto_max = [&model]() {
        const double largest = model.max_abs_coefficient();
        return largest > 0.0 ? largest : 1.0;
    };
    switch (mode.kind) {
        case PenaltyMode::Kind::AutoMax: return auto_max();
        case PenaltyMode::Kind::Fixed: return mode.value;
        case PenaltyMode::Kind::Scaled: return mode.value * auto_max();
    }
    throw std::logic_error("unknown penalty mode");
}

BinaryModel encode_one_hot(const DiscreteModel& model, const EncodeOptions& options) {
    const int n = model.num_variables();
    const int m = model.num_values();
    const double lambda = penalty_strength(model, options.penalty);

    EncodingMeta meta{Encoding::OneHot, n, m, lambda};
    BinaryModel encoded(meta.num_binary_vars(), Vartype::BINARY);

    for (const auto& [key, value] : model.linear_terms())
        encoded.add_linear(meta.var(key[0], key[1]), value);
    for (const auto& [key, value] : model.quadratic_terms())
        encoded.add_quadratic(meta.var(key[0], key[2]), meta.var(key[1], key[3]), value);

    // lambda * (sum_alpha x_{i,alpha} - 1)^2 per variable, expanded.
    for (int i = 0; i < n; ++i) {
        for (int alpha = 0; alpha < m; ++alpha) {
            encoded.add_linear(meta.var(i, alpha), -lambda);
            for (int beta = alpha + 1; beta < m; ++beta)
                encoded.add_quadratic(meta.var(i, alpha), meta.var(i, beta), 2 * lambda);
        }
        encoded.add_offset(lambda);
    }

    encoded.set_meta(meta);
    return encoded;
}

namespace {

// The one-hot indicator x_{i,alpha} as an affine function of variable i's
// chain spins: a list of (slot, coefficient) terms plus a constant. Virtual
// boundary spins s_{-1} = -1 and s_{m-1} = +1 fold into the constant.
struct AffineIndicator {
    std::pair<int, double> terms[2];
    int num_terms = 0;
    double constant = 0.0;
};

AffineIndicator domain_wall_indicator(int m, int alpha) {
    // x = (s_alpha - s_{alpha-1}) / 2
    AffineIndicator x;
    if (alpha <= m - 2)
        x.terms[x.num_terms++] = {alpha, 0.5};
    else
        x.constant += 0.5;  // s_{m-1} = +1
    if (alpha - 1 >= 0)
        x.terms[x.num_terms++] = {alpha - 1, -0.5};
    else
        x.constant += 0.5;  // -s_{-1} / 2 = +1/2
    return x;
}

}  // namespace

BinaryModel encode_domain_wall(const DiscreteModel& model, const EncodeOptions& options) {
    const int n = model.num_variables();
    const int m = model.num_values();
    const double kappa = penalty_strength(model, options.penalty);

    EncodingMeta meta{Encoding::DomainWall, n, m, kappa};
    BinaryModel encoded(meta.num_binary_vars(), Vartype::SPIN);

    for (const auto& [key, value] : model.linear_terms()) {
        const auto x = domain_wall_indicator(m, key[1]);
        for (int t = 0; t < x.num_terms; ++t)
            encoded.add_linear(meta.var(key[0], x.terms[t].first), value * x.terms[t].second);
        encoded.add_offset(value * x.constant);
    }

    for (const auto& [key, value] : model.quadratic_terms()) {
        const auto xa = domain_wall_indicator(m, key[2]);
        const auto xb = domain_wall_indicator(m, key[3]);
        // (sum_a c_a s_a + c)(sum_b c_b s_b + c') expanded; the two factors
        // belong to different discrete variables, so no squared spins arise.
        for (int t = 0; t < xa.num_terms; ++t)
            for (int u = 0; u < xb.num_terms; ++u)
                encoded.add_quadratic(meta.var(key[0], xa.terms[t].first),
                                      meta.var(key[1], xb.terms[u].first),
                                      value * xa.terms[t].second * xb.terms[u].second);
        for (int t = 0; t < xa.num_terms; ++t)
            encoded.add_linear(meta.var(key[0], xa.terms[t].first),
                               value * xa.terms[t].second * xb.constant);
        for (int u = 0; u < xb.num_terms; ++u)
            encoded.add_linear(meta.var(key[1], xb.terms[u].first),
                               value * xa.constant * xb.terms[u].second);
        encoded.add_offset(value * xa.constant * xb.constant);
    }

    // Chain penalty -kappa * sum s_a s_{a+1} over each variable's extended
    // chain. The boundary pairs contribute fields (+kappa on the first chain
    // spin, -kappa on the last — for m == 2 these are the same spin and
    // cancel exactly), the interior pairs ferromagnetic couplings.
    for (int i = 0; i < n; ++i) {
        encoded.add_linear(meta.var(i, 0), kappa);
        encoded.add_linear(meta.var(i, m - 2), -kappa);
        for (int a = 0; a + 1 <= m - 2; ++a)
            encoded.add_quadratic(meta.var(i, a), meta.var(i, a + 1), -kappa);
    }

    encoded.set_meta(meta);
    return encoded;
}

BinaryModel encode(const DiscreteModel& model, const EncodeOptions& options) {
    switch (options.encoding) {
        case Encoding::OneHot: return encode_one_hot(model, options);
        case Encoding::DomainWall: return encode_domain_wall(model, options);
        case Encoding::Raw:
            throw std::invalid_argument("\"raw\" is not an encoding; choose one-hot or domain-wall");
    }
    throw std::logic_error("unknown encoding");
}

DecodedSample decode(const BinaryModel& model, std::span<const std::int8_t> config) {
    if (!model.meta() || model.meta()->encoding == Encoding::Raw)
        throw std::invalid_argument("model carries no one-hot or domain-wall meta to decode with");
    const EncodingMeta& meta = *model.meta();
    if (model.num_variables() != meta.num_binary_vars())
        throw std::invalid_argument("model size does not match its encoding meta");
    if (static_cast<int>(config.size()) != model.num_variables())
        throw std::invalid_argument("configuration length does not match the number of variables");
    for (std::int8_t value : config) {
        const bool ok = model.vartype() == Vartype::BINARY ? (value == 0 || value == 1)
                                                           : (value == -1 || value == 1);
        if (!ok) throw std::invalid_argument("configuration value does not match the model vartype");
    }

    const bool binary = model.vartype() == Vartype::BINARY;
    DecodedSample result;
    Assignment assignment(meta.n, 0);

    if (meta.encoding == Encoding::OneHot) {
        for (int i = 0; i < meta.n; ++i) {
            int hot = -1;
            int count = 0;
            for (int alpha = 0; alpha < meta.m; ++alpha) {
                const std::int8_t raw = config[meta.var(i, alpha)];
                const int bit = binary ? raw : (1 - raw) / 2;
                if (bit == 1) {
                    hot = alpha;
                    ++count;
                }
            }
            if (count == 1)
                assignment[i] = hot;
            else
                result.violated.push_back(i);
        }
    } else {
        for (int i = 0; i < meta.n; ++i) {
            // Walk the extended chain -1, s_0, ..., s_{m-2}, +1 and count
            // sign changes; a valid chain has exactly one, at the encoded
            // value's position.
            int changes = 0;
            int wall = -1;
            int prev = -1;
            for (int alpha = 0; alpha < meta.m; ++alpha) {
                const int next = alpha <= meta.m - 2
                        ? (binary ? 1 - 2 * config[meta.var(i, alpha)] : config[meta.var(i, alpha)])
                        : +1;
                if (next != prev) {
                    ++changes;
                    wall = alpha;
                }
                prev = next;
            }
            if (changes == 1)
                assignment[i] = wall;
            else
                result.violated.push_back(i);
        }
    }

    if (result.violated.empty()) result.assignment = std::move(assignment);
    return result;
}

std::vector<std::int8_t> encode_assignment(const EncodingMeta& meta, const Assignment& assignment) {
    if (meta.encoding == Encoding::Raw)
        throw std::invalid_argument("raw meta has no encoded form");
    if (static_cast<int>(assignment.size()) != meta.n)
        throw std::invalid_argument("assignment length does not match the number of variables");
    for (int value : assignment)
        if (value < 0 || value >= meta.m)
            throw std::invalid_argument("assignment value out of range");

    std::vector<std::int8_t> config(meta.num_binary_vars());
    if (meta.encoding == Encoding::OneHot) {
        for (int i = 0; i < meta.n; ++i)
            for (int alpha = 0; alpha < meta.m; ++alpha)
                config[meta.var(i, alpha)] = assignment[i] == alpha ? 1 : 0;
    } else {
        // Spins left of the wall are -1, the rest +1.
        for (int i = 0; i < meta.n; ++i)
            for (int slot = 0; slot < meta.m - 1; ++slot)
                config[meta.var(i, slot)] = slot < assignment[i] ? std::int8_t{-1} : std::int8_t{1};
    }
    return config;
}

}  // namespace dqmforge
