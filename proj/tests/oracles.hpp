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

// Reference implementations the tests check the library against. Everything
// here is deliberately naive -- plain loops, full term-map scans, exact
// integer arithmetic -- and shares no code with the implementations under
// test beyond the public model accessors.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dqmforge/model.hpp"
#include "dqmforge/random.hpp"

namespace oracle {

/// Discrete-assignment energy by scanning every stored term and matching it
/// against the assignment (no keyed lookups).
inline double dqm_energy(const dqmforge::DiscreteModel& model, const dqmforge::Assignment& a) {
    double energy = 0.0;
    for (const auto& [key, value] : model.linear_terms())
        if (a[key[0]] == key[1]) energy += value;
    for (const auto& [key, value] : model.quadratic_terms())
        if (a[key[0]] == key[2] && a[key[1]] == key[3]) energy += value;
    return energy;
}

/// Binary/spin-configuration energy by scanning every stored term.
inline double binary_energy(const dqmforge::BinaryModel& model,
                            const std::vector<std::int8_t>& config) {
    double energy = model.offset();
    for (const auto& [i, value] : model.linear_terms()) energy += value * config[i];
    for (const auto& [key, value] : model.quadratic_terms())
        energy += value * config[key.first] * config[key.second];
    return energy;
}

/// All m^n assignments in lexicographic (odometer) order.
inline std::vector<dqmforge::Assignment> all_assignments(int n, int m) {
    std::vector<dqmforge::Assignment> out;
    dqmforge::Assignment a(n, 0);
    while (true) {
        out.push_back(a);
        int i = n - 1;
        while (i >= 0 && a[i] == m - 1) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

/// All 2^n configurations of a vartype in lexicographic order
/// ({0,1} ordered 0 < 1; {-1,+1} ordered -1 < +1).
inline std::vector<std::vector<std::int8_t>> all_configs(int n, dqmforge::Vartype vartype) {
    const std::int8_t lo = vartype == dqmforge::Vartype::BINARY ? 0 : -1;
    const std::int8_t hi = vartype == dqmforge::Vartype::BINARY ? 1 : 1;
    std::vector<std::vector<std::int8_t>> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::int8_t> config(n, lo);
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << (n - 1 - i))) config[i] = hi;
        out.push_back(std::move(config));
    }
    return out;
}

struct DqmOptima {
    double energy = 0.0;
    std::vector<dqmforge::Assignment> assignments;  ///< within 1e-9 of energy, sorted
};

inline DqmOptima brute_force(const dqmforge::DiscreteModel& model) {
    DqmOptima best;
    const auto assignments = all_assignments(model.num_variables(), model.num_values());
    std::vector<double> energies;
    energies.reserve(assignments.size());
    best.energy = std::numeric_limits<double>::infinity();
    for (const auto& a : assignments) {
        energies.push_back(oracle::dqm_energy(model, a));
        best.energy = std::min(best.energy, energies.back());
    }
    for (std::size_t i = 0; i < assignments.size(); ++i)
        if (energies[i] <= best.energy + 1e-9) best.assignments.push_back(assignments[i]);
    return best;
}

struct BinaryOptima {
    double energy = 0.0;
    std::vector<std::vector<std::int8_t>> configs;  ///< within 1e-9 of energy, sorted
};

inline BinaryOptima brute_force(const dqmforge::BinaryModel& model) {
    BinaryOptima best;
    const auto configs = all_configs(model.num_variables(), model.vartype());
    std::vector<double> energies;
    energies.reserve(configs.size());
    best.energy = std::numeric_limits<double>::infinity();
    for (const auto& config : configs) {
        energies.push_back(oracle::binary_energy(model, config));
        best.energy = std::min(best.energy, energies.back());
    }
    for (std::size_t i = 0; i < configs.size(); ++i)
        if (energies[i] <= best.energy + 1e-9) best.configs.push_back(configs[i]);
    return best;
}

/// Exact lower-tail sign-test probability 2^-N * sum_{k=0}^{n_w} C(N, k)
/// with N = n_b + n_w, via 128-bit integer binomials. Exact up to the final
/// long-double rounding; valid for N <= 126.
inline long double binomial_tail(int n_b, int n_w) {
    if (n_b < 0 || n_w < 0) throw std::invalid_argument("negative count");
    const int n = n_b + n_w;
    if (n == 0 || n > 126) throw std::invalid_argument("count total out of oracle range");
    unsigned __int128 sum = 1;   // C(n, 0)
    unsigned __int128 coef = 1;
    for (int k = 1; k <= n_w; ++k) {
        coef = coef * static_cast<unsigned>(n - k + 1) / static_cast<unsigned>(k);
        sum += coef;
    }
    return static_cast<long double>(sum) * std::exp2(static_cast<long double>(-n));
}

/// A dense random DQM: every linear and quadratic entry drawn uniformly
/// from [-1, 1].
inline dqmforge::DiscreteModel random_dqm(int n, int m, dqmforge::Rng& rng) {
    dqmforge::DiscreteModel model(n, m);
    for (int i = 0; i < n; ++i)
        for (int alpha = 0; alpha < m; ++alpha)
            model.add_linear(i, alpha, 2.0 * rng.uniform() - 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int alpha = 0; alpha < m; ++alpha)
                for (int beta = 0; beta < m; ++beta)
                    model.add_quadratic(i, j, alpha, beta, 2.0 * rng.uniform() - 1.0);
    return model;
}

}  // namespace oracle
