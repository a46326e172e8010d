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

#include "dqmforge/sample.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "dqmforge/detail/parallel.hpp"
#include "dqmforge/exceptions.hpp"
#include "dqmforge/random.hpp"

namespace dqmforge {

namespace {

constexpr double kDegeneracyTol = 1e-9;

// Steps between full-energy recomputations during exhaustive enumeration;
// bounds floating-point drift of the incremental updates well below
// kDegeneracyTol without affecting the O(1)-per-step cost.
constexpr std::uint64_t kResyncInterval = std::uint64_t{1} << 16;

// Compressed adjacency for fast local-field evaluation.
struct Csr {
    std::vector<double> h;
    std::vector<int> offsets;    // size n + 1
    std::vector<int> neighbor;
    std::vector<double> weight;

    explicit Csr(const BinaryModel& model) {
        const int n = model.num_variables();
        h.assign(n, 0.0);
        for (const auto& [i, value] : model.linear_terms()) h[i] = value;

        std::vector<int> degree(n, 0);
        for (const auto& [key, value] : model.quadratic_terms()) {
            ++degree[key.first];
            ++degree[key.second];
        }
        offsets.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + degree[i];
        neighbor.assign(offsets[n], 0);
        weight.assign(offsets[n], 0.0);
        std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
        for (const auto& [key, value] : model.quadratic_terms()) {
            neighbor[cursor[key.first]] = key.second;
            weight[cursor[key.first]++] = value;
            neighbor[cursor[key.second]] = key.first;
            weight[cursor[key.second]++] = value;
        }
    }

    double local_field(int i, const std::vector<std::int8_t>& config) const {
        double field = h[i];
        for (int t = offsets[i]; t < offsets[i + 1]; ++t)
            field += weight[t] * config[neighbor[t]];
        return field;
    }
};

}  // namespace

BetaSchedule BetaSchedule::explicit_range(double hot, double cold) {
    if (!(hot > 0.0) || !(cold > 0.0))
        throw std::invalid_argument("beta values must be positive");
    if (hot > cold)
        throw std::invalid_argument("beta_hot must not exceed beta_cold");
    return {Kind::Explicit, hot, cold};
}

void SamplerParams::validate() const {
    if (num_reads < 1) throw std::invalid_argument("num_reads must be at least 1");
    if (num_sweeps < 1) throw std::invalid_argument("num_sweeps must be at least 1");
    if (beta.kind == BetaSchedule::Kind::Explicit)
        BetaSchedule::explicit_range(beta.hot, beta.cold);  // revalidate
}

SampleSet::SampleSet(Vartype vartype, std::vector<Read> reads, SamplerParams params)
        : vartype_(vartype), reads_(std::move(reads)), params_(std::move(params)) {
    if (reads_.empty()) throw std::invalid_argument("a sample set needs at least one read");
    const std::size_t width = reads_.front().config.size();
    for (const Read& read : reads_)
        if (read.config.size() != width)
            throw std::invalid_argument("reads have inconsistent configuration lengths");
}

const Read& SampleSet::best() const {
    const Read* best = &reads_.front();
    for (const Read& read : reads_)
        if (read.energy < best->energy) best = &read;
    return *best;
}

std::vector<SampleSet::Aggregate> SampleSet::aggregated() const {
    std::map<std::vector<std::int8_t>, Aggregate> groups;
    for (const Read& read : reads_) {
        auto [it, inserted] = groups.try_emplace(read.config);
        if (inserted) {
            it->second.config = read.config;
            it->second.energy = read.energy;
        }
        ++it->second.count;
    }
    std::vector<Aggregate> result;
    result.reserve(groups.size());
    for (auto& [config, aggregate] : groups) result.push_back(std::move(aggregate));
    std::stable_sort(result.begin(), result.end(), [](const Aggregate& a, const Aggregate& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.config < b.config;
    });
    return result;
}

std::pair<double, double> auto_beta(const BinaryModel& model) {
    const double flip_scale = model.vartype() == Vartype::SPIN ? 2.0 : 1.0;

    double max_move = 0.0;
    double min_coefficient = std::numeric_limits<double>::infinity();
    std::vector<double> reach(model.num_variables(), 0.0);
    for (const auto& [i, value] : model.linear_terms()) {
        reach[i] += std::abs(value);
        min_coefficient = std::min(min_coefficient, std::abs(value));
    }
    for (const auto& [key, value] : model.quadratic_terms()) {
        reach[key.first] += std::abs(value);
        reach[key.second] += std::abs(value);
        min_coefficient = std::min(min_coefficient, std::abs(value));
    }
    for (double r : reach) max_move = std::max(max_move, flip_scale * r);

    if (max_move == 0.0) return {0.1, 10.0};

    const double beta_hot = std::log(2.0) / max_move;
    const double beta_cold = std::log(100.0) / (flip_scale * min_coefficient);
    return {beta_hot, std::max(beta_cold, beta_hot)};
}

SampleSet anneal(const BinaryModel& model, const SamplerParams& params) {
    if (model.vartype() != Vartype::SPIN)
        throw std::invalid_argument("anneal expects a SPIN model; convert with to_spin");
    if (model.num_variables() < 1)
        throw std::invalid_argument("anneal needs at least one variable");
    params.validate();

    const int n = model.num_variables();
    const Csr csr(model);
    const auto [beta_hot, beta_cold] = params.beta.kind == BetaSchedule::Kind::Auto
            ? auto_beta(model)
            : std::pair{params.beta.hot, params.beta.cold};

    // Geometric ladder, one temperature per sweep.
    std::vector<double> betas(params.num_sweeps);
    for (int s = 0; s < params.num_sweeps; ++s) {
        const double t = params.num_sweeps > 1
                ? static_cast<double>(s) / static_cast<double>(params.num_sweeps - 1)
                : 0.0;
        betas[s] = beta_hot * std::pow(beta_cold / beta_hot, t);
    }

    std::vector<Read> reads(params.num_reads);
    detail::parallel_for(params.num_reads, params.num_threads, [&](int r) {
        const std::uint64_t read_seed = substream_seed(params.seed, static_cast<std::uint64_t>(r));
        Rng rng(read_seed);

        std::vector<std::int8_t> spins(n);
        for (int i = 0; i < n; ++i) spins[i] = rng.spin();

        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        rng.shuffle(order);

        double energy = model.offset();
        for (int i = 0; i < n; ++i) energy += csr.h[i] * spins[i];
        for (const auto& [key, value] : model.quadratic_terms())
            energy += value * spins[key.first] * spins[key.second];

        std::vector<std::int8_t> best = spins;
        double best_energy = energy;

        for (const double beta : betas) {
            for (const int i : order) {
                const double delta = -2.0 * spins[i] * csr.local_field(i, spins);
                if (delta <= 0.0 || rng.uniform() < std::exp(-beta * delta)) {
                    spins[i] = static_cast<std::int8_t>(-spins[i]);
                    energy += delta;
                    if (energy < best_energy) {
                        best_energy = energy;
                        best = spins;
                    }
                }
            }
        }

        reads[r] = Read{std::move(best), best_energy, read_seed};
    });

    return SampleSet(Vartype::SPIN, std::move(reads), params);
}

ExactSolution solve_exact(const BinaryModel& model, std::uint64_t cap) {
    const int n = model.num_variables();
    if (n > 63 || (std::uint64_t{1} << n) > cap)
        throw SearchSpaceTooLarge("2^" + std::to_string(n) +
                                  " binary configurations exceed the cap of " + std::to_string(cap));

    if (n == 0) return {model.offset(), {{}}};

    const Csr csr(model);
    const std::int8_t low = model.vartype() == Vartype::SPIN ? std::int8_t{-1} : std::int8_t{0};
    const std::int8_t high = std::int8_t{1};
    const std::uint64_t total = std::uint64_t{1} << n;

    // Gray-code walk: step t flips variable countr_zero(t). Two passes; the
    // first finds the exact minimum, the second collects the argmin set.
    const auto walk = [&](auto&& visit) {
        std::vector<std::int8_t> config(n, low);
        double energy = binary_energy(model, config);
        visit(config, energy);
        for (std::uint64_t t = 1; t < total; ++t) {
            const int i = std::countr_zero(t);
            const double before = config[i] * csr.local_field(i, config);
            config[i] = config[i] == high ? low : high;
            energy += config[i] * csr.local_field(i, config) - before;
            if (t % kResyncInterval == 0) energy = binary_energy(model, config);
            visit(config, energy);
        }
    };

    double best = std::numeric_limits<double>::infinity();
    walk([&](const std::vector<std::int8_t>&, double energy) { best = std::min(best, energy); });

    ExactSolution solution;
    solution.energy = best;
    walk([&](const std::vector<std::int8_t>& config, double energy) {
        if (energy <= best + kDegeneracyTol)
            solution.configs.push_back(config);
    });
    std::sort(solution.configs.begin(), solution.configs.end());
    return solution;
}

namespace {

// Pairwise m x m coefficient blocks and per-variable neighbor lists for
// incremental assignment-energy updates.
struct DqmBlocks {
    int n, m;
    std::vector<double> linear;                           // n * m
    std::vector<std::vector<double>> blocks;              // per stored pair, m * m
    std::vector<std::vector<std::pair<int, int>>> neighbors;  // var -> (other, block)

    explicit DqmBlocks(const DiscreteModel& model)
            : n(model.num_variables()), m(model.num_values()), neighbors(n) {
        linear.assign(static_cast<std::size_t>(n) * m, 0.0);
        for (const auto& [key, value] : model.linear_terms())
            linear[static_cast<std::size_t>(key[0]) * m + key[1]] = value;

        std::map<std::pair<int, int>, int> index;
        for (const auto& [key, value] : model.quadratic_terms()) {
            const std::pair<int, int> pair{key[0], key[1]};
            auto [it, inserted] = index.try_emplace(pair, static_cast<int>(blocks.size()));
            if (inserted) {
                blocks.emplace_back(static_cast<std::size_t>(m) * m, 0.0);
                neighbors[key[0]].emplace_back(key[1], it->second);
                neighbors[key[1]].emplace_back(key[0], it->second);
            }
            blocks[it->second][static_cast<std::size_t>(key[2]) * m + key[3]] = value;
        }
    }

    // Q(i, j, alpha, beta) where the block is stored for the canonical
    // (min, max) pair with the first index owning the rows.
    double coefficient(int block, bool transposed, int own, int other) const {
        return transposed ? blocks[block][static_cast<std::size_t>(other) * m + own]
                          : blocks[block][static_cast<std::size_t>(own) * m + other];
    }
};

}  // namespace

ExactDqmSolution solve_exact(const DiscreteModel& model, std::uint64_t cap) {
    const int n = model.num_variables();
    const int m = model.num_values();

    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / static_cast<std::uint64_t>(m))
            throw SearchSpaceTooLarge(std::to_string(m) + "^" + std::to_string(n) +
                                      " assignments exceed the cap of " + std::to_string(cap));
        total *= static_cast<std::uint64_t>(m);
    }

    const DqmBlocks blocks(model);

    // Loopless reflected mixed-radix Gray enumeration: exactly one digit
    // changes by +-1 per step, so the energy delta only needs that
    // variable's local contribution before and after.
    const auto walk = [&](auto&& visit) {
        Assignment digits(n, 0);
        std::vector<int> focus(n + 1);
        for (int j = 0; j <= n; ++j) focus[j] = j;
        std::vector<int> direction(n, 1);

        double energy = dqm_energy(model, digits);
        const auto local = [&](int i, int alpha) {
            double value = blocks.linear[static_cast<std::size_t>(i) * m + alpha];
            for (const auto& [j, b] : blocks.neighbors[i])
                value += blocks.coefficient(b, j < i, alpha, digits[j]);
            return value;
        };

        visit(digits, energy);
        for (std::uint64_t t = 1;; ++t) {
            const int j = focus[0];
            focus[0] = 0;
            if (j == n) break;
            const int before = digits[j];
            const int after = before + direction[j];
            energy += local(j, after) - local(j, before);
            digits[j] = after;
            if (after == 0 || after == m - 1) {
                direction[j] = -direction[j];
                focus[j] = focus[j + 1];
                focus[j + 1] = j + 1;
            }
            if (t % kResyncInterval == 0) energy = dqm_energy(model, digits);
            visit(digits, energy);
        }
    };

    double best = std::numeric_limits<double>::infinity();
    walk([&](const Assignment&, double energy) { best = std::min(best, energy); });

    ExactDqmSolution solution;
    solution.energy = best;
    walk([&](const Assignment& digits, double energy) {
        if (energy <= best + kDegeneracyTol)
            solution.assignments.push_back(digits);
    });
    std::sort(solution.assignments.begin(), solution.assignments.end());
    return solution;
}

}  // namespace dqmforge
