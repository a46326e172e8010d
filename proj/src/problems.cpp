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

#include "dqmforge/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dqmforge/random.hpp"

namespace dqmforge {

void Graph::validate() const {
    if (q < 0) throw std::invalid_argument("graph: negative vertex count");
    std::pair<int, int> prev{-1, -1};
    for (const auto& [i, j] : edges) {
        if (i < 0 || j < 0 || i >= q || j >= q)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (i == j) throw std::invalid_argument("graph: self-loop");
        if (i > j) throw std::invalid_argument("graph: edge not in (i < j) form");
        if (std::pair{i, j} <= prev)
            throw std::invalid_argument("graph: edges not sorted and unique");
        prev = {i, j};
    }
}

Graph gen_er_graph(int q, double edge_prob, std::uint64_t seed) {
    if (q < 1) throw std::invalid_argument("gen_er_graph: need at least one vertex");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw std::invalid_argument("gen_er_graph: edge probability must be in [0, 1]");

    Rng rng(seed);
    Graph graph{q, {}};
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (rng.uniform() < edge_prob) graph.edges.emplace_back(i, j);
    return graph;
}

DiscreteModel coloring_dqm(const Graph& graph, int num_colors) {
    graph.validate();
    if (num_colors < 2) throw std::invalid_argument("coloring_dqm: need at least two colors");

    DiscreteModel model(graph.q, num_colors);
    for (const auto& [i, j] : graph.edges)
        for (int alpha = 0; alpha < num_colors; ++alpha)
            model.add_quadratic(i, j, alpha, alpha, 1.0);
    return model;
}

namespace {

void check_square(const std::vector<std::vector<double>>& matrix, int size, const char* name) {
    if (static_cast<int>(matrix.size()) != size)
        throw std::invalid_argument(std::string(name) + ": wrong number of rows");
    for (int i = 0; i < size; ++i) {
        if (static_cast<int>(matrix[i].size()) != size)
            throw std::invalid_argument(std::string(name) + ": row " + std::to_string(i) +
                                        " has wrong length");
        if (matrix[i][i] != 0.0)
            throw std::invalid_argument(std::string(name) + ": nonzero diagonal at " +
                                        std::to_string(i));
        for (int j = 0; j < size; ++j) {
            if (matrix[i][j] < 0.0)
                throw std::invalid_argument(std::string(name) + ": negative entry");
            if (matrix[i][j] != matrix[j][i])
                throw std::invalid_argument(std::string(name) + ": not symmetric");
        }
    }
}

}  // namespace

void FgaInstance::validate() const {
    if (n_flights < 1) throw std::invalid_argument("fga: need at least one flight");
    if (m_gates < 1) throw std::invalid_argument("fga: need at least one gate");

    const auto check_length = [](std::size_t got, int want, const char* name) {
        if (got != static_cast<std::size_t>(want))
            throw std::invalid_argument(std::string(name) + ": wrong length");
    };
    check_length(n_dep.size(), n_flights, "n_dep");
    check_length(n_arr.size(), n_flights, "n_arr");
    check_length(t_in.size(), n_flights, "t_in");
    check_length(t_out.size(), n_flights, "t_out");
    check_length(t_gate_arr.size(), m_gates, "t_gate_arr");
    check_length(t_gate_dep.size(), m_gates, "t_gate_dep");

    for (int i = 0; i < n_flights; ++i) {
        if (n_dep[i] < 0) throw std::invalid_argument("n_dep: negative count");
        if (n_arr[i] < 0) throw std::invalid_argument("n_arr: negative count");
        if (t_in[i] < 0.0) throw std::invalid_argument("t_in: negative time");
        if (!(t_out[i] > t_in[i]))
            throw std::invalid_argument("t_out must exceed t_in for flight " + std::to_string(i));
    }
    for (int a = 0; a < m_gates; ++a) {
        if (t_gate_arr[a] < 0.0) throw std::invalid_argument("t_gate_arr: negative time");
        if (t_gate_dep[a] < 0.0) throw std::invalid_argument("t_gate_dep: negative time");
    }
    if (t_buf < 0.0) throw std::invalid_argument("t_buf: negative time");

    if (static_cast<int>(n_transfer.size()) != n_flights)
        throw std::invalid_argument("n_transfer: wrong number of rows");
    for (int i = 0; i < n_flights; ++i) {
        if (static_cast<int>(n_transfer[i].size()) != n_flights)
            throw std::invalid_argument("n_transfer: row " + std::to_string(i) +
                                        " has wrong length");
        if (n_transfer[i][i] != 0)
            throw std::invalid_argument("n_transfer: nonzero diagonal at " + std::to_string(i));
        for (int j = 0; j < n_flights; ++j) {
            if (n_transfer[i][j] < 0) throw std::invalid_argument("n_transfer: negative count");
            if (n_transfer[i][j] != n_transfer[j][i])
                throw std::invalid_argument("n_transfer: not symmetric");
        }
    }
    check_square(t_gate_gate, m_gates, "t_gate_gate");
}

void FgaGenConfig::validate() const {
    const auto check_range = [](auto lo, auto hi, const char* name) {
        if (lo > hi) throw std::invalid_argument(std::string(name) + ": empty range");
        if (lo < 0) throw std::invalid_argument(std::string(name) + ": negative minimum");
    };
    check_range(passengers_min, passengers_max, "passengers");
    check_range(transfer_min, transfer_max, "transfer");
    check_range(gate_time_min, gate_time_max, "gate_time");
    check_range(arrival_min, arrival_max, "arrival");
    check_range(duration_min, duration_max, "duration");
    if (duration_min < 1) throw std::invalid_argument("duration: must be at least 1");
    if (transfer_pair_prob < 0.0 || transfer_pair_prob > 1.0)
        throw std::invalid_argument("transfer_pair_prob: must be in [0, 1]");
    if (conflict_fraction < 0.0 || conflict_fraction > 1.0)
        throw std::invalid_argument("conflict_fraction: must be in [0, 1]");
}

FgaInstance gen_fga(int n_flights, int m_gates, std::uint64_t seed, const FgaGenConfig& config) {
    if (n_flights < 1) throw std::invalid_argument("gen_fga: need at least one flight");
    if (m_gates < 1) throw std::invalid_argument("gen_fga: need at least one gate");
    config.validate();

    Rng rng(seed);
    FgaInstance instance;
    instance.n_flights = n_flights;
    instance.m_gates = m_gates;

    for (int i = 0; i < n_flights; ++i) {
        instance.n_dep.push_back(
                static_cast<int>(rng.uniform_int(config.passengers_min, config.passengers_max)));
        instance.n_arr.push_back(
                static_cast<int>(rng.uniform_int(config.passengers_min, config.passengers_max)));
        const double arrival =
                static_cast<double>(rng.uniform_int(config.arrival_min, config.arrival_max));
        const double duration =
                static_cast<double>(rng.uniform_int(config.duration_min, config.duration_max));
        instance.t_in.push_back(arrival);
        instance.t_out.push_back(arrival + duration);
    }

    instance.n_transfer.assign(n_flights, std::vector<int>(n_flights, 0));
    for (int i = 0; i < n_flights; ++i) {
        for (int j = i + 1; j < n_flights; ++j) {
            if (rng.uniform() < config.transfer_pair_prob) {
                const int count =
                        static_cast<int>(rng.uniform_int(config.transfer_min, config.transfer_max));
                instance.n_transfer[i][j] = count;
                instance.n_transfer[j][i] = count;
            }
        }
    }

    for (int a = 0; a < m_gates; ++a) {
        instance.t_gate_arr.push_back(
                static_cast<double>(rng.uniform_int(config.gate_time_min, config.gate_time_max)));
        instance.t_gate_dep.push_back(
                static_cast<double>(rng.uniform_int(config.gate_time_min, config.gate_time_max)));
    }
    instance.t_gate_gate.assign(m_gates, std::vector<double>(m_gates, 0.0));
    for (int a = 0; a < m_gates; ++a) {
        for (int b = a + 1; b < m_gates; ++b) {
            const double walk =
                    static_cast<double>(rng.uniform_int(config.gate_time_min, config.gate_time_max));
            instance.t_gate_gate[a][b] = walk;
            instance.t_gate_gate[b][a] = walk;
        }
    }

    // Pick t_buf as roughly the conflict_fraction quantile of the pairwise
    // gap distribution, so about that share of pairs ends up forbidden.
    // The gap of a pair is how much clearance the later flight leaves the
    // earlier one; pairs with gap < t_buf conflict.
    std::vector<double> gaps;
    for (int i = 0; i < n_flights; ++i)
        for (int j = i + 1; j < n_flights; ++j)
            gaps.push_back(std::max(instance.t_in[i] - instance.t_out[j],
                                    instance.t_in[j] - instance.t_out[i]));
    if (!gaps.empty()) {
        std::sort(gaps.begin(), gaps.end());
        const auto target = static_cast<std::size_t>(
                std::llround(config.conflict_fraction * static_cast<double>(gaps.size())));
        const double quantile = target >= gaps.size() ? gaps.back() + 1.0 : gaps[target];
        instance.t_buf = std::max(0.0, quantile);
    }

    instance.validate();
    return instance;
}

std::vector<std::pair<int, int>> forbidden_pairs(const FgaInstance& instance) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < instance.n_flights; ++i)
        for (int j = i + 1; j < instance.n_flights; ++j)
            if (instance.t_in[i] - instance.t_out[j] < instance.t_buf &&
                instance.t_in[j] - instance.t_out[i] < instance.t_buf)
                pairs.emplace_back(i, j);
    return pairs;
}

DiscreteModel fga_dqm(const FgaInstance& instance, const PenaltyMode& mu_mode) {
    instance.validate();

    DiscreteModel model(instance.n_flights, instance.m_gates);
    for (int i = 0; i < instance.n_flights; ++i)
        for (int alpha = 0; alpha < instance.m_gates; ++alpha)
            model.add_linear(i, alpha,
                             instance.n_dep[i] * instance.t_gate_dep[alpha] +
                                     instance.n_arr[i] * instance.t_gate_arr[alpha]);
    for (int i = 0; i < instance.n_flights; ++i)
        for (int j = i + 1; j < instance.n_flights; ++j)
            if (instance.n_transfer[i][j] != 0)
                for (int alpha = 0; alpha < instance.m_gates; ++alpha)
                    for (int beta = 0; beta < instance.m_gates; ++beta)
                        if (instance.t_gate_gate[alpha][beta] != 0.0)
                            model.add_quadratic(i, j, alpha, beta,
                                                instance.n_transfer[i][j] *
                                                        instance.t_gate_gate[alpha][beta]);

    // The gate-sharing penalty is calibrated against the cost terms alone.
    const double mu = penalty_strength(model, mu_mode);
    for (const auto& [i, j] : forbidden_pairs(instance))
        for (int alpha = 0; alpha < instance.m_gates; ++alpha)
            model.add_quadratic(i, j, alpha, alpha, mu);
    return model;
}

}  // namespace dqmforge
