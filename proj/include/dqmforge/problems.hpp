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
#include <utility>
#include <vector>

#include "dqmforge/encode.hpp"
#include "dqmforge/model.hpp"

namespace dqmforge {

/// An undirected simple graph on vertices 0..q-1 with canonical edges
/// (i < j, sorted, unique).
struct Graph {
    int q = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Throws std::invalid_argument on out-of-range endpoints, self-loops,
    /// duplicates, or unsorted edge order.
    void validate() const;
};

/// Erdos-Renyi G(q, p): each of the q*(q-1)/2 candidate edges is included
/// independently with probability p. Deterministic for a fixed seed.
Graph gen_er_graph(int q, double edge_prob, std::uint64_t seed);

/// The k-coloring cost model on a graph: one discrete variable per vertex
/// with m = k values, and D(i, j, alpha, alpha) = 1 for every edge (i, j)
/// and every color alpha. The energy of an assignment is the number of
/// monochromatic edges; a proper coloring has energy 0.
DiscreteModel coloring_dqm(const Graph& graph, int num_colors);

/// A flight-gate assignment instance: assign each of n flights to one of m
/// gates, minimizing total passenger transit time while forbidding
/// gate-sharing between flights whose ground times overlap too closely.
struct FgaInstance {
    int n_flights = 0;
    int m_gates = 0;

    std::vector<int> n_dep;                        ///< departing passengers per flight
    std::vector<int> n_arr;                        ///< arriving passengers per flight
    std::vector<std::vector<int>> n_transfer;      ///< transfer passengers per flight pair

    std::vector<double> t_in;                      ///< arrival time per flight
    std::vector<double> t_out;                     ///< departure time per flight

    std::vector<double> t_gate_arr;                ///< walk time from each gate for arrivals
    std::vector<double> t_gate_dep;                ///< walk time to each gate for departures
    std::vector<std::vector<double>> t_gate_gate;  ///< walk time between gate pairs

    double t_buf = 0.0;                            ///< required gap between flights at one gate

    /// Structural checks: square symmetric matrices with zero diagonals,
    /// nonnegative counts and times, t_out > t_in per flight. Throws
    /// std::invalid_argument naming the offending field.
    void validate() const;
};

/// Tunable ranges for the random instance generator. All drawn quantities
/// are integer-valued so costs are exactly representable.
struct FgaGenConfig {
    int passengers_min = 0, passengers_max = 50;    ///< n_dep, n_arr
    int transfer_min = 0, transfer_max = 20;        ///< n_transfer when a pair has any
    double transfer_pair_prob = 0.4;                ///< fraction of flight pairs with transfers
    int gate_time_min = 1, gate_time_max = 10;      ///< all gate walk times
    int arrival_min = 0, arrival_max = 100;         ///< t_in window
    int duration_min = 5, duration_max = 30;        ///< t_out - t_in
    double conflict_fraction = 1.0 / 3.0;           ///< target share of forbidden pairs

    void validate() const;
};

FgaInstance gen_fga(int n_flights, int m_gates, std::uint64_t seed,
                    const FgaGenConfig& config = {});

/// Flight pairs that may not share a gate: (i, j) with i < j such that
/// t_in_i - t_out_j < t_buf and t_in_j - t_out_i < t_buf (i.e. neither
/// flight clears the gate early enough before the other arrives).
std::vector<std::pair<int, int>> forbidden_pairs(const FgaInstance& instance);

/// The FGA cost model: linear terms n_dep_i * t_gate_dep_alpha +
/// n_arr_i * t_gate_arr_alpha, quadratic transfer terms
/// n_transfer_ij * t_gate_gate_alpha_beta, plus mu on (i, j, alpha, alpha)
/// for every forbidden pair and gate. mu is resolved by `mu_mode` against
/// the cost-only part of the model.
DiscreteModel fga_dqm(const FgaInstance& instance,
                      const PenaltyMode& mu_mode = PenaltyMode::auto_max());

}  // namespace dqmforge
