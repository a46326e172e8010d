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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dqmforge/json_io.hpp"
#include "dqmforge/problems.hpp"
#include "dqmforge/random.hpp"
#include "dqmforge/sample.hpp"
#include "oracles.hpp"

using namespace dqmforge;

TEST_CASE("edge probability extremes give complete and empty graphs", "[problems]") {
    const Graph complete = gen_er_graph(5, 1.0, 1);
    CHECK(complete.edge_count() == 10);
    complete.validate();

    const Graph empty = gen_er_graph(5, 0.0, 1);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(gen_er_graph(5, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_er_graph(5, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_er_graph(0, 0.5, 1), std::invalid_argument);
}

TEST_CASE("random graphs are seed-deterministic and well-formed", "[problems]") {
    const Graph a = gen_er_graph(12, 0.4, 99);
    const Graph b = gen_er_graph(12, 0.4, 99);
    CHECK(a.edges == b.edges);
    a.validate();

    const Graph c = gen_er_graph(12, 0.4, 100);
    CHECK(a.edges != c.edges);  // overwhelmingly likely for 66 candidate pairs
}

TEST_CASE("edge counts track the binomial expectation", "[problems]") {
    // 1000 seeded draws of G(20, 0.5): mean edge count within three standard
    // errors of 190 * 0.5 = 95 (sigma_mean = sqrt(190 * 0.25 / 1000)).
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
        total += gen_er_graph(20, 0.5, seed).edge_count();
    const double mean = total / 1000.0;
    const double standard_error = std::sqrt(190.0 * 0.25 / 1000.0);
    CHECK(std::abs(mean - 95.0) < 3.0 * standard_error);
}

TEST_CASE("graph validation rejects malformed edge lists", "[problems]") {
    CHECK_THROWS_AS((Graph{3, {{0, 0}}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Graph{3, {{0, 1}, {0, 1}}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Graph{3, {{1, 0}}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Graph{3, {{0, 3}}}.validate()), std::invalid_argument);
}

TEST_CASE("coloring cost counts monochromatic edges", "[problems]") {
    const Graph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
    const DiscreteModel model = coloring_dqm(triangle, 3);
    CHECK(model.num_variables() == 3);
    CHECK(model.num_values() == 3);
    CHECK(model.linear_terms().empty());
    CHECK(model.quadratic_terms().size() == 9);  // one per edge per color

    CHECK(dqm_energy(model, {0, 1, 2}) == 0.0);
    CHECK(dqm_energy(model, {1, 1, 1}) == 3.0);

    CHECK_THROWS_AS(coloring_dqm(triangle, 1), std::invalid_argument);
}

TEST_CASE("coloring energy equals an independent clash count", "[problems]") {
    const Graph graph = gen_er_graph(8, 0.5, 3);
    const DiscreteModel model = coloring_dqm(graph, 3);
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Assignment a(8);
        for (auto& value : a) value = static_cast<int>(rng.uniform_int(0, 2));
        int clashes = 0;
        for (const auto& [i, j] : graph.edges)
            if (a[i] == a[j]) ++clashes;
        CHECK(dqm_energy(model, a) == Catch::Approx(clashes));
    }
}

TEST_CASE("gate assignment generator produces the requested shape", "[problems]") {
    const FgaInstance instance = gen_fga(7, 2, 4);
    instance.validate();
    CHECK(instance.n_flights == 7);
    CHECK(instance.m_gates == 2);
    CHECK(instance.n_dep.size() == 7);
    CHECK(instance.t_gate_gate.size() == 2);

    // Determinism: same seed, identical instance (field-for-field via JSON).
    const FgaInstance again = gen_fga(7, 2, 4);
    CHECK(fga_to_json(instance).dump() == fga_to_json(again).dump());
}

TEST_CASE("degenerate generator ranges pin every drawn field", "[problems]") {
    FgaGenConfig config;
    config.passengers_min = config.passengers_max = 5;
    config.transfer_min = config.transfer_max = 7;
    config.transfer_pair_prob = 1.0;
    config.gate_time_min = config.gate_time_max = 3;
    config.arrival_min = config.arrival_max = 10;
    config.duration_min = config.duration_max = 20;

    const FgaInstance instance = gen_fga(4, 2, 12, config);
    for (int i = 0; i < 4; ++i) {
        CHECK(instance.n_dep[i] == 5);
        CHECK(instance.n_arr[i] == 5);
        CHECK(instance.t_in[i] == 10.0);
        CHECK(instance.t_out[i] == 30.0);
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(instance.n_transfer[i][j] == 7);
    }
    for (int alpha = 0; alpha < 2; ++alpha) {
        CHECK(instance.t_gate_arr[alpha] == 3.0);
        CHECK(instance.t_gate_dep[alpha] == 3.0);
    }
    CHECK(instance.t_gate_gate[0][1] == 3.0);
    CHECK(instance.t_gate_gate[0][0] == 0.0);
}

TEST_CASE("instance validation rejects inconsistent fields", "[problems]") {
    FgaInstance instance = gen_fga(3, 2, 1);
    instance.t_out[0] = instance.t_in[0];  // zero ground time
    CHECK_THROWS_AS(instance.validate(), std::invalid_argument);

    FgaInstance asymmetric = gen_fga(3, 2, 1);
    asymmetric.t_gate_gate[0][1] += 1.0;
    CHECK_THROWS_AS(asymmetric.validate(), std::invalid_argument);

    FgaInstance negative = gen_fga(3, 2, 1);
    negative.n_dep[1] = -1;
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);

    FgaInstance diagonal = gen_fga(3, 2, 1);
    diagonal.t_gate_gate[1][1] = 2.0;
    CHECK_THROWS_AS(diagonal.validate(), std::invalid_argument);
}

namespace {

/// A hand-built two-flight instance with prescribed ground times.
FgaInstance two_flights(double in0, double out0, double in1, double out1, double buffer) {
    FgaInstance instance;
    instance.n_flights = 2;
    instance.m_gates = 2;
    instance.n_dep = {0, 0};
    instance.n_arr = {0, 0};
    instance.n_transfer = {{0, 0}, {0, 0}};
    instance.t_in = {in0, in1};
    instance.t_out = {out0, out1};
    instance.t_gate_arr = {0.0, 0.0};
    instance.t_gate_dep = {0.0, 0.0};
    instance.t_gate_gate = {{0.0, 0.0}, {0.0, 0.0}};
    instance.t_buf = buffer;
    return instance;
}

}  // namespace

TEST_CASE("gate conflicts require overlapping ground times", "[problems]") {
    // Fully overlapping flights conflict.
    CHECK(forbidden_pairs(two_flights(0, 10, 2, 8, 1)) ==
          std::vector<std::pair<int, int>>{{0, 1}});

    // A gap larger than the buffer clears the conflict.
    CHECK(forbidden_pairs(two_flights(0, 10, 12, 20, 1)).empty());

    // A gap exactly equal to the buffer also clears it (strict inequality).
    CHECK(forbidden_pairs(two_flights(0, 10, 11, 20, 1)).empty());

    // A gap smaller than the buffer does not.
    CHECK(forbidden_pairs(two_flights(0, 10, 10.5, 20, 1)) ==
          std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("single flight cost is its own walk time", "[problems]") {
    FgaInstance instance;
    instance.n_flights = 1;
    instance.m_gates = 2;
    instance.n_dep = {4};
    instance.n_arr = {3};
    instance.n_transfer = {{0}};
    instance.t_in = {0.0};
    instance.t_out = {10.0};
    instance.t_gate_arr = {2.0, 7.0};
    instance.t_gate_dep = {5.0, 6.0};
    instance.t_gate_gate = {{0.0, 0.0}, {0.0, 0.0}};
    instance.t_buf = 1.0;

    const DiscreteModel model = fga_dqm(instance);
    CHECK(dqm_energy(model, {0}) == Catch::Approx(4 * 5.0 + 3 * 2.0));
    CHECK(dqm_energy(model, {1}) == Catch::Approx(4 * 6.0 + 3 * 7.0));
}

TEST_CASE("conflicting flights pay the penalty only when sharing a gate", "[problems]") {
    // Zero objective: the resolved penalty falls back to 1.
    const FgaInstance instance = two_flights(0, 10, 2, 8, 1);
    const DiscreteModel model = fga_dqm(instance);
    CHECK(dqm_energy(model, {0, 0}) == Catch::Approx(1.0));
    CHECK(dqm_energy(model, {1, 1}) == Catch::Approx(1.0));
    CHECK(dqm_energy(model, {0, 1}) == Catch::Approx(0.0));
    CHECK(dqm_energy(model, {1, 0}) == Catch::Approx(0.0));
}

TEST_CASE("transfer passengers couple gate choices", "[problems]") {
    FgaInstance instance = two_flights(0, 10, 12, 20, 0.5);  // no conflict
    instance.n_transfer[0][1] = 2;
    instance.n_transfer[1][0] = 2;
    instance.t_gate_gate = {{0.0, 3.0}, {3.0, 0.0}};

    const DiscreteModel model = fga_dqm(instance);
    CHECK(dqm_energy(model, {0, 1}) == Catch::Approx(2 * 3.0));
    CHECK(dqm_energy(model, {0, 0}) == Catch::Approx(0.0));
}

TEST_CASE("exact solver agrees with brute force on gate assignment", "[problems]") {
    const FgaInstance instance = gen_fga(4, 2, 21);
    const DiscreteModel model = fga_dqm(instance);
    const auto expected = oracle::brute_force(model);
    const auto solved = solve_exact(model);
    CHECK(solved.energy == Catch::Approx(expected.energy).margin(1e-9));
    CHECK(solved.assignments == expected.assignments);
}

TEST_CASE("a large penalty forces conflict-free optima when they exist", "[problems]") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const FgaInstance instance = gen_fga(5, 2, 1000 + seed);
        const auto forbidden = forbidden_pairs(instance);

        // Is any assignment conflict-free at all?
        const auto assignments = oracle::all_assignments(5, 2);
        const auto conflict_free = [&](const Assignment& a) {
            return std::none_of(forbidden.begin(), forbidden.end(),
                                [&](const auto& pair) { return a[pair.first] == a[pair.second]; });
        };
        if (std::none_of(assignments.begin(), assignments.end(), conflict_free)) continue;

        const DiscreteModel model = fga_dqm(instance, PenaltyMode::fixed(1e7));
        for (const auto& a : oracle::brute_force(model).assignments) CHECK(conflict_free(a));
    }
}
