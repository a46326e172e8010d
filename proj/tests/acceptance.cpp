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

// Acceptance checks for the full toolchain. Each check is an end-to-end
// guarantee the project promises its users; run them all (no arguments) or
// pass a subset of check numbers. One PASS/FAIL line is printed per check
// and the exit status is the number of failures. Wall-clock budgets are
// enforced in-process for the checks that carry one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dqmforge/bench.hpp"
#include "dqmforge/embed.hpp"
#include "dqmforge/encode.hpp"
#include "dqmforge/model.hpp"
#include "dqmforge/problems.hpp"
#include "dqmforge/random.hpp"
#include "dqmforge/sample.hpp"

namespace {

using namespace dqmforge;

// ---------------------------------------------------------------------------
// Check 1: sign-test p-values.
//
// Frozen win/loss count pairs with the p-value each is expected to produce,
// checked to three significant figures. The fixture spans the full range the
// reporting layer prints, from the trivial (2, 0) up to (100, 0).

struct PValueCell {
    int n_b;
    int n_w;
    double expected;
};

constexpr PValueCell kExpectedPValues[] = {
        {42, 0, 2.27e-13}, {37, 0, 7.28e-12},  {2, 0, 2.50e-1},    {19, 21, 6.82e-1},
        {39, 0, 1.82e-12}, {40, 0, 9.09e-13},  {85, 2, 2.47e-23},  {95, 3, 4.95e-25},
        {32, 34, 6.44e-1}, {70, 22, 2.67e-7},  {94, 1, 2.42e-27},  {91, 2, 4.41e-25},
        {99, 0, 1.58e-30}, {100, 0, 7.89e-31}, {43, 41, 4.57e-1},  {94, 3, 9.60e-25},
        {100, 0, 7.89e-31}, {93, 2, 1.15e-25}, {100, 0, 7.89e-31}, {66, 20, 3.33e-7},
        {98, 2, 3.98e-27}, {100, 0, 7.89e-31}, {72, 20, 2.30e-8},  {97, 2, 7.81e-27},
        {100, 0, 7.89e-31}, {100, 0, 7.89e-31},

        {34, 1, 1.05e-9},  {37, 2, 1.42e-9},   {11, 3, 2.87e-2},   {26, 16, 8.21e-2},
        {44, 1, 1.31e-12}, {33, 7, 2.11e-5},   {91, 1, 1.88e-26},  {78, 1, 1.32e-22},
        {34, 18, 1.82e-2}, {88, 1, 1.45e-25},  {91, 1, 1.88e-26},  {99, 0, 1.58e-30},
        {59, 15, 1.28e-7}, {99, 0, 1.58e-30},  {92, 0, 2.02e-28},

        {42, 0, 2.27e-13}, {38, 0, 3.64e-12},  {2, 0, 2.50e-1},    {22, 21, 5.00e-1},
        {40, 0, 9.09e-13}, {40, 0, 9.09e-13},  {88, 2, 3.31e-24},  {96, 3, 2.55e-25},
        {35, 28, 2.25e-1}, {78, 16, 2.89e-11}, {96, 0, 1.26e-29},  {91, 3, 6.99e-24},
        {99, 1, 7.97e-29}, {96, 0, 1.26e-29},  {60, 33, 3.35e-3},  {98, 0, 3.16e-30},
        {100, 0, 7.89e-31}, {82, 15, 1.19e-12}, {100, 0, 7.89e-31}, {93, 6, 1.89e-21},
        {61, 24, 3.70e-5}, {100, 0, 7.89e-31}, {100, 0, 7.89e-31}, {14, 3, 6.36e-3},
        {100, 0, 7.89e-31}, {88, 0, 3.23e-27},

        {39, 1, 3.73e-11}, {42, 3, 4.33e-10},  {17, 2, 3.64e-4},   {33, 14, 3.97e-3},
        {53, 1, 3.05e-15}, {32, 9, 2.15e-4},   {97, 1, 3.12e-28},  {89, 2, 1.69e-24},
        {66, 7, 1.92e-13}, {70, 7, 1.76e-14},  {100, 0, 7.89e-31}, {80, 9, 1.15e-15},
        {100, 0, 7.89e-31}, {98, 0, 3.16e-30}, {26, 0, 1.49e-8},   {38, 0, 3.64e-12},
};

// True when `computed` rounds to the same three significant figures that
// `expected` was printed with.
bool matches_to_three_figures(double computed, double expected) {
    const double scale = std::pow(10.0, std::floor(std::log10(expected)));
    return std::abs(computed - expected) < 0.005 * scale;
}

bool check_p_values(std::string& why) {
    for (const PValueCell& cell : kExpectedPValues) {
        const std::optional<double> p = significance(cell.n_b, cell.n_w);
        if (!p) {
            why = "significance(" + std::to_string(cell.n_b) + ", " + std::to_string(cell.n_w) +
                  ") produced no value";
            return false;
        }
        if (!matches_to_three_figures(*p, cell.expected)) {
            std::ostringstream message;
            message << "significance(" << cell.n_b << ", " << cell.n_w << ") = " << *p
                    << ", expected " << cell.expected;
            why = message.str();
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Check 2: exact optima of both encodings decode to exactly the discrete
// model's exact optimum set, across 200 seeded random dense models.

// Dense random model with the strongest linear term normalized to unit
// magnitude and couplings capped at 0.45. Under that shape a variable can
// gain at most 1 + (n-1)*0.45 <= 1.9 by violating its constraint, so a
// penalty of twice the maximum coefficient (= 2.0) strictly dominates every
// violation and the encoded optimum set is exactly the valid one.
DiscreteModel random_dense_dqm(int n, int m, Rng& rng) {
    std::vector<double> linear(static_cast<std::size_t>(n * m));
    double max_abs = 0.0;
    for (double& value : linear) {
        value = rng.uniform() * 2.0 - 1.0;
        max_abs = std::max(max_abs, std::abs(value));
    }
    const double scale = max_abs > 1e-9 ? 1.0 / max_abs : 0.0;

    DiscreteModel dqm(n, m);
    for (int i = 0; i < n; ++i)
        for (int alpha = 0; alpha < m; ++alpha)
            dqm.add_linear(i, alpha, linear[static_cast<std::size_t>(i * m + alpha)] * scale);
    if (scale == 0.0) dqm.add_linear(0, 0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int alpha = 0; alpha < m; ++alpha)
                for (int beta = 0; beta < m; ++beta)
                    dqm.add_quadratic(i, j, alpha, beta, (rng.uniform() * 2.0 - 1.0) * 0.45);
    return dqm;
}

bool check_encoding_equivalence(std::string& why) {
    constexpr std::uint64_t kMaster = 0x2b7e151628aed2a6ULL;
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng(substream_seed(kMaster, static_cast<std::uint64_t>(trial)));
        const int n = static_cast<int>(rng.uniform_int(1, 3));
        const int m = static_cast<int>(rng.uniform_int(2, 4));
        const DiscreteModel dqm = random_dense_dqm(n, m, rng);
        const ExactDqmSolution truth = solve_exact(dqm);

        for (const Encoding encoding : {Encoding::OneHot, Encoding::DomainWall}) {
            EncodeOptions options;
            options.encoding = encoding;
            options.penalty = PenaltyMode::scaled(2.0);
            const BinaryModel encoded = encode(dqm, options);
            const ExactSolution solution = solve_exact(encoded);

            const EncodingMeta& meta = encoded.meta().value();
            const double shift = encoding == Encoding::DomainWall
                                         ? -meta.penalty_strength * n * (m - 2)
                                         : 0.0;
            if (std::abs(solution.energy - (truth.energy + shift)) > 1e-9) {
                std::ostringstream message;
                message << "trial " << trial << " (" << to_string(encoding)
                        << "): encoded optimum " << solution.energy << " but discrete optimum "
                        << truth.energy << " with shift " << shift;
                why = message.str();
                return false;
            }

            std::vector<Assignment> decoded;
            for (const std::vector<std::int8_t>& config : solution.configs) {
                const DecodedSample sample = decode(encoded, config);
                if (!sample.valid()) {
                    why = "trial " + std::to_string(trial) + " (" + to_string(encoding) +
                          "): an encoded optimum decodes as constraint-violating";
                    return false;
                }
                decoded.push_back(*sample.assignment);
            }
            std::sort(decoded.begin(), decoded.end());
            decoded.erase(std::unique(decoded.begin(), decoded.end()), decoded.end());
            if (decoded != truth.assignments) {
                why = "trial " + std::to_string(trial) + " (" + to_string(encoding) +
                      "): decoded optimum set differs from the discrete optimum set";
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Check 3: the indicator form always emits n*m binary variables and the wall
// form n*(m-1), across every generated benchmark instance class.

bool check_variable_counts(std::string& why) {
    std::vector<BenchInstance> instances;
    for (const int q : {5, 10, 15, 20}) {
        std::vector<BenchInstance> batch =
                make_coloring_instances(5, q, 3, 0.5, 9000 + static_cast<std::uint64_t>(q));
        std::move(batch.begin(), batch.end(), std::back_inserter(instances));
    }
    for (const int k : {3, 4, 5}) {
        std::vector<BenchInstance> batch =
                make_coloring_instances(5, 2 * k, k, 0.75, 7000 + static_cast<std::uint64_t>(k));
        std::move(batch.begin(), batch.end(), std::back_inserter(instances));
    }
    for (const int m : {2, 3}) {
        std::vector<BenchInstance> batch =
                make_fga_instances(5, 7, m, 5000 + static_cast<std::uint64_t>(m));
        std::move(batch.begin(), batch.end(), std::back_inserter(instances));
    }

    for (const BenchInstance& instance : instances) {
        const int n = instance.dqm.num_variables();
        const int m = instance.dqm.num_values();
        EncodeOptions options;

        options.encoding = Encoding::OneHot;
        if (encode(instance.dqm, options).num_variables() != n * m) {
            why = instance.id + ": indicator encoding did not emit n*m variables";
            return false;
        }

        options.encoding = Encoding::DomainWall;
        if (encode(instance.dqm, options).num_variables() != n * (m - 1)) {
            why = instance.id + ": wall encoding did not emit n*(m-1) variables";
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Check 4: with two values per variable the wall encoding cannot produce an
// invalid read, while the indicator encoding under a deliberately weak
// penalty does, somewhere in the class.

bool check_two_value_guarantee(std::string& why) {
    const std::vector<BenchInstance> instances = make_fga_instances(29, 7, 2, 0x5eedULL);
    HardwareResolver resolver;

    Pipeline wall;
    wall.name = "wall_native";
    wall.encoding = Encoding::DomainWall;
    wall.sampler.num_reads = 100;
    wall.sampler.num_sweeps = 50;
    wall.sampler.seed = 41;
    const RunReport wall_report = run_pipeline(instances, wall, resolver);
    for (const InstanceResult& result : wall_report.instances) {
        if (result.r_enc != 1.0) {
            std::ostringstream message;
            message << result.instance_id << ": wall encoding reported r_enc = " << result.r_enc
                    << " despite m = 2";
            why = message.str();
            return false;
        }
    }

    Pipeline indicator = wall;
    indicator.name = "onehot_weak";
    indicator.encoding = Encoding::OneHot;
    indicator.penalty = PenaltyMode::scaled(0.25);
    const RunReport indicator_report = run_pipeline(instances, indicator, resolver);
    const bool any_invalid =
            std::any_of(indicator_report.instances.begin(), indicator_report.instances.end(),
                        [](const InstanceResult& result) { return result.r_enc < 1.0; });
    if (!any_invalid) {
        why = "weak-penalty indicator pipeline decoded every read of every instance as valid";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Check 5: decoding inverts assignment encoding over the entire assignment
// space for every shape up to n = 4, m = 5, in both encodings.

bool check_round_trip(std::string& why) {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 2; m <= 5; ++m) {
            const DiscreteModel dqm(n, m);
            for (const Encoding encoding : {Encoding::OneHot, Encoding::DomainWall}) {
                EncodeOptions options;
                options.encoding = encoding;
                const BinaryModel encoded = encode(dqm, options);
                const EncodingMeta& meta = encoded.meta().value();

                Assignment assignment(n, 0);
                while (true) {
                    const std::vector<std::int8_t> config = encode_assignment(meta, assignment);
                    const DecodedSample decoded = decode(encoded, config);
                    if (!decoded.valid() || *decoded.assignment != assignment) {
                        std::ostringstream message;
                        message << "round trip failed for n=" << n << " m=" << m << " ("
                                << to_string(encoding) << ")";
                        why = message.str();
                        return false;
                    }

                    int position = n - 1;
                    while (position >= 0 && ++assignment[position] == m)
                        assignment[position--] = 0;
                    if (position < 0) break;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Check 6: for embedded models, every chain-aligned physical configuration's
// energy sits a configuration-independent constant away from the logical
// energy.

bool check_embedding_energy_shift(std::string& why) {
    const HardwareGraph hardware = gen_chimera(2, 2, 4);
    constexpr int kWanted = 50;
    constexpr std::uint64_t kCandidateBudget = 400;
    int found = 0;

    for (std::uint64_t candidate = 0; candidate < kCandidateBudget && found < kWanted;
         ++candidate) {
        Rng rng(substream_seed(0x9e3779b97f4a7c15ULL, candidate));
        const int num_vars = static_cast<int>(rng.uniform_int(2, 6));
        const Graph graph = gen_er_graph(num_vars, 0.6, rng.next());

        BinaryModel logical(num_vars, Vartype::SPIN);
        for (int i = 0; i < num_vars; ++i) logical.add_linear(i, rng.uniform() * 2.0 - 1.0);
        for (const auto& [a, b] : graph.edges)
            logical.add_quadratic(a, b, rng.uniform() * 2.0 - 1.0);

        std::optional<Embedding> embedding =
                embed_greedy(interaction_graph(logical), hardware, kDefaultEmbedAttempts,
                             rng.next());
        if (!embedding) continue;
        ++found;

        embedding->chain_strength = chain_strength(logical, ChainStrengthMode::utc());
        const BinaryModel physical = apply_embedding(logical, *embedding, hardware);

        std::vector<std::int8_t> logical_config(static_cast<std::size_t>(num_vars));
        std::vector<std::int8_t> physical_config(static_cast<std::size_t>(hardware.num_qubits));
        std::optional<double> shift;
        for (std::uint64_t mask = 0; mask < (1ULL << num_vars); ++mask) {
            for (int i = 0; i < num_vars; ++i)
                logical_config[static_cast<std::size_t>(i)] =
                        (mask >> i & 1ULL) != 0 ? std::int8_t{1} : std::int8_t{-1};
            std::fill(physical_config.begin(), physical_config.end(), std::int8_t{1});
            for (const auto& [variable, chain] : embedding->chains)
                for (const int qubit : chain)
                    physical_config[static_cast<std::size_t>(qubit)] =
                            logical_config[static_cast<std::size_t>(variable)];

            const double difference = binary_energy(physical, physical_config) -
                                      binary_energy(logical, logical_config);
            if (!shift) {
                shift = difference;
            } else if (std::abs(difference - *shift) > 1e-9) {
                std::ostringstream message;
                message << "candidate " << candidate << ": energy shift drifted from " << *shift
                        << " to " << difference;
                why = message.str();
                return false;
            }
        }
    }

    if (found < kWanted) {
        why = "only " + std::to_string(found) + " of " + std::to_string(kWanted) +
              " embeddings succeeded within the candidate budget";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Checks 7 and 9 share this bundle: four pipelines over one instance class,
// all pairwise comparisons, and every emitted artifact.

struct ComparisonBundle {
    std::vector<RunReport> reports;            // indicator/native, wall/native, then embedded
    std::vector<ComparisonRecord> records;     // all pairs, i < j
    std::vector<std::string> emitted;          // reports then comparisons, JSON
};

ComparisonBundle run_comparison_bundle() {
    std::vector<BenchInstance> instances = make_coloring_instances(100, 10, 3, 0.5, 0xc01a5ULL);
    attach_exact_optima(instances);

    std::vector<Pipeline> pipelines(4);
    pipelines[0].name = "onehot_native";
    pipelines[0].encoding = Encoding::OneHot;
    pipelines[1].name = "wall_native";
    pipelines[1].encoding = Encoding::DomainWall;
    pipelines[2].name = "onehot_chimera";
    pipelines[2].encoding = Encoding::OneHot;
    pipelines[2].hardware = "chimera:4,4,4";
    pipelines[3].name = "wall_chimera";
    pipelines[3].encoding = Encoding::DomainWall;
    pipelines[3].hardware = "chimera:4,4,4";
    for (Pipeline& pipeline : pipelines) {
        pipeline.sampler.num_reads = 100;
        pipeline.sampler.num_sweeps = 50;
        pipeline.sampler.seed = 20;
    }

    HardwareResolver resolver;
    ComparisonBundle bundle;
    for (const Pipeline& pipeline : pipelines)
        bundle.reports.push_back(run_pipeline(instances, pipeline, resolver));
    resolve_success_against_best(bundle.reports);

    for (std::size_t i = 0; i < bundle.reports.size(); ++i)
        for (std::size_t j = i + 1; j < bundle.reports.size(); ++j)
            bundle.records.push_back(compare(bundle.reports[i], bundle.reports[j]));

    for (const RunReport& report : bundle.reports)
        bundle.emitted.push_back(emit_report(report, ReportFormat::Json));
    for (const ComparisonRecord& record : bundle.records)
        bundle.emitted.push_back(emit_comparison(record, ReportFormat::Json));
    return bundle;
}

bool check_four_pipelines(std::string& why) {
    const ComparisonBundle bundle = run_comparison_bundle();

    for (const RunReport& report : bundle.reports) {
        if (report.instances.size() != 100) {
            why = report.pipeline.name + ": expected 100 instance results";
            return false;
        }
        const bool native = report.pipeline.hardware == "native";
        for (const InstanceResult& result : report.instances) {
            if (result.r_chain < 0.0 || result.r_chain > 1.0 || result.r_enc < 0.0 ||
                result.r_enc > 1.0) {
                why = report.pipeline.name + "/" + result.instance_id + ": rate out of range";
                return false;
            }
            if (native && result.embed_failed) {
                why = report.pipeline.name + "/" + result.instance_id +
                      ": a native run reported an embedding failure";
                return false;
            }
            if (!result.embed_failed && result.best_c.is_finite() && result.mean_c.is_finite() &&
                result.mean_c < result.best_c) {
                why = report.pipeline.name + "/" + result.instance_id + ": mean cost below best";
                return false;
            }
        }
    }

    if (bundle.records.size() != 6) {
        why = "expected 6 pairwise comparisons, got " + std::to_string(bundle.records.size());
        return false;
    }
    for (const ComparisonRecord& record : bundle.records) {
        if (record.fail_a || record.fail_b) {
            if (record.verdict != Verdict::NotApplicable || record.p.has_value()) {
                why = record.a + " vs " + record.b +
                      ": class-level failure must yield a bare not-applicable record";
                return false;
            }
            continue;
        }
        if (record.n_b < 0 || record.n_w < 0 || record.n_b + record.n_w > 100) {
            why = record.a + " vs " + record.b + ": impossible win/loss counts";
            return false;
        }
        if (record.n_b + record.n_w == 0) {
            if (record.p.has_value() || record.verdict != Verdict::NotSignificant) {
                why = record.a + " vs " + record.b + ": all-tied comparison is malformed";
                return false;
            }
            continue;
        }
        if (!record.p.has_value() || *record.p <= 0.0 || *record.p > 1.0) {
            why = record.a + " vs " + record.b + ": p-value missing or out of range";
            return false;
        }
        const Verdict expected = *record.p < 0.05
                                         ? Verdict::SignificantWin
                                         : (*record.p > 0.95 ? Verdict::SignificantLoss
                                                             : Verdict::NotSignificant);
        if (record.verdict != expected) {
            why = record.a + " vs " + record.b + ": verdict disagrees with its p-value";
            return false;
        }
        // The emitted comparison must carry the full column set.
        const std::string csv = emit_comparison(record, ReportFormat::Csv);
        if (csv.rfind("a,b,n_b,n_w,p,verdict", 0) != 0) {
            why = record.a + " vs " + record.b + ": comparison table lost its columns";
            return false;
        }
    }

    // Directional property: the wall encoding ties or beats the indicator
    // encoding on at least half the instances when both run natively.
    const RunReport& indicator = bundle.reports[0];
    const RunReport& wall = bundle.reports[1];
    int wall_at_least_as_good = 0;
    for (std::size_t i = 0; i < indicator.instances.size(); ++i) {
        if (indicator.instances[i].instance_id != wall.instances[i].instance_id) {
            why = "reports disagree on instance ordering";
            return false;
        }
        if (!(indicator.instances[i].best_c < wall.instances[i].best_c))
            ++wall_at_least_as_good;
    }
    if (wall_at_least_as_good < 50) {
        why = "wall encoding matched or beat the indicator encoding on only " +
              std::to_string(wall_at_least_as_good) + " of 100 instances";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Checks 8 and 9 share this sweep.

SweepTable run_sweep_bundle() {
    // Sparse enough that proper colorings exist: the properly weighted
    // points then produce finite means for the weak ones to degrade from.
    const std::vector<BenchInstance> instances =
            make_coloring_instances(20, 15, 3, 0.2, 0x5eedc0deULL);
    Pipeline pipeline;
    pipeline.name = "onehot_native";
    pipeline.encoding = Encoding::OneHot;
    pipeline.sampler.num_reads = 100;
    pipeline.sampler.num_sweeps = 200;
    pipeline.sampler.seed = 33;
    HardwareResolver resolver;
    return constraint_sweep(instances, pipeline, {0.05, 0.25, 1.0, 4.0}, resolver);
}

bool check_constraint_sweep(std::string& why) {
    const SweepTable table = run_sweep_bundle();
    if (table.points.size() != 4) {
        why = "expected a 4-point table, got " + std::to_string(table.points.size()) + " points";
        return false;
    }
    const double expected_multipliers[] = {0.05, 0.25, 1.0, 4.0};
    for (std::size_t i = 0; i < 4; ++i) {
        if (table.points[i].multiplier != expected_multipliers[i]) {
            why = "sweep points are not in multiplier order";
            return false;
        }
        if (table.points[i].num_instances != 20) {
            why = "sweep point lost instances";
            return false;
        }
    }
    // Too-weak constraints must not look better than properly weighted ones:
    // mean cost at 0.05 is at least the mean cost at 1.0 (infinite counts as
    // worse than any finite mean).
    const Cost& weak = table.points[0].mean_best_c;
    const Cost& reference = table.points[2].mean_best_c;
    if (!reference.is_finite()) {
        why = "the multiplier-1.0 point produced no valid read on some instance";
        return false;
    }
    if (weak < reference) {
        why = "mean cost at multiplier 0.05 (" + weak.to_string() +
              ") beat the mean cost at 1.0 (" + reference.to_string() + ")";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Check 9: repeating the comparison and sweep runs with identical seeds
// reproduces every emitted artifact byte for byte.

bool check_reproducibility(std::string& why) {
    const ComparisonBundle first = run_comparison_bundle();
    const ComparisonBundle second = run_comparison_bundle();
    if (first.emitted != second.emitted) {
        why = "repeated four-pipeline runs emitted different bytes";
        return false;
    }

    const std::string sweep_first = emit_sweep(run_sweep_bundle(), ReportFormat::Json);
    const std::string sweep_second = emit_sweep(run_sweep_bundle(), ReportFormat::Json);
    if (sweep_first != sweep_second) {
        why = "repeated sweep runs emitted different bytes";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

struct Check {
    int number;
    const char* label;
    double limit_seconds;  // 0 = no budget
    bool (*run)(std::string&);
};

constexpr Check kChecks[] = {
        {1, "sign-test p-values", 1.0, check_p_values},
        {2, "encoding optimum equivalence", 60.0, check_encoding_equivalence},
        {3, "variable-count law", 0.0, check_variable_counts},
        {4, "two-value chain guarantee", 0.0, check_two_value_guarantee},
        {5, "decode/encode round trip", 10.0, check_round_trip},
        {6, "embedding energy shift constancy", 0.0, check_embedding_energy_shift},
        {7, "four-pipeline comparison", 300.0, check_four_pipelines},
        {8, "constraint-strength sweep shape", 300.0, check_constraint_sweep},
        {9, "reproducibility", 0.0, check_reproducibility},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long number = std::strtol(argv[i], &end, 10);
        if (end == argv[i] || *end != '\0' || number < 1 ||
            number > static_cast<long>(std::size(kChecks))) {
            std::fprintf(stderr, "usage: %s [check-number ...]  (checks are 1..%zu)\n", argv[0],
                         std::size(kChecks));
            return 1;
        }
        selected.push_back(static_cast<int>(number));
    }
    if (selected.empty())
        for (const Check& check : kChecks) selected.push_back(check.number);

    int failures = 0;
    for (const int number : selected) {
        const Check& check = kChecks[number - 1];
        std::string why;
        bool passed = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            passed = check.run(why);
        } catch (const std::exception& error) {
            why = std::string("unexpected exception: ") + error.what();
        }
        const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (passed && check.limit_seconds > 0.0 && seconds > check.limit_seconds) {
            passed = false;
            std::ostringstream message;
            message << "finished correctly but took " << seconds << " s against a "
                    << check.limit_seconds << " s budget";
            why = message.str();
        }
        std::printf("[%s] check %d: %s (%.2fs)\n", passed ? "PASS" : "FAIL", number, check.label,
                    seconds);
        if (!passed) {
            ++failures;
            if (!why.empty()) std::printf("       %s\n", why.c_str());
        }
        std::fflush(stdout);
    }
    return failures;
}
