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

#include "dqmforge/model.hpp"

namespace dqmforge {

inline constexpr std::uint64_t kDefaultExactCap = std::uint64_t{1} << 24;

struct BetaSchedule {
    enum class Kind { Auto, Explicit };

    Kind kind = Kind::Auto;
    double hot = 0.0;
    double cold = 0.0;

    static BetaSchedule automatic() { return {}; }
    static BetaSchedule explicit_range(double hot, double cold);
};

struct SamplerParams {
    int num_reads = 100;
    int num_sweeps = 1000;
    BetaSchedule beta = BetaSchedule::automatic();
    std::uint64_t seed = 0;
    int num_threads = 0;  ///< 0 = all hardware threads; never affects results

    void validate() const;
};

/// One annealing read: the configuration it reports, its energy, and the
/// substream seed that produced it.
struct Read {
    std::vector<std::int8_t> config;
    double energy = 0.0;
    std::uint64_t seed = 0;
};

/// An immutable collection of reads in read order plus the parameters that
/// produced them.
class SampleSet {
 public:
    SampleSet(Vartype vartype, std::vector<Read> reads, SamplerParams params);

    Vartype vartype() const { return vartype_; }
    int num_reads() const { return static_cast<int>(reads_.size()); }
    const std::vector<Read>& reads() const { return reads_; }
    const SamplerParams& params() const { return params_; }

    /// The lowest-energy read; ties resolve to the lowest read index.
    const Read& best() const;

    struct Aggregate {
        std::vector<std::int8_t> config;
        double energy = 0.0;
        int count = 0;
    };

    /// Distinct configurations with occurrence counts, sorted by
    /// (energy, configuration) ascending.
    std::vector<Aggregate> aggregated() const;

 private:
    Vartype vartype_;
    std::vector<Read> reads_;
    SamplerParams params_;
};

/// Derive a geometric temperature ladder from the model's energy scales:
/// beta_hot = ln(2) / dE_max where dE_max is the largest possible
/// single-flip move (2 * max_i (|h_i| + sum_j |J_ij|)), and
/// beta_cold = ln(100) / dE_min where dE_min is twice the smallest nonzero
/// coefficient magnitude. An all-zero model gets (0.1, 10.0).
std::pair<double, double> auto_beta(const BinaryModel& model);

/// Seeded single-spin-flip Metropolis annealer over a geometric beta ladder.
///
/// Each read r runs an independent chain seeded with
/// substream_seed(params.seed, r): uniform random initial spins, one random
/// (per-read, fixed across sweeps) spin visiting order, num_sweeps sweeps
/// with one Metropolis proposal per spin per sweep. A read reports the
/// lowest-energy configuration it visited. Results are identical for a
/// fixed seed regardless of num_threads or scheduling.
///
/// The model must be SPIN (convert with to_spin) and nonempty; throws
/// std::invalid_argument otherwise.
SampleSet anneal(const BinaryModel& model, const SamplerParams& params);

/// Exhaustive ground-state search over all 2^num_variables configurations.
/// Enumeration is Gray-coded with incremental energy updates. Returns the
/// exact minimum and every configuration within 1e-9 of it, sorted
/// lexicographically. Throws SearchSpaceTooLarge if 2^num_variables > cap.
struct ExactSolution {
    double energy = 0.0;
    std::vector<std::vector<std::int8_t>> configs;
};

ExactSolution solve_exact(const BinaryModel& model, std::uint64_t cap = kDefaultExactCap);

/// Exhaustive search over all m^n discrete assignments, mixed-radix
/// Gray-coded. Returns the exact minimum and every assignment within 1e-9
/// of it, sorted lexicographically. Throws SearchSpaceTooLarge if
/// m^n > cap.
struct ExactDqmSolution {
    double energy = 0.0;
    std::vector<Assignment> assignments;
};

ExactDqmSolution solve_exact(const DiscreteModel& model, std::uint64_t cap = kDefaultExactCap);

}  // namespace dqmforge
