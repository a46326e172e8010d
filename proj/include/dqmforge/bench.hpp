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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dqmforge/embed.hpp"
#include "dqmforge/encode.hpp"
#include "dqmforge/model.hpp"
#include "dqmforge/problems.hpp"
#include "dqmforge/sample.hpp"

namespace dqmforge {

/// A cost value with an explicit +infinity sentinel (a run with zero valid
/// reads). Tagged rather than an IEEE special so ordering and serialization
/// are total; serializes as the literal string "inf".
class Cost {
 public:
    Cost() = default;  ///< infinite

    static Cost infinity() { return Cost(); }
    static Cost of(double value);

    bool is_finite() const { return finite_; }

    /// Throws std::logic_error when infinite.
    double value() const;

    /// Total order: every finite value < infinity; infinities compare equal.
    friend bool operator<(const Cost& a, const Cost& b);
    friend bool operator==(const Cost& a, const Cost& b);

    /// Equal within tol, or both infinite.
    bool approx_equal(const Cost& other, double tol) const;

    /// "inf" or the shortest round-trip decimal.
    std::string to_string() const;

 private:
    bool finite_ = false;
    double value_ = 0.0;
};

enum class Family { Coloring, Fga };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

/// One benchmark problem: the cost model plus what run_pipeline needs for
/// normalization and the success flag.
struct BenchInstance {
    std::string id;
    Family family;
    DiscreteModel dqm;
    int edge_count = 0;                   ///< coloring cost divisor
    std::optional<double> exact_optimum;  ///< set by attach_exact_optima

    BenchInstance(std::string id, Family family, DiscreteModel dqm, int edge_count = 0)
            : id(std::move(id)), family(family), dqm(std::move(dqm)), edge_count(edge_count) {}
};

/// Seeded instance classes. Coloring ids look like "coloring_q10_k3_s7_i042".
std::vector<BenchInstance> make_coloring_instances(int count, int q, int k, double edge_prob,
                                                   std::uint64_t seed);
std::vector<BenchInstance> make_fga_instances(int count, int n_flights, int m_gates,
                                              std::uint64_t seed, const FgaGenConfig& config = {});

/// Fill in exact optima where the search space fits under the cap; larger
/// instances are skipped (their success flags then come from
/// resolve_success_against_best).
void attach_exact_optima(std::vector<BenchInstance>& instances,
                         std::uint64_t cap = kDefaultExactCap, int num_threads = 0);

/// One complete solving strategy: encoding, penalty, target hardware
/// (or "native"), chain handling, repair, and the sampling budget.
struct Pipeline {
    std::string name;
    Encoding encoding = Encoding::DomainWall;
    PenaltyMode penalty = PenaltyMode::auto_max();
    std::string hardware = "native";
    ChainStrengthMode chain = ChainStrengthMode::utc();
    RepairMode repair = RepairMode::Majority;
    int embed_attempts = kDefaultEmbedAttempts;
    SamplerParams sampler{};
};

/// Resolves a pipeline's hardware reference: "native" means no embedding,
/// "chimera:R,C,S" generates a Chimera lattice, registered names return
/// their graph, and anything else goes to the file loader hook (the CLI
/// installs a JSON reader there). Unresolvable references raise ConfigError.
class HardwareResolver {
 public:
    void register_graph(const std::string& name, HardwareGraph graph);
    void set_file_loader(std::function<HardwareGraph(const std::string&)> loader);

    /// nullptr means native. The returned pointer stays valid for the
    /// resolver's lifetime (results are cached).
    const HardwareGraph* resolve(const std::string& reference);

 private:
    std::map<std::string, HardwareGraph> cache_;
    std::function<HardwareGraph(const std::string&)> loader_;
};

struct InstanceResult {
    std::string instance_id;
    int num_vars = 0;           ///< discrete variables in the instance
    bool embed_failed = false;
    double r_chain = 1.0;       ///< fraction of reads with no broken chain
    double r_enc = 0.0;         ///< fraction of reads decoding to a valid assignment
    Cost best_c;                ///< best valid cost, normalized
    Cost mean_c;                ///< mean valid cost, normalized
    Cost best_raw;              ///< best valid cost before normalization
    bool success = false;       ///< best valid cost equals the exact optimum
    bool optimum_known = false;
};

struct RunReport {
    Pipeline pipeline;
    std::vector<InstanceResult> instances;

    bool all_embeds_failed() const;
};

/// Per-class aggregates. Rates and costs average over instances that
/// produced reads (embed failures excluded); the success rate counts every
/// instance (a failed embedding cannot succeed). mean_best_c is infinite as
/// soon as one instance is.
struct ReportSummary {
    int num_instances = 0;
    int num_embed_failed = 0;
    double mean_r_chain = 0.0, stddev_r_chain = 0.0;
    double mean_r_enc = 0.0, stddev_r_enc = 0.0;
    Cost mean_best_c;
    int num_finite = 0;
    double finite_mean_best_c = 0.0, stddev_best_c = 0.0, stderr_best_c = 0.0;
    double success_rate = 0.0, stderr_success = 0.0;
};

ReportSummary summarize(const RunReport& report);

/// Run one pipeline over an instance class. Per instance: encode, embed
/// (unless native; a FAIL is recorded, not thrown), anneal, unembed/repair,
/// decode, and score. Coloring costs are normalized by edge count, FGA
/// costs by subtracting the exact optimum when known. success means the
/// best valid raw cost matches instance.exact_optimum within 1e-9.
/// Deterministic for fixed instances and pipeline, independent of
/// num_threads.
RunReport run_pipeline(const std::vector<BenchInstance>& instances, const Pipeline& pipeline,
                       HardwareResolver& resolver, int num_threads = 0);

/// For instances whose exact optimum is unknown (over the oracle cap), score
/// success against the best valid raw cost found by ANY of the given
/// reports. Oracle-scored instances are left untouched.
void resolve_success_against_best(std::vector<RunReport>& reports);

/// ln of the sign-test p-value: ln( 2^-N * sum_{k=0}^{n_w} C(N, k) ) with
/// N = n_b + n_w, i.e. the probability that a fair coin gives the expected
/// winner at least n_b of N wins. Binomials via lgamma, summed in log
/// space; stable for N up to 1e4 and beyond. Throws std::invalid_argument
/// for negative counts or N == 0.
double log_significance(long long n_b, long long n_w);

/// exp(log_significance), or nullopt when N == 0 (blank table cells).
std::optional<double> significance(long long n_b, long long n_w);

enum class Verdict { SignificantWin, NotSignificant, SignificantLoss, NotApplicable };

std::string to_string(Verdict verdict);
Verdict verdict_from_string(const std::string& name);

struct ComparisonRecord {
    std::string a;  ///< expected-winner pipeline name
    std::string b;
    int n_b = 0;    ///< instances where a found a strictly better best cost
    int n_w = 0;    ///< instances where b did
    std::optional<double> p;
    Verdict verdict = Verdict::NotApplicable;
    bool fail_a = false;  ///< a's embedding failed on the whole class
    bool fail_b = false;
};

/// Sign test between two reports over the same instance set (matched by
/// id). Instances where either run found no valid read at all count the
/// infinite side as the loser; ties within 1e-9 (or both infinite) are
/// ignored. A whole-class embedding failure on either side yields a
/// not-applicable record carrying the FAIL marker instead of counts.
/// Verdicts: p < 0.05 significant-win, p > 0.95 significant-loss.
ComparisonRecord compare(const RunReport& a, const RunReport& b);

struct SweepPoint {
    double multiplier = 0.0;
    Cost mean_best_c;           ///< infinite if any instance is
    int num_finite = 0;
    int num_instances = 0;
    double finite_mean_best_c = 0.0;
    double stderr_best_c = 0.0;
};

struct SweepTable {
    Pipeline pipeline;  ///< the base pipeline (penalty mode varies per point)
    std::vector<SweepPoint> points;
};

/// Re-run the pipeline once per multiplier with penalty_mode scaled(mult),
/// reporting mean best cost with standard error per point.
SweepTable constraint_sweep(const std::vector<BenchInstance>& instances, const Pipeline& pipeline,
                            const std::vector<double>& multipliers, HardwareResolver& resolver,
                            int num_threads = 0);

enum class ReportFormat { Json, Csv, PlotData };

ReportFormat report_format_from_string(const std::string& name);

/// Serialize a report. CSV columns are fixed:
/// instance_id, encoding, hardware, chain_mode, r_chain, r_enc, best_c,
/// mean_c, success. PlotData emits "series x y yerr" rows (x is the
/// instance size; rate/cost series carry standard deviation, the success
/// series standard error). Infinite costs serialize as "inf".
std::string emit_report(const RunReport& report, ReportFormat format);

/// JSON or CSV ("a, b, n_b, n_w, p, verdict" with p at 3 significant
/// digits; a whole-class embedding failure prints FAIL in that side's count
/// column). PlotData is not defined for comparisons.
std::string emit_comparison(const ComparisonRecord& record, ReportFormat format);

/// JSON, CSV (multiplier, mean_c, stderr, num_finite, num_instances), or
/// PlotData (series "mean_c", x = multiplier).
std::string emit_sweep(const SweepTable& table, ReportFormat format);

/// Inverse of emit_report(report, ReportFormat::Json); used by
/// `bench compare` to reload reports from disk. Malformed documents raise
/// std::invalid_argument naming the missing or mistyped field.
RunReport parse_report(const std::string& json_text);

}  // namespace dqmforge
