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

#include "dqmforge/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "dqmforge/detail/format.hpp"
#include "dqmforge/detail/parallel.hpp"
#include "dqmforge/exceptions.hpp"
#include "dqmforge/json_io.hpp"
#include "dqmforge/random.hpp"

namespace dqmforge {

namespace {

constexpr double kCostTol = 1e-9;

std::string index_tag(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "i%03d", i);
    return buf;
}

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;
};

Stats mean_stddev(const std::vector<double>& xs) {
    Stats s;
    const auto n = xs.size();
    if (n == 0) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(n);
    if (n >= 2) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

}  // namespace

Cost Cost::of(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("Cost::of requires a finite value");
    Cost cost;
    cost.finite_ = true;
    cost.value_ = value;
    return cost;
}

double Cost::value() const {
    if (!finite_) throw std::logic_error("an infinite cost has no numeric value");
    return value_;
}

bool operator<(const Cost& a, const Cost& b) {
    if (a.finite_ && b.finite_) return a.value_ < b.value_;
    return a.finite_ && !b.finite_;
}

bool operator==(const Cost& a, const Cost& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
}

bool Cost::approx_equal(const Cost& other, double tol) const {
    if (finite_ != other.finite_) return false;
    return !finite_ || std::abs(value_ - other.value_) <= tol;
}

std::string Cost::to_string() const {
    return finite_ ? detail::format_double(value_) : "inf";
}

std::string to_string(Family family) {
    return family == Family::Coloring ? "coloring" : "fga";
}

Family family_from_string(const std::string& name) {
    if (name == "coloring") return Family::Coloring;
    if (name == "fga") return Family::Fga;
    throw ConfigError("unknown problem family: \"" + name + "\" (expected coloring or fga)");
}

std::vector<BenchInstance> make_coloring_instances(int count, int q, int k, double edge_prob,
                                                   std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("instance count must be nonnegative");
    std::vector<BenchInstance> instances;
    instances.reserve(static_cast<std::size_t>(count));
    const std::string prefix = "coloring_q" + std::to_string(q) + "_k" + std::to_string(k) +
                               "_p" + detail::format_double(edge_prob) + "_s" +
                               std::to_string(seed) + "_";
    for (int i = 0; i < count; ++i) {
        Graph graph = gen_er_graph(q, edge_prob, substream_seed(seed, static_cast<std::uint64_t>(i)));
        const int edges = graph.edge_count();
        instances.emplace_back(prefix + index_tag(i), Family::Coloring,
                               coloring_dqm(graph, k), edges);
    }
    return instances;
}

std::vector<BenchInstance> make_fga_instances(int count, int n_flights, int m_gates,
                                              std::uint64_t seed, const FgaGenConfig& config) {
    if (count < 0) throw std::invalid_argument("instance count must be nonnegative");
    std::vector<BenchInstance> instances;
    instances.reserve(static_cast<std::size_t>(count));
    const std::string prefix = "fga_n" + std::to_string(n_flights) + "_m" +
                               std::to_string(m_gates) + "_s" + std::to_string(seed) + "_";
    for (int i = 0; i < count; ++i) {
        FgaInstance fga =
                gen_fga(n_flights, m_gates, substream_seed(seed, static_cast<std::uint64_t>(i)), config);
        instances.emplace_back(prefix + index_tag(i), Family::Fga, fga_dqm(fga), 0);
    }
    return instances;
}

void attach_exact_optima(std::vector<BenchInstance>& instances, std::uint64_t cap,
                         int num_threads) {
    detail::parallel_for(static_cast<int>(instances.size()), num_threads, [&](int i) {
        try {
            instances[static_cast<std::size_t>(i)].exact_optimum =
                    solve_exact(instances[static_cast<std::size_t>(i)].dqm, cap).energy;
        } catch (const SearchSpaceTooLarge&) {
            // Too big for the oracle; success gets resolved against the best
            // cost found across pipelines instead.
        }
    });
}

void HardwareResolver::register_graph(const std::string& name, HardwareGraph graph) {
    graph.validate();
    if (graph.name.empty()) graph.name = name;
    cache_.insert_or_assign(name, std::move(graph));
}

void HardwareResolver::set_file_loader(std::function<HardwareGraph(const std::string&)> loader) {
    loader_ = std::move(loader);
}

const HardwareGraph* HardwareResolver::resolve(const std::string& reference) {
    if (reference == "native") return nullptr;
    if (auto it = cache_.find(reference); it != cache_.end()) return &it->second;

    HardwareGraph graph;
    if (reference.rfind("chimera:", 0) == 0) {
        int rows = 0, cols = 0, shore = 0;
        char excess = 0;
        if (std::sscanf(reference.c_str() + 8, "%d,%d,%d%c", &rows, &cols, &shore, &excess) != 3) {
            throw ConfigError("malformed hardware reference \"" + reference +
                              "\" (expected chimera:<rows>,<cols>,<shore>)");
        }
        graph = gen_chimera(rows, cols, shore);
    } else if (loader_) {
        graph = loader_(reference);
        graph.validate();
    } else {
        throw ConfigError("unknown hardware reference: \"" + reference + "\"");
    }
    if (graph.name.empty()) graph.name = reference;
    return &cache_.insert_or_assign(reference, std::move(graph)).first->second;
}

bool RunReport::all_embeds_failed() const {
    if (instances.empty()) return false;
    return std::all_of(instances.begin(), instances.end(),
                       [](const InstanceResult& r) { return r.embed_failed; });
}

ReportSummary summarize(const RunReport& report) {
    ReportSummary s;
    s.num_instances = static_cast<int>(report.instances.size());

    std::vector<double> chain_rates, enc_rates, finite_costs, successes;
    bool any_infinite = false;
    for (const InstanceResult& r : report.instances) {
        successes.push_back(r.success ? 1.0 : 0.0);
        if (r.embed_failed) {
            ++s.num_embed_failed;
            any_infinite = true;
            continue;
        }
        chain_rates.push_back(r.r_chain);
        enc_rates.push_back(r.r_enc);
        if (r.best_c.is_finite()) {
            finite_costs.push_back(r.best_c.value());
        } else {
            any_infinite = true;
        }
    }

    const Stats chain = mean_stddev(chain_rates);
    s.mean_r_chain = chain.mean;
    s.stddev_r_chain = chain.stddev;
    const Stats enc = mean_stddev(enc_rates);
    s.mean_r_enc = enc.mean;
    s.stddev_r_enc = enc.stddev;

    const Stats cost = mean_stddev(finite_costs);
    s.num_finite = static_cast<int>(finite_costs.size());
    s.finite_mean_best_c = cost.mean;
    s.stddev_best_c = cost.stddev;
    s.stderr_best_c =
            finite_costs.empty() ? 0.0 : cost.stddev / std::sqrt(static_cast<double>(s.num_finite));
    s.mean_best_c = (!any_infinite && !finite_costs.empty()) ? Cost::of(cost.mean)
                                                             : Cost::infinity();

    const Stats success = mean_stddev(successes);
    s.success_rate = success.mean;
    s.stderr_success = successes.empty()
                               ? 0.0
                               : success.stddev / std::sqrt(static_cast<double>(successes.size()));
    return s;
}

namespace {

double normalize_cost(const BenchInstance& instance, double raw) {
    if (instance.family == Family::Coloring) {
        return raw / static_cast<double>(std::max(instance.edge_count, 1));
    }
    return instance.exact_optimum ? raw - *instance.exact_optimum : raw;
}

InstanceResult run_instance(const BenchInstance& instance, const Pipeline& pipeline,
                            const HardwareGraph* hardware, std::uint64_t instance_seed) {
    InstanceResult result;
    result.instance_id = instance.id;
    result.num_vars = instance.dqm.num_variables();
    result.optimum_known = instance.exact_optimum.has_value();

    BinaryModel encoded = encode(instance.dqm, {pipeline.encoding, pipeline.penalty});
    BinaryModel logical = encoded.vartype() == Vartype::SPIN ? std::move(encoded)
                                                             : to_spin(encoded);

    SamplerParams params = pipeline.sampler;
    params.seed = substream_seed(instance_seed, 2);
    params.num_threads = 1;  // the instance loop owns the parallelism

    std::vector<std::vector<std::int8_t>> configs;
    if (hardware == nullptr) {
        SampleSet samples = anneal(logical, params);
        configs.reserve(samples.reads().size());
        for (const Read& read : samples.reads()) configs.push_back(read.config);
    } else {
        std::optional<Embedding> embedding =
                embed_greedy(interaction_graph(logical), *hardware, pipeline.embed_attempts,
                             substream_seed(instance_seed, 1));
        if (!embedding) {
            result.embed_failed = true;
            result.r_chain = 0.0;
            return result;
        }
        embedding->chain_strength = chain_strength(logical, pipeline.chain);
        BinaryModel physical = apply_embedding(logical, *embedding, *hardware);
        SampleSet samples = anneal(physical, params);
        UnembeddedReads reads = unembed(samples, *embedding, pipeline.repair);
        result.r_chain = reads.chain_rate();
        configs = std::move(reads.configs);
    }

    int num_valid = 0;
    double best_raw = std::numeric_limits<double>::infinity();
    double sum_raw = 0.0;
    for (const auto& config : configs) {
        DecodedSample decoded = decode(logical, config);
        if (!decoded.valid()) continue;
        ++num_valid;
        const double raw = dqm_energy(instance.dqm, *decoded.assignment);
        sum_raw += raw;
        best_raw = std::min(best_raw, raw);
    }

    // The denominator is the full read budget either way: discarded reads
    // are failures of the encoding pipeline, not missing data.
    result.r_enc = static_cast<double>(num_valid) / static_cast<double>(params.num_reads);
    if (num_valid > 0) {
        result.best_raw = Cost::of(best_raw);
        result.best_c = Cost::of(normalize_cost(instance, best_raw));
        result.mean_c = Cost::of(normalize_cost(instance, sum_raw / num_valid));
        if (instance.exact_optimum) {
            result.success = best_raw <= *instance.exact_optimum + kCostTol;
        }
    }
    return result;
}

}  // namespace

RunReport run_pipeline(const std::vector<BenchInstance>& instances, const Pipeline& pipeline,
                       HardwareResolver& resolver, int num_threads) {
    pipeline.sampler.validate();
    if (pipeline.embed_attempts < 1) {
        throw std::invalid_argument("embed_attempts must be at least 1");
    }
    const HardwareGraph* hardware = resolver.resolve(pipeline.hardware);

    RunReport report;
    report.pipeline = pipeline;
    report.instances.resize(instances.size());
    detail::parallel_for(static_cast<int>(instances.size()), num_threads, [&](int i) {
        const auto idx = static_cast<std::size_t>(i);
        report.instances[idx] =
                run_instance(instances[idx], pipeline, hardware,
                             substream_seed(pipeline.sampler.seed, static_cast<std::uint64_t>(i)));
    });
    return report;
}

void resolve_success_against_best(std::vector<RunReport>& reports) {
    std::map<std::string, double> best;
    for (const RunReport& report : reports) {
        for (const InstanceResult& r : report.instances) {
            if (!r.best_raw.is_finite()) continue;
            auto [it, inserted] = best.emplace(r.instance_id, r.best_raw.value());
            if (!inserted) it->second = std::min(it->second, r.best_raw.value());
        }
    }
    for (RunReport& report : reports) {
        for (InstanceResult& r : report.instances) {
            if (r.optimum_known) continue;
            auto it = best.find(r.instance_id);
            if (it == best.end()) continue;
            r.success = r.best_raw.is_finite() && r.best_raw.value() <= it->second + kCostTol;
        }
    }
}

double log_significance(long long n_b, long long n_w) {
    if (n_b < 0 || n_w < 0) {
        throw std::invalid_argument("significance counts must be nonnegative");
    }
    const long long total = n_b + n_w;
    if (total == 0) {
        throw std::invalid_argument("significance is undefined without decisive instances");
    }
    // ln sum_{k=0}^{n_w} C(total, k), accumulated in log space.
    const double log_fact_total = std::lgamma(static_cast<double>(total) + 1.0);
    double log_sum = -std::numeric_limits<double>::infinity();
    for (long long k = 0; k <= n_w; ++k) {
        const double log_binom = log_fact_total -
                                 std::lgamma(static_cast<double>(k) + 1.0) -
                                 std::lgamma(static_cast<double>(total - k) + 1.0);
        if (log_sum == -std::numeric_limits<double>::infinity()) {
            log_sum = log_binom;
        } else if (log_sum >= log_binom) {
            log_sum += std::log1p(std::exp(log_binom - log_sum));
        } else {
            log_sum = log_binom + std::log1p(std::exp(log_sum - log_binom));
        }
    }
    const double result = log_sum - static_cast<double>(total) * std::log(2.0);
    return std::min(result, 0.0);
}

std::optional<double> significance(long long n_b, long long n_w) {
    if (n_b < 0 || n_w < 0) {
        throw std::invalid_argument("significance counts must be nonnegative");
    }
    if (n_b + n_w == 0) return std::nullopt;
    return std::exp(log_significance(n_b, n_w));
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::SignificantWin: return "significant-win";
        case Verdict::NotSignificant: return "not-significant";
        case Verdict::SignificantLoss: return "significant-loss";
        case Verdict::NotApplicable: return "not-applicable";
    }
    throw std::logic_error("unreachable verdict");
}

Verdict verdict_from_string(const std::string& name) {
    if (name == "significant-win") return Verdict::SignificantWin;
    if (name == "not-significant") return Verdict::NotSignificant;
    if (name == "significant-loss") return Verdict::SignificantLoss;
    if (name == "not-applicable") return Verdict::NotApplicable;
    throw ConfigError("unknown verdict: \"" + name + "\"");
}

ComparisonRecord compare(const RunReport& a, const RunReport& b) {
    ComparisonRecord record;
    record.a = a.pipeline.name;
    record.b = b.pipeline.name;

    record.fail_a = a.all_embeds_failed();
    record.fail_b = b.all_embeds_failed();
    if (record.fail_a || record.fail_b) {
        record.verdict = Verdict::NotApplicable;
        return record;
    }

    std::map<std::string, const InstanceResult*> by_id;
    for (const InstanceResult& r : b.instances) by_id.emplace(r.instance_id, &r);
    if (by_id.size() != a.instances.size() || a.instances.size() != b.instances.size()) {
        throw std::invalid_argument("compared reports must cover the same instance set");
    }

    for (const InstanceResult& ra : a.instances) {
        auto it = by_id.find(ra.instance_id);
        if (it == by_id.end()) {
            throw std::invalid_argument("compared reports must cover the same instance set (" +
                                        ra.instance_id + " is missing from one side)");
        }
        const Cost& ca = ra.best_raw;
        const Cost& cb = it->second->best_raw;
        if (ca == cb) continue;  // includes the both-infinite tie
        if (ca.is_finite() && cb.is_finite() && std::abs(ca.value() - cb.value()) <= kCostTol) {
            continue;
        }
        if (ca < cb) {
            ++record.n_b;
        } else {
            ++record.n_w;
        }
    }

    record.p = significance(record.n_b, record.n_w);
    if (!record.p) {
        record.verdict = Verdict::NotSignificant;  // every instance tied
    } else if (*record.p < 0.05) {
        record.verdict = Verdict::SignificantWin;
    } else if (*record.p > 0.95) {
        record.verdict = Verdict::SignificantLoss;
    } else {
        record.verdict = Verdict::NotSignificant;
    }
    return record;
}

SweepTable constraint_sweep(const std::vector<BenchInstance>& instances, const Pipeline& pipeline,
                            const std::vector<double>& multipliers, HardwareResolver& resolver,
                            int num_threads) {
    SweepTable table;
    table.pipeline = pipeline;
    table.points.reserve(multipliers.size());
    for (double multiplier : multipliers) {
        Pipeline point_pipeline = pipeline;
        point_pipeline.penalty = PenaltyMode::scaled(multiplier);
        const RunReport report = run_pipeline(instances, point_pipeline, resolver, num_threads);

        SweepPoint point;
        point.multiplier = multiplier;
        point.num_instances = static_cast<int>(report.instances.size());
        std::vector<double> finite;
        for (const InstanceResult& r : report.instances) {
            if (r.best_c.is_finite()) finite.push_back(r.best_c.value());
        }
        point.num_finite = static_cast<int>(finite.size());
        const Stats stats = mean_stddev(finite);
        point.finite_mean_best_c = stats.mean;
        point.stderr_best_c =
                finite.empty() ? 0.0 : stats.stddev / std::sqrt(static_cast<double>(finite.size()));
        point.mean_best_c = (point.num_finite == point.num_instances && point.num_instances > 0)
                                    ? Cost::of(stats.mean)
                                    : Cost::infinity();
        table.points.push_back(point);
    }
    return table;
}

namespace {

using nlohmann::json;

json cost_to_json(const Cost& cost) {
    return cost.is_finite() ? json(cost.value()) : json("inf");
}

Cost cost_from_json(const json& j, const char* field) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Cost::infinity();
        throw std::invalid_argument(std::string("field \"") + field +
                                    "\" must be a number or \"inf\"");
    }
    if (!j.is_number()) {
        throw std::invalid_argument(std::string("field \"") + field +
                                    "\" must be a number or \"inf\"");
    }
    return Cost::of(j.get<double>());
}

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("report is missing field \"") + key + "\"");
    }
    return *it;
}

template <typename T>
T require_as(const json& j, const char* key) {
    try {
        return require_field(j, key).get<T>();
    } catch (const json::exception&) {
        throw std::invalid_argument(std::string("report field \"") + key +
                                    "\" has the wrong type");
    }
}

json summary_to_json(const ReportSummary& s) {
    return json{
            {"num_instances", s.num_instances},
            {"num_embed_failed", s.num_embed_failed},
            {"mean_r_chain", s.mean_r_chain},
            {"stddev_r_chain", s.stddev_r_chain},
            {"mean_r_enc", s.mean_r_enc},
            {"stddev_r_enc", s.stddev_r_enc},
            {"mean_best_c", cost_to_json(s.mean_best_c)},
            {"num_finite", s.num_finite},
            {"finite_mean_best_c", s.finite_mean_best_c},
            {"stddev_best_c", s.stddev_best_c},
            {"stderr_best_c", s.stderr_best_c},
            {"success_rate", s.success_rate},
            {"stderr_success", s.stderr_success},
    };
}

std::string csv_report(const RunReport& report) {
    const std::string encoding = to_string(report.pipeline.encoding);
    const std::string chain = to_string(report.pipeline.chain);
    std::string out = "instance_id,encoding,hardware,chain_mode,r_chain,r_enc,best_c,mean_c,success\n";
    for (const InstanceResult& r : report.instances) {
        out += r.instance_id + ',' + encoding + ',' + report.pipeline.hardware + ',' + chain +
               ',' + detail::format_double(r.r_chain) + ',' + detail::format_double(r.r_enc) +
               ',' + r.best_c.to_string() + ',' + r.mean_c.to_string() + ',' +
               (r.success ? '1' : '0') + '\n';
    }
    return out;
}

void append_plot_row(std::string& out, const std::string& series, double x, double y,
                     double yerr) {
    out += series + ' ' + detail::format_double(x) + ' ' + detail::format_double(y) + ' ' +
           detail::format_double(yerr) + '\n';
}

std::string plotdata_report(const RunReport& report) {
    // One aggregate point per instance size; rates and costs carry stddev
    // bars, the success rate a standard error bar.
    std::map<int, std::vector<const InstanceResult*>> by_size;
    for (const InstanceResult& r : report.instances) by_size[r.num_vars].push_back(&r);

    std::string out;
    const char* rate_series[] = {"r_chain", "r_enc"};
    for (const char* series : rate_series) {
        for (const auto& [size, rs] : by_size) {
            std::vector<double> values;
            for (const InstanceResult* r : rs) {
                if (r->embed_failed) continue;
                values.push_back(std::string(series) == "r_chain" ? r->r_chain : r->r_enc);
            }
            if (values.empty()) continue;
            const Stats stats = mean_stddev(values);
            append_plot_row(out, series, size, stats.mean, stats.stddev);
        }
    }
    for (const auto& [size, rs] : by_size) {
        std::vector<double> values;
        for (const InstanceResult* r : rs) {
            if (r->best_c.is_finite()) values.push_back(r->best_c.value());
        }
        if (values.empty()) continue;
        const Stats stats = mean_stddev(values);
        append_plot_row(out, "best_c", size, stats.mean, stats.stddev);
    }
    for (const auto& [size, rs] : by_size) {
        std::vector<double> values;
        for (const InstanceResult* r : rs) values.push_back(r->success ? 1.0 : 0.0);
        const Stats stats = mean_stddev(values);
        const double stderr_success =
                values.empty() ? 0.0 : stats.stddev / std::sqrt(static_cast<double>(values.size()));
        append_plot_row(out, "success", size, stats.mean, stderr_success);
    }
    return out;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "plotdata") return ReportFormat::PlotData;
    throw ConfigError("unknown report format: \"" + name +
                      "\" (expected json, csv, or plotdata)");
}

std::string emit_report(const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::Csv) return csv_report(report);
    if (format == ReportFormat::PlotData) return plotdata_report(report);

    json instances = json::array();
    for (const InstanceResult& r : report.instances) {
        instances.push_back(json{
                {"instance_id", r.instance_id},
                {"num_vars", r.num_vars},
                {"embed_failed", r.embed_failed},
                {"r_chain", r.r_chain},
                {"r_enc", r.r_enc},
                {"best_c", cost_to_json(r.best_c)},
                {"mean_c", cost_to_json(r.mean_c)},
                {"best_raw", cost_to_json(r.best_raw)},
                {"success", r.success},
                {"optimum_known", r.optimum_known},
        });
    }
    const json doc = {
            {"type", "report"},
            {"pipeline", pipeline_to_json(report.pipeline)},
            {"instances", instances},
            {"summary", summary_to_json(summarize(report))},
    };
    return doc.dump(2) + "\n";
}

RunReport parse_report(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& error) {
        throw std::invalid_argument(std::string("report is not valid JSON: ") + error.what());
    }
    if (!doc.is_object() || require_as<std::string>(doc, "type") != "report") {
        throw std::invalid_argument("document field \"type\" must be \"report\"");
    }
    RunReport report;
    report.pipeline = pipeline_from_json(require_field(doc, "pipeline"));
    const json& instances = require_field(doc, "instances");
    if (!instances.is_array()) {
        throw std::invalid_argument("report field \"instances\" must be an array");
    }
    for (const json& j : instances) {
        InstanceResult r;
        r.instance_id = require_as<std::string>(j, "instance_id");
        r.num_vars = require_as<int>(j, "num_vars");
        r.embed_failed = require_as<bool>(j, "embed_failed");
        r.r_chain = require_as<double>(j, "r_chain");
        r.r_enc = require_as<double>(j, "r_enc");
        r.best_c = cost_from_json(require_field(j, "best_c"), "best_c");
        r.mean_c = cost_from_json(require_field(j, "mean_c"), "mean_c");
        r.best_raw = cost_from_json(require_field(j, "best_raw"), "best_raw");
        r.success = require_as<bool>(j, "success");
        r.optimum_known = require_as<bool>(j, "optimum_known");
        report.instances.push_back(std::move(r));
    }
    return report;
}

std::string emit_comparison(const ComparisonRecord& record, ReportFormat format) {
    if (format == ReportFormat::PlotData) {
        throw std::invalid_argument("plotdata output is not defined for comparisons");
    }
    if (format == ReportFormat::Csv) {
        std::string out = "a,b,n_b,n_w,p,verdict\n";
        out += record.a + ',' + record.b + ',';
        out += record.fail_a ? "FAIL" : std::to_string(record.n_b);
        out += ',';
        out += record.fail_b ? "FAIL" : std::to_string(record.n_w);
        out += ',';
        if (record.p) out += detail::format_scientific3(*record.p);
        out += ',' + to_string(record.verdict) + '\n';
        return out;
    }
    json doc = {
            {"type", "comparison"},
            {"a", record.a},
            {"b", record.b},
            {"verdict", to_string(record.verdict)},
            {"fail_a", record.fail_a},
            {"fail_b", record.fail_b},
    };
    doc["n_b"] = record.fail_a ? json("FAIL") : json(record.n_b);
    doc["n_w"] = record.fail_b ? json("FAIL") : json(record.n_w);
    doc["p"] = record.p ? json(*record.p) : json(nullptr);
    return doc.dump(2) + "\n";
}

std::string emit_sweep(const SweepTable& table, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out = "multiplier,mean_c,stderr,num_finite,num_instances\n";
        for (const SweepPoint& point : table.points) {
            out += detail::format_double(point.multiplier) + ',' +
                   point.mean_best_c.to_string() + ',' +
                   detail::format_double(point.stderr_best_c) + ',' +
                   std::to_string(point.num_finite) + ',' + std::to_string(point.num_instances) +
                   '\n';
        }
        return out;
    }
    if (format == ReportFormat::PlotData) {
        std::string out;
        for (const SweepPoint& point : table.points) {
            if (point.num_finite == 0) continue;
            append_plot_row(out, "mean_c", point.multiplier, point.finite_mean_best_c,
                            point.stderr_best_c);
        }
        return out;
    }
    json points = json::array();
    for (const SweepPoint& point : table.points) {
        points.push_back(json{
                {"multiplier", point.multiplier},
                {"mean_c", cost_to_json(point.mean_best_c)},
                {"num_finite", point.num_finite},
                {"num_instances", point.num_instances},
                {"finite_mean_best_c", point.finite_mean_best_c},
                {"stderr_best_c", point.stderr_best_c},
        });
    }
    const json doc = {
            {"type", "sweep"},
            {"pipeline", pipeline_to_json(table.pipeline)},
            {"points", points},
    };
    return doc.dump(2) + "\n";
}

}  // namespace dqmforge
