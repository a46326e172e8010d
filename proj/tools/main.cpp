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

// The dqmforge command line tool.
//
// Exit codes: 0 on success (including a recorded embedding FAIL), 1 for
// usage errors, 2 for domain errors (invalid models, malformed files,
// search spaces over the cap, ...). All file outputs are deterministic:
// rerunning a command with the same arguments and seed reproduces them
// byte for byte, and --threads never changes any output.

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqmforge/bench.hpp"
#include "dqmforge/detail/format.hpp"
#include "dqmforge/embed.hpp"
#include "dqmforge/encode.hpp"
#include "dqmforge/exceptions.hpp"
#include "dqmforge/json_io.hpp"
#include "dqmforge/model.hpp"
#include "dqmforge/problems.hpp"
#include "dqmforge/random.hpp"
#include "dqmforge/sample.hpp"

namespace {

using nlohmann::json;
using namespace dqmforge;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open \"" + path + "\" for reading");
    try {
        return json::parse(in);
    } catch (const json::exception& error) {
        throw ConfigError("\"" + path + "\" is not valid JSON: " + error.what());
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open \"" + path + "\" for writing");
    out << content;
    if (!out) throw ConfigError("failed writing \"" + path + "\"");
}

void write_json_output(const std::string& path, const json& doc) {
    write_output(path, doc.dump(2) + "\n");
}

/// Model files may be bare or wrapped in {"model": ..., "problem": ...}.
const json& model_block(const json& doc) {
    if (doc.is_object() && doc.contains("model")) return doc.at("model");
    return doc;
}

BinaryModel load_bqm(const std::string& path) {
    return bqm_from_json(model_block(load_json_file(path)));
}

DiscreteModel load_dqm(const std::string& path) {
    return dqm_from_json(model_block(load_json_file(path)));
}

BetaSchedule parse_beta(const std::string& text) {
    if (text == "auto") return BetaSchedule::automatic();
    double hot = 0.0, cold = 0.0;
    char excess = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &hot, &cold, &excess) != 2) {
        throw ConfigError("beta must be \"auto\" or \"<hot>,<cold>\", got \"" + text + "\"");
    }
    return BetaSchedule::explicit_range(hot, cold);
}

std::string beta_to_string(const BetaSchedule& beta) {
    if (beta.kind == BetaSchedule::Kind::Auto) return "auto";
    return detail::format_double(beta.hot) + "," + detail::format_double(beta.cold);
}

/// File names derived from user-chosen pipeline names.
std::string sanitize_name(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok) c = '_';
    }
    return out;
}

std::string format_extension(ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return ".json";
        case ReportFormat::Csv: return ".csv";
        case ReportFormat::PlotData: return ".dat";
    }
    return ".out";
}

HardwareResolver make_resolver() {
    HardwareResolver resolver;
    resolver.set_file_loader(
            [](const std::string& path) { return hardware_from_json(load_json_file(path)); });
    return resolver;
}

// ---------------------------------------------------------------------------
// gen

struct GenColoringOpts {
    int q = 10;
    double p = 0.5;
    int k = 3;
    std::uint64_t seed = 0;
    std::string output;
};

void run_gen_coloring(const GenColoringOpts& opts) {
    const Graph graph = gen_er_graph(opts.q, opts.p, opts.seed);
    const DiscreteModel model = coloring_dqm(graph, opts.k);
    const json doc = {
            {"cli_config",
             {{"command", "gen coloring"},
              {"q", opts.q},
              {"p", opts.p},
              {"k", opts.k},
              {"seed", opts.seed},
              {"output", opts.output}}},
            {"problem",
             {{"family", "coloring"}, {"num_colors", opts.k}, {"graph", graph_to_json(graph)}}},
            {"model", dqm_to_json(model)},
    };
    write_json_output(opts.output, doc);
}

struct GenFgaOpts {
    int n = 7;
    int m = 2;
    std::string mu = "auto";
    std::uint64_t seed = 0;
    std::string output;
};

void run_gen_fga(const GenFgaOpts& opts) {
    const PenaltyMode mu_mode = penalty_mode_from_string(opts.mu);
    const FgaInstance instance = gen_fga(opts.n, opts.m, opts.seed);
    json doc = {
            {"cli_config",
             {{"command", "gen fga"},
              {"n", opts.n},
              {"m", opts.m},
              {"mu", to_string(mu_mode)},
              {"seed", opts.seed},
              {"output", opts.output}}},
            {"problem", {{"family", "fga"}, {"instance", fga_to_json(instance)}}},
    };
    // A single-gate instance is representable but has no two-value cost
    // model to emit.
    doc["model"] = opts.m >= 2 ? dqm_to_json(fga_dqm(instance, mu_mode)) : json(nullptr);
    write_json_output(opts.output, doc);
}

// ---------------------------------------------------------------------------
// encode

struct EncodeOpts {
    std::string input;
    std::string encoding = "domain-wall";
    std::string penalty = "auto";
    std::string output;
};

void run_encode(const EncodeOpts& opts) {
    const DiscreteModel model = load_dqm(opts.input);
    const EncodeOptions options{encoding_from_string(opts.encoding),
                                penalty_mode_from_string(opts.penalty)};
    const BinaryModel encoded = encode(model, options);
    const json doc = {
            {"cli_config",
             {{"command", "encode"},
              {"input", opts.input},
              {"encoding", to_string(options.encoding)},
              {"penalty", to_string(options.penalty)},
              {"output", opts.output}}},
            {"model", bqm_to_json(encoded)},
    };
    write_json_output(opts.output, doc);
}

// ---------------------------------------------------------------------------
// embed

struct EmbedOpts {
    std::string input;
    std::string hardware;
    std::string chain = "utc";
    int attempts = kDefaultEmbedAttempts;
    std::uint64_t seed = 0;
    std::string output;
};

void run_embed(const EmbedOpts& opts) {
    const BinaryModel loaded = load_bqm(opts.input);
    const BinaryModel logical = loaded.vartype() == Vartype::SPIN ? loaded : to_spin(loaded);
    const ChainStrengthMode chain_mode = chain_strength_mode_from_string(opts.chain);

    HardwareResolver resolver = make_resolver();
    const HardwareGraph* hardware = resolver.resolve(opts.hardware);
    if (hardware == nullptr) {
        throw ConfigError("embed requires a hardware graph, not \"native\"");
    }

    json doc = {
            {"cli_config",
             {{"command", "embed"},
              {"input", opts.input},
              {"hardware", opts.hardware},
              {"chain", to_string(chain_mode)},
              {"attempts", opts.attempts},
              {"seed", opts.seed},
              {"output", opts.output}}},
    };

    std::optional<Embedding> embedding =
            embed_greedy(interaction_graph(logical), *hardware, opts.attempts, opts.seed);
    if (!embedding) {
        doc["fail"] = true;
        write_json_output(opts.output, doc);
        return;  // a failed search is a recorded outcome, not an error
    }
    embedding->chain_strength = chain_strength(logical, chain_mode);
    doc["fail"] = false;
    doc["embedding"] = embedding_to_json(*embedding);
    doc["num_qubits"] = hardware->num_qubits;
    write_json_output(opts.output, doc);
}

// ---------------------------------------------------------------------------
// sample

struct SampleOpts {
    std::string input;
    int reads = 100;
    int sweeps = 1000;
    std::string beta = "auto";
    std::uint64_t seed = 0;
    int threads = 0;
    std::string hardware = "native";
    std::string chain = "utc";
    std::string repair = "majority";
    int attempts = kDefaultEmbedAttempts;
    std::string output;
};

void run_sample(const SampleOpts& opts) {
    const BinaryModel loaded = load_bqm(opts.input);
    const BinaryModel logical = loaded.vartype() == Vartype::SPIN ? loaded : to_spin(loaded);

    SamplerParams params;
    params.num_reads = opts.reads;
    params.num_sweeps = opts.sweeps;
    params.beta = parse_beta(opts.beta);
    params.seed = opts.seed;
    params.num_threads = opts.threads;
    params.validate();

    json doc = {
            {"cli_config",
             {{"command", "sample"},
              {"input", opts.input},
              {"reads", opts.reads},
              {"sweeps", opts.sweeps},
              {"beta", beta_to_string(params.beta)},
              {"seed", opts.seed},
              {"hardware", opts.hardware},
              {"chain", opts.hardware == "native" ? json(nullptr) : json(opts.chain)},
              {"repair", opts.hardware == "native" ? json(nullptr) : json(opts.repair)},
              {"attempts", opts.attempts},
              {"output", opts.output}}},
    };

    // Collect logical reads; energies and configurations are reported in
    // the input model's own variable domain.
    std::vector<Read> logical_reads;
    double r_chain = 1.0;
    if (opts.hardware == "native") {
        const SampleSet samples = anneal(logical, params);
        logical_reads = samples.reads();
    } else {
        HardwareResolver resolver = make_resolver();
        const HardwareGraph* hardware = resolver.resolve(opts.hardware);
        std::optional<Embedding> embedding =
                embed_greedy(interaction_graph(logical), *hardware, opts.attempts,
                             substream_seed(opts.seed, 1));
        if (!embedding) {
            doc["fail"] = true;
            write_json_output(opts.output, doc);
            return;
        }
        embedding->chain_strength =
                chain_strength(logical, chain_strength_mode_from_string(opts.chain));
        const BinaryModel physical = apply_embedding(logical, *embedding, *hardware);
        const SampleSet physical_samples = anneal(physical, params);
        const UnembeddedReads reads =
                unembed(physical_samples, *embedding, repair_mode_from_string(opts.repair));
        r_chain = reads.chain_rate();
        for (std::size_t k = 0; k < reads.configs.size(); ++k) {
            const std::uint64_t read_seed =
                    physical_samples.reads()[static_cast<std::size_t>(reads.source_reads[k])].seed;
            logical_reads.push_back(
                    Read{reads.configs[k], binary_energy(logical, reads.configs[k]), read_seed});
        }
        doc["fail"] = false;
    }

    if (loaded.vartype() == Vartype::BINARY) {
        for (Read& read : logical_reads) {
            read.config = config_to_binary(read.config);
            read.energy = binary_energy(loaded, read.config);
        }
    }

    if (logical_reads.empty()) {
        // Every read was discarded; emit an empty sample list rather than
        // refusing to write.
        doc["vartype"] = to_string(loaded.vartype());
        doc["samples"] = json::array();
        doc["params"] = sampler_params_to_json(params);
    } else {
        const SampleSet samples(loaded.vartype(), std::move(logical_reads), params);
        json body = samples_to_json(samples);
        for (auto& [key, value] : body.items()) doc[key] = std::move(value);
    }
    doc["r_chain"] = r_chain;
    write_json_output(opts.output, doc);
}

// ---------------------------------------------------------------------------
// exact

struct ExactOpts {
    std::string input;
    std::uint64_t cap = kDefaultExactCap;
    std::string output;
};

void run_exact(const ExactOpts& opts) {
    const json input = load_json_file(opts.input);
    const json& model_json = model_block(input);
    json doc = {
            {"cli_config",
             {{"command", "exact"},
              {"input", opts.input},
              {"cap", opts.cap},
              {"output", opts.output}}},
    };
    if (model_json.is_object() && model_json.contains("num_vars")) {
        const ExactSolution solution = solve_exact(bqm_from_json(model_json), opts.cap);
        doc["energy"] = solution.energy;
        json configs = json::array();
        for (const auto& config : solution.configs) {
            json row = json::array();
            for (std::int8_t v : config) row.push_back(static_cast<int>(v));
            configs.push_back(std::move(row));
        }
        doc["configs"] = std::move(configs);
    } else {
        const ExactDqmSolution solution = solve_exact(dqm_from_json(model_json), opts.cap);
        doc["energy"] = solution.energy;
        doc["assignments"] = solution.assignments;
    }
    write_json_output(opts.output, doc);
}

// ---------------------------------------------------------------------------
// decode

struct DecodeOpts {
    std::string input;
    std::string model_path;
    std::string output;
};

void run_decode(const DecodeOpts& opts) {
    const BinaryModel model = load_bqm(opts.model_path);
    const SampleFileContents contents = samples_from_json(load_json_file(opts.input));

    json reads = json::array();
    long long total = 0;
    long long valid = 0;
    for (const SampleSet::Aggregate& aggregate : contents.aggregates) {
        std::vector<std::int8_t> config = aggregate.config;
        if (contents.vartype && *contents.vartype != model.vartype()) {
            config = model.vartype() == Vartype::SPIN ? config_to_spin(config)
                                                      : config_to_binary(config);
        }
        const DecodedSample decoded = decode(model, config);
        json row = {{"count", aggregate.count}, {"valid", decoded.valid()}};
        json config_row = json::array();
        for (std::int8_t v : aggregate.config) config_row.push_back(static_cast<int>(v));
        row["config"] = std::move(config_row);
        if (decoded.valid()) {
            row["assignment"] = *decoded.assignment;
            valid += aggregate.count;
        } else {
            row["violated"] = decoded.violated;
        }
        reads.push_back(std::move(row));
        total += aggregate.count;
    }

    const json doc = {
            {"cli_config",
             {{"command", "decode"},
              {"input", opts.input},
              {"model", opts.model_path},
              {"output", opts.output}}},
            {"r_enc", total == 0 ? 0.0 : static_cast<double>(valid) / static_cast<double>(total)},
            {"reads", reads},
    };
    write_json_output(opts.output, doc);
}

// ---------------------------------------------------------------------------
// bench

Pipeline pipeline_from_config(const json& j, int index, std::uint64_t default_seed) {
    if (!j.is_object()) throw ConfigError("every pipeline entry must be an object");
    if (!j.contains("encoding")) {
        throw ConfigError("pipeline " + std::to_string(index) + " is missing \"encoding\"");
    }
    Pipeline pipeline;
    pipeline.encoding = encoding_from_string(j.at("encoding").get<std::string>());
    pipeline.name = j.value("name", "p" + std::to_string(index));
    if (j.contains("penalty")) {
        pipeline.penalty = penalty_mode_from_string(j.at("penalty").get<std::string>());
    }
    pipeline.hardware = j.value("hardware", std::string("native"));
    if (j.contains("chain")) {
        pipeline.chain = chain_strength_mode_from_string(j.at("chain").get<std::string>());
    }
    if (j.contains("repair")) {
        pipeline.repair = repair_mode_from_string(j.at("repair").get<std::string>());
    }
    pipeline.embed_attempts = j.value("embed_attempts", kDefaultEmbedAttempts);
    pipeline.sampler.seed = default_seed;
    if (j.contains("sampler")) {
        const json& sampler = j.at("sampler");
        if (!sampler.is_object()) {
            throw ConfigError("pipeline field \"sampler\" must be an object");
        }
        pipeline.sampler.num_reads = sampler.value("num_reads", pipeline.sampler.num_reads);
        pipeline.sampler.num_sweeps = sampler.value("num_sweeps", pipeline.sampler.num_sweeps);
        pipeline.sampler.seed = sampler.value("seed", default_seed);
        if (sampler.contains("beta")) {
            if (sampler.at("beta").is_string()) {
                pipeline.sampler.beta = parse_beta(sampler.at("beta").get<std::string>());
            } else if (sampler.at("beta").is_array() && sampler.at("beta").size() == 2) {
                pipeline.sampler.beta = BetaSchedule::explicit_range(
                        sampler.at("beta")[0].get<double>(), sampler.at("beta")[1].get<double>());
            } else {
                throw ConfigError("pipeline field \"beta\" must be \"auto\" or [hot, cold]");
            }
        }
    }
    pipeline.sampler.validate();
    return pipeline;
}

std::vector<BenchInstance> instances_from_config(const json& config, std::uint64_t seed) {
    if (!config.contains("family")) throw ConfigError("experiment config is missing \"family\"");
    const Family family = family_from_string(config.at("family").get<std::string>());
    const json params = config.value("params", json::object());
    if (!params.is_object()) throw ConfigError("experiment field \"params\" must be an object");
    const int count = params.value("count", 20);
    if (family == Family::Coloring) {
        return make_coloring_instances(count, params.value("q", 10), params.value("k", 3),
                                       params.value("p", 0.5), seed);
    }
    return make_fga_instances(count, params.value("n", 7), params.value("m", 2), seed);
}

std::vector<ReportFormat> formats_from_config(const json& config) {
    std::vector<ReportFormat> formats;
    for (const json& f : config.value("formats", json::array({"json"}))) {
        formats.push_back(report_format_from_string(f.get<std::string>()));
    }
    if (formats.empty()) formats.push_back(ReportFormat::Json);
    return formats;
}

struct BenchRunOpts {
    std::string config_path;
    int threads = 0;
};

void run_bench_run(const BenchRunOpts& opts, std::uint64_t env_seed) {
    const json config = load_json_file(opts.config_path);
    const std::uint64_t seed = config.value("seed", env_seed);
    const std::uint64_t cap = config.value("exact_cap", kDefaultExactCap);
    const std::string output_dir = config.value("output_dir", std::string("."));
    const std::vector<ReportFormat> formats = formats_from_config(config);

    std::vector<BenchInstance> instances = instances_from_config(config, seed);
    attach_exact_optima(instances, cap, opts.threads);

    if (!config.contains("pipelines") || !config.at("pipelines").is_array() ||
        config.at("pipelines").empty()) {
        throw ConfigError("experiment config needs a nonempty \"pipelines\" array");
    }
    std::vector<Pipeline> pipelines;
    std::set<std::string> names;
    int index = 0;
    for (const json& entry : config.at("pipelines")) {
        Pipeline pipeline = pipeline_from_config(entry, index++, seed);
        if (!names.insert(pipeline.name).second) {
            throw ConfigError("duplicate pipeline name \"" + pipeline.name + "\"");
        }
        pipelines.push_back(std::move(pipeline));
    }

    HardwareResolver resolver = make_resolver();
    std::vector<RunReport> reports;
    reports.reserve(pipelines.size());
    for (const Pipeline& pipeline : pipelines) {
        reports.push_back(run_pipeline(instances, pipeline, resolver, opts.threads));
    }
    resolve_success_against_best(reports);

    std::filesystem::create_directories(output_dir);
    const std::filesystem::path dir(output_dir);

    json resolved_pipelines = json::array();
    for (const RunReport& report : reports) {
        resolved_pipelines.push_back(pipeline_to_json(report.pipeline));
    }
    json format_names = json::array();
    for (const json& f : config.value("formats", json::array({"json"}))) format_names.push_back(f);
    const json resolved = {
            {"cli_config",
             {{"command", "bench run"}, {"config", opts.config_path}, {"threads", opts.threads}}},
            {"family", config.at("family")},
            {"params", config.value("params", json::object())},
            {"seed", seed},
            {"exact_cap", cap},
            {"output_dir", output_dir},
            {"formats", format_names},
            {"num_instances", static_cast<int>(instances.size())},
            {"pipelines", resolved_pipelines},
    };
    write_json_output((dir / "experiment_resolved.json").string(), resolved);

    for (const RunReport& report : reports) {
        const ReportSummary summary = summarize(report);
        for (ReportFormat format : formats) {
            const std::string path =
                    (dir / ("report_" + sanitize_name(report.pipeline.name) +
                            format_extension(format)))
                            .string();
            write_output(path, emit_report(report, format));
        }
        std::cout << report.pipeline.name << ": R_chain " << detail::format_double(summary.mean_r_chain)
                  << ", R_enc " << detail::format_double(summary.mean_r_enc) << ", best C "
                  << summary.mean_best_c.to_string() << ", success "
                  << detail::format_double(summary.success_rate);
        if (summary.num_embed_failed > 0) {
            std::cout << " (" << summary.num_embed_failed << " embed FAIL)";
        }
        std::cout << "\n";
    }

    for (std::size_t i = 0; i < reports.size(); ++i) {
        for (std::size_t j = i + 1; j < reports.size(); ++j) {
            const ComparisonRecord record = compare(reports[i], reports[j]);
            for (ReportFormat format : formats) {
                if (format == ReportFormat::PlotData) continue;
                const std::string path =
                        (dir / ("compare_" + sanitize_name(record.a) + "_vs_" +
                                sanitize_name(record.b) + format_extension(format)))
                                .string();
                write_output(path, emit_comparison(record, format));
            }
            std::cout << record.a << " vs " << record.b << ": ";
            if (record.fail_a || record.fail_b) {
                std::cout << (record.fail_a ? "FAIL" : std::to_string(record.n_b)) << "/"
                          << (record.fail_b ? "FAIL" : std::to_string(record.n_w));
            } else {
                std::cout << record.n_b << "/" << record.n_w;
                if (record.p) std::cout << ", p " << detail::format_scientific3(*record.p);
            }
            std::cout << ", " << to_string(record.verdict) << "\n";
        }
    }
}

struct BenchSweepOpts {
    std::string config_path;
    int threads = 0;
};

void run_bench_sweep(const BenchSweepOpts& opts, std::uint64_t env_seed) {
    const json config = load_json_file(opts.config_path);
    const std::uint64_t seed = config.value("seed", env_seed);
    const std::uint64_t cap = config.value("exact_cap", kDefaultExactCap);
    const std::string output_dir = config.value("output_dir", std::string("."));
    const std::vector<ReportFormat> formats = formats_from_config(config);

    if (!config.contains("multipliers") || !config.at("multipliers").is_array() ||
        config.at("multipliers").empty()) {
        throw ConfigError("sweep config needs a nonempty \"multipliers\" array");
    }
    std::vector<double> multipliers;
    for (const json& m : config.at("multipliers")) multipliers.push_back(m.get<double>());

    if (!config.contains("pipeline")) throw ConfigError("sweep config is missing \"pipeline\"");
    const Pipeline pipeline = pipeline_from_config(config.at("pipeline"), 0, seed);

    std::vector<BenchInstance> instances = instances_from_config(config, seed);
    attach_exact_optima(instances, cap, opts.threads);

    HardwareResolver resolver = make_resolver();
    const SweepTable table =
            constraint_sweep(instances, pipeline, multipliers, resolver, opts.threads);

    std::filesystem::create_directories(output_dir);
    const std::filesystem::path dir(output_dir);
    const json resolved = {
            {"cli_config",
             {{"command", "bench sweep"}, {"config", opts.config_path}, {"threads", opts.threads}}},
            {"family", config.at("family")},
            {"params", config.value("params", json::object())},
            {"seed", seed},
            {"exact_cap", cap},
            {"output_dir", output_dir},
            {"multipliers", multipliers},
            {"pipeline", pipeline_to_json(pipeline)},
    };
    write_json_output((dir / "sweep_resolved.json").string(), resolved);

    for (ReportFormat format : formats) {
        const std::string path =
                (dir / ("sweep_" + sanitize_name(pipeline.name) + format_extension(format)))
                        .string();
        write_output(path, emit_sweep(table, format));
    }
    for (const SweepPoint& point : table.points) {
        std::cout << "multiplier " << detail::format_double(point.multiplier) << ": mean C "
                  << point.mean_best_c.to_string() << " (" << point.num_finite << "/"
                  << point.num_instances << " finite)\n";
    }
}

struct BenchCompareOpts {
    std::string report_a;
    std::string report_b;
    std::string format = "json";
    std::string output;
};

void run_bench_compare(const BenchCompareOpts& opts) {
    std::ifstream in_a(opts.report_a), in_b(opts.report_b);
    if (!in_a) throw ConfigError("cannot open \"" + opts.report_a + "\" for reading");
    if (!in_b) throw ConfigError("cannot open \"" + opts.report_b + "\" for reading");
    const std::string text_a((std::istreambuf_iterator<char>(in_a)),
                             std::istreambuf_iterator<char>());
    const std::string text_b((std::istreambuf_iterator<char>(in_b)),
                             std::istreambuf_iterator<char>());
    const ComparisonRecord record = compare(parse_report(text_a), parse_report(text_b));
    write_output(opts.output,
                 emit_comparison(record, report_format_from_string(opts.format)));
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t env_seed = 0;
    if (const char* env = std::getenv("DQMFORGE_SEED")) {
        errno = 0;
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (errno != 0 || end == env || *end != '\0') {
            std::cerr << "error: DQMFORGE_SEED must be a nonnegative integer, got \"" << env
                      << "\"\n";
            return 1;
        }
        env_seed = value;
    }

    CLI::App app{"dqmforge: discrete quadratic models, binary encodings, annealing, benchmarks"};
    app.require_subcommand(1);

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate problem instances");
    gen->require_subcommand(1);

    GenColoringOpts gen_coloring_opts;
    gen_coloring_opts.seed = env_seed;
    auto* gen_coloring = gen->add_subcommand("coloring", "Random graph k-coloring instance");
    gen_coloring->add_option("-q,--q", gen_coloring_opts.q, "Number of vertices")
            ->capture_default_str();
    gen_coloring->add_option("-p,--p", gen_coloring_opts.p, "Edge probability")
            ->capture_default_str();
    gen_coloring->add_option("-k,--k", gen_coloring_opts.k, "Number of colors")
            ->capture_default_str();
    gen_coloring->add_option("--seed", gen_coloring_opts.seed, "Generator seed")
            ->capture_default_str();
    gen_coloring->add_option("-o,--output", gen_coloring_opts.output,
                             "Output file (stdout if omitted)");
    gen_coloring->callback([&]() { run_gen_coloring(gen_coloring_opts); });

    GenFgaOpts gen_fga_opts;
    gen_fga_opts.seed = env_seed;
    auto* gen_fga = gen->add_subcommand("fga", "Random flight-gate assignment instance");
    gen_fga->add_option("-n,--n", gen_fga_opts.n, "Number of flights")->capture_default_str();
    gen_fga->add_option("-m,--m", gen_fga_opts.m, "Number of gates")->capture_default_str();
    gen_fga->add_option("--mu", gen_fga_opts.mu, "Conflict penalty mode (auto|fixed:V|scaled:M)")
            ->capture_default_str();
    gen_fga->add_option("--seed", gen_fga_opts.seed, "Generator seed")->capture_default_str();
    gen_fga->add_option("-o,--output", gen_fga_opts.output, "Output file (stdout if omitted)");
    gen_fga->callback([&]() { run_gen_fga(gen_fga_opts); });

    // encode ---------------------------------------------------------------
    EncodeOpts encode_opts;
    auto* encode_cmd = app.add_subcommand("encode", "Encode a discrete model into binary form");
    encode_cmd->add_option("-i,--input", encode_opts.input, "Discrete model file")->required();
    encode_cmd
            ->add_option("-e,--encoding", encode_opts.encoding, "one-hot or domain-wall")
            ->check(CLI::IsMember({"one-hot", "onehot", "domain-wall", "domainwall"}))
            ->capture_default_str();
    encode_cmd
            ->add_option("--penalty", encode_opts.penalty,
                         "Penalty strength mode (auto|fixed:V|scaled:M)")
            ->capture_default_str();
    encode_cmd->add_option("-o,--output", encode_opts.output, "Output file (stdout if omitted)");
    encode_cmd->callback([&]() { run_encode(encode_opts); });

    // embed ------------------------------------------------------------------
    EmbedOpts embed_opts;
    embed_opts.seed = env_seed;
    auto* embed_cmd = app.add_subcommand("embed", "Find a minor embedding onto hardware");
    embed_cmd->add_option("-i,--input", embed_opts.input, "Binary model file")->required();
    embed_cmd
            ->add_option("--hardware", embed_opts.hardware,
                         "chimera:R,C,S or a hardware graph file")
            ->required();
    embed_cmd->add_option("--chain", embed_opts.chain, "Chain strength mode (utc[:P]|fixed:V|max)")
            ->capture_default_str();
    embed_cmd->add_option("--attempts", embed_opts.attempts, "Independent search attempts")
            ->capture_default_str();
    embed_cmd->add_option("--seed", embed_opts.seed, "Search seed")->capture_default_str();
    embed_cmd->add_option("-o,--output", embed_opts.output, "Output file (stdout if omitted)");
    embed_cmd->callback([&]() { run_embed(embed_opts); });

    // sample -----------------------------------------------------------------
    SampleOpts sample_opts;
    sample_opts.seed = env_seed;
    auto* sample_cmd = app.add_subcommand("sample", "Anneal a binary model");
    sample_cmd->add_option("-i,--input", sample_opts.input, "Binary model file")->required();
    sample_cmd->add_option("--reads", sample_opts.reads, "Number of reads")->capture_default_str();
    sample_cmd->add_option("--sweeps", sample_opts.sweeps, "Sweeps per read")
            ->capture_default_str();
    sample_cmd->add_option("--beta", sample_opts.beta, "auto or <hot>,<cold>")
            ->capture_default_str();
    sample_cmd->add_option("--seed", sample_opts.seed, "Sampler seed")->capture_default_str();
    sample_cmd->add_option("--threads", sample_opts.threads, "Worker threads (0 = all)")
            ->capture_default_str();
    sample_cmd
            ->add_option("--hardware", sample_opts.hardware,
                         "native, chimera:R,C,S, or a hardware graph file")
            ->capture_default_str();
    sample_cmd->add_option("--chain", sample_opts.chain, "Chain strength mode")
            ->capture_default_str();
    sample_cmd->add_option("--repair", sample_opts.repair, "Broken chain handling")
            ->check(CLI::IsMember({"majority", "discard"}))
            ->capture_default_str();
    sample_cmd->add_option("--attempts", sample_opts.attempts, "Embedding attempts")
            ->capture_default_str();
    sample_cmd->add_option("-o,--output", sample_opts.output, "Output file (stdout if omitted)");
    sample_cmd->callback([&]() { run_sample(sample_opts); });

    // exact ------------------------------------------------------------------
    ExactOpts exact_opts;
    auto* exact_cmd = app.add_subcommand("exact", "Exhaustive ground-state search");
    exact_cmd->add_option("-i,--input", exact_opts.input, "Discrete or binary model file")
            ->required();
    exact_cmd->add_option("--cap", exact_opts.cap, "Largest allowed search space")
            ->capture_default_str();
    exact_cmd->add_option("-o,--output", exact_opts.output, "Output file (stdout if omitted)");
    exact_cmd->callback([&]() { run_exact(exact_opts); });

    // decode -----------------------------------------------------------------
    DecodeOpts decode_opts;
    auto* decode_cmd = app.add_subcommand("decode", "Decode samples back to assignments");
    decode_cmd->add_option("-i,--input", decode_opts.input, "Samples file")->required();
    decode_cmd->add_option("-m,--model", decode_opts.model_path, "Encoded binary model file")
            ->required();
    decode_cmd->add_option("-o,--output", decode_opts.output, "Output file (stdout if omitted)");
    decode_cmd->callback([&]() { run_decode(decode_opts); });

    // bench ------------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Benchmark pipelines over instance classes");
    bench->require_subcommand(1);

    BenchRunOpts bench_run_opts;
    auto* bench_run = bench->add_subcommand("run", "Run pipelines and compare them pairwise");
    bench_run->add_option("-c,--config", bench_run_opts.config_path, "Experiment config file")
            ->required();
    bench_run->add_option("--threads", bench_run_opts.threads, "Worker threads (0 = all)")
            ->capture_default_str();
    bench_run->callback([&]() { run_bench_run(bench_run_opts, env_seed); });

    BenchSweepOpts bench_sweep_opts;
    auto* bench_sweep = bench->add_subcommand("sweep", "Sweep the constraint penalty multiplier");
    bench_sweep->add_option("-c,--config", bench_sweep_opts.config_path, "Sweep config file")
            ->required();
    bench_sweep->add_option("--threads", bench_sweep_opts.threads, "Worker threads (0 = all)")
            ->capture_default_str();
    bench_sweep->callback([&]() { run_bench_sweep(bench_sweep_opts, env_seed); });

    BenchCompareOpts bench_compare_opts;
    auto* bench_compare = bench->add_subcommand("compare", "Compare two report files");
    bench_compare->add_option("-a,--a", bench_compare_opts.report_a, "Baseline report (expected winner)")
            ->required();
    bench_compare->add_option("-b,--b", bench_compare_opts.report_b, "Challenger report")
            ->required();
    bench_compare->add_option("-f,--format", bench_compare_opts.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    bench_compare->add_option("-o,--output", bench_compare_opts.output,
                              "Output file (stdout if omitted)");
    bench_compare->callback([&]() { run_bench_compare(bench_compare_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 0;
}
