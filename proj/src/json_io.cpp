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

#include "dqmforge/json_io.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dqmforge {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const char* expected) {
    throw std::invalid_argument("field \"" + field + "\" " + expected);
}

const json& require_field(const json& j, const std::string& key) {
    if (!j.is_object()) {
        throw std::invalid_argument("expected an object containing field \"" + key + "\"");
    }
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument("missing field \"" + key + "\"");
    return *it;
}

template <typename T>
T get_checked(const json& value, const std::string& field) {
    try {
        return value.get<T>();
    } catch (const json::exception&) {
        fail(field, "has the wrong type");
    }
}

template <typename T>
T require_as(const json& j, const std::string& key) {
    return get_checked<T>(require_field(j, key), key);
}

/// A field holding an array of fixed-width numeric rows, e.g. the
/// [[i, j, v], ...] coefficient lists. Returns each row as doubles; the
/// integer slots are range-checked by the model they are fed into.
std::vector<std::vector<double>> require_rows(const json& j, const std::string& key,
                                              std::size_t width) {
    const json& field = require_field(j, key);
    if (!field.is_array()) fail(key, "must be an array");
    std::vector<std::vector<double>> rows;
    rows.reserve(field.size());
    for (std::size_t r = 0; r < field.size(); ++r) {
        const json& row = field[r];
        const std::string label = key + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != width) {
            fail(label, ("must be an array of " + std::to_string(width) + " numbers").c_str());
        }
        std::vector<double> values;
        values.reserve(width);
        for (const json& v : row) {
            if (!v.is_number()) fail(label, "must contain only numbers");
            values.push_back(v.get<double>());
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

int as_index(double value, const std::string& field) {
    const int i = static_cast<int>(value);
    if (static_cast<double>(i) != value) fail(field, "must hold integer indices");
    return i;
}

std::vector<std::pair<int, int>> edges_from_rows(const json& j, const std::string& key) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& row : require_rows(j, key, 2)) {
        edges.emplace_back(as_index(row[0], key), as_index(row[1], key));
    }
    return edges;
}

json edges_to_rows(const std::vector<std::pair<int, int>>& edges) {
    json rows = json::array();
    for (const auto& [a, b] : edges) rows.push_back(json::array({a, b}));
    return rows;
}

json meta_to_json(const EncodingMeta& meta) {
    return json{
            {"encoding", to_string(meta.encoding)},
            {"n", meta.n},
            {"m", meta.m},
            {"penalty_strength", meta.penalty_strength},
    };
}

EncodingMeta meta_from_json(const json& j) {
    EncodingMeta meta;
    meta.encoding = encoding_from_string(require_as<std::string>(j, "encoding"));
    meta.n = require_as<int>(j, "n");
    meta.m = require_as<int>(j, "m");
    meta.penalty_strength = require_as<double>(j, "penalty_strength");
    return meta;
}

std::vector<std::int8_t> config_from_json(const json& value, const std::string& field) {
    if (!value.is_array()) fail(field, "must be an array");
    std::vector<std::int8_t> config;
    config.reserve(value.size());
    for (const json& v : value) {
        if (!v.is_number_integer()) fail(field, "must contain only integers");
        config.push_back(static_cast<std::int8_t>(v.get<int>()));
    }
    return config;
}

template <typename T>
json matrix_to_json(const std::vector<std::vector<T>>& matrix) {
    json rows = json::array();
    for (const auto& row : matrix) rows.push_back(row);
    return rows;
}

template <typename T>
std::vector<std::vector<T>> matrix_from_json(const json& j, const std::string& key) {
    const json& field = require_field(j, key);
    if (!field.is_array()) fail(key, "must be an array of arrays");
    std::vector<std::vector<T>> matrix;
    for (std::size_t r = 0; r < field.size(); ++r) {
        matrix.push_back(get_checked<std::vector<T>>(field[r],
                                                     key + "[" + std::to_string(r) + "]"));
    }
    return matrix;
}

}  // namespace

json dqm_to_json(const DiscreteModel& model) {
    json linear = json::array();
    for (const auto& [key, value] : model.linear_terms()) {
        linear.push_back(json::array({key[0], key[1], value}));
    }
    json quadratic = json::array();
    for (const auto& [key, value] : model.quadratic_terms()) {
        quadratic.push_back(json::array({key[0], key[1], key[2], key[3], value}));
    }
    return json{
            {"n", model.num_variables()},
            {"m", model.num_values()},
            {"linear", linear},
            {"quadratic", quadratic},
    };
}

DiscreteModel dqm_from_json(const json& j) {
    DiscreteModel model(require_as<int>(j, "n"), require_as<int>(j, "m"));
    for (const auto& row : require_rows(j, "linear", 3)) {
        model.add_linear(as_index(row[0], "linear"), as_index(row[1], "linear"), row[2]);
    }
    for (const auto& row : require_rows(j, "quadratic", 5)) {
        model.add_quadratic(as_index(row[0], "quadratic"), as_index(row[1], "quadratic"),
                            as_index(row[2], "quadratic"), as_index(row[3], "quadratic"), row[4]);
    }
    return model;
}

json bqm_to_json(const BinaryModel& model) {
    json linear = json::array();
    for (const auto& [i, value] : model.linear_terms()) {
        linear.push_back(json::array({i, value}));
    }
    json quadratic = json::array();
    for (const auto& [key, value] : model.quadratic_terms()) {
        quadratic.push_back(json::array({key.first, key.second, value}));
    }
    json doc{
            {"num_vars", model.num_variables()},
            {"vartype", to_string(model.vartype())},
            {"linear", linear},
            {"quadratic", quadratic},
            {"offset", model.offset()},
    };
    if (model.meta()) doc["meta"] = meta_to_json(*model.meta());
    return doc;
}

BinaryModel bqm_from_json(const json& j) {
    BinaryModel model(require_as<int>(j, "num_vars"),
                      vartype_from_string(require_as<std::string>(j, "vartype")));
    for (const auto& row : require_rows(j, "linear", 2)) {
        model.add_linear(as_index(row[0], "linear"), row[1]);
    }
    for (const auto& row : require_rows(j, "quadratic", 3)) {
        model.add_quadratic(as_index(row[0], "quadratic"), as_index(row[1], "quadratic"), row[2]);
    }
    model.add_offset(require_as<double>(j, "offset"));
    if (auto it = j.find("meta"); it != j.end() && !it->is_null()) {
        model.set_meta(meta_from_json(*it));
    }
    return model;
}

json graph_to_json(const Graph& graph) {
    return json{{"q", graph.q}, {"edges", edges_to_rows(graph.edges)}};
}

Graph graph_from_json(const json& j) {
    Graph graph;
    graph.q = require_as<int>(j, "q");
    graph.edges = edges_from_rows(j, "edges");
    graph.validate();
    return graph;
}

json hardware_to_json(const HardwareGraph& graph) {
    json doc{{"num_qubits", graph.num_qubits}, {"edges", edges_to_rows(graph.edges)}};
    if (!graph.name.empty()) doc["name"] = graph.name;
    return doc;
}

HardwareGraph hardware_from_json(const json& j) {
    HardwareGraph graph;
    graph.num_qubits = require_as<int>(j, "num_qubits");
    graph.edges = edges_from_rows(j, "edges");
    if (auto it = j.find("name"); it != j.end() && !it->is_null()) {
        graph.name = get_checked<std::string>(*it, "name");
    }
    graph.validate();
    return graph;
}

json embedding_to_json(const Embedding& embedding) {
    json chains = json::object();
    for (const auto& [var, chain] : embedding.chains) {
        chains[std::to_string(var)] = chain;
    }
    return json{{"chains", chains}, {"chain_strength", embedding.chain_strength}};
}

Embedding embedding_from_json(const json& j) {
    const json& chains = require_field(j, "chains");
    if (!chains.is_object()) fail("chains", "must be an object keyed by variable index");
    Embedding embedding;
    for (const auto& [key, value] : chains.items()) {
        int var = 0;
        try {
            std::size_t consumed = 0;
            var = std::stoi(key, &consumed);
            if (consumed != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            fail("chains", "must be keyed by integer variable indices");
        }
        embedding.chains[var] = get_checked<std::vector<int>>(value, "chains." + key);
    }
    embedding.chain_strength = require_as<double>(j, "chain_strength");
    return embedding;
}

json sampler_params_to_json(const SamplerParams& params) {
    json doc{
            {"num_reads", params.num_reads},
            {"num_sweeps", params.num_sweeps},
            {"seed", params.seed},
            {"num_threads", params.num_threads},
    };
    if (params.beta.kind == BetaSchedule::Kind::Auto) {
        doc["beta"] = "auto";
    } else {
        doc["beta"] = json::array({params.beta.hot, params.beta.cold});
    }
    return doc;
}

SamplerParams sampler_params_from_json(const json& j) {
    SamplerParams params;
    params.num_reads = require_as<int>(j, "num_reads");
    params.num_sweeps = require_as<int>(j, "num_sweeps");
    params.seed = require_as<std::uint64_t>(j, "seed");
    params.num_threads = require_as<int>(j, "num_threads");
    const json& beta = require_field(j, "beta");
    if (beta.is_string() && beta.get<std::string>() == "auto") {
        params.beta = BetaSchedule::automatic();
    } else if (beta.is_array() && beta.size() == 2 && beta[0].is_number() &&
               beta[1].is_number()) {
        params.beta = BetaSchedule::explicit_range(beta[0].get<double>(), beta[1].get<double>());
    } else {
        fail("beta", "must be \"auto\" or a [hot, cold] pair");
    }
    params.validate();
    return params;
}

json samples_to_json(const SampleSet& samples) {
    json rows = json::array();
    for (const auto& aggregate : samples.aggregated()) {
        json config = json::array();
        for (std::int8_t v : aggregate.config) config.push_back(static_cast<int>(v));
        rows.push_back(json{
                {"config", config},
                {"energy", aggregate.energy},
                {"count", aggregate.count},
        });
    }
    return json{
            {"vartype", to_string(samples.vartype())},
            {"samples", rows},
            {"params", sampler_params_to_json(samples.params())},
    };
}

SampleFileContents samples_from_json(const json& j) {
    SampleFileContents contents;
    if (auto it = j.find("vartype"); it != j.end() && !it->is_null()) {
        contents.vartype = vartype_from_string(get_checked<std::string>(*it, "vartype"));
    }
    const json& rows = require_field(j, "samples");
    if (!rows.is_array()) fail("samples", "must be an array");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string label = "samples[" + std::to_string(r) + "]";
        const json& row = rows[r];
        SampleSet::Aggregate aggregate;
        aggregate.config = config_from_json(require_field(row, "config"), label + ".config");
        aggregate.energy = get_checked<double>(require_field(row, "energy"), label + ".energy");
        aggregate.count = get_checked<int>(require_field(row, "count"), label + ".count");
        if (aggregate.count < 1) fail(label + ".count", "must be positive");
        contents.aggregates.push_back(std::move(aggregate));
    }
    return contents;
}

json fga_to_json(const FgaInstance& instance) {
    return json{
            {"n_flights", instance.n_flights},
            {"m_gates", instance.m_gates},
            {"n_dep", instance.n_dep},
            {"n_arr", instance.n_arr},
            {"n_transfer", matrix_to_json(instance.n_transfer)},
            {"t_in", instance.t_in},
            {"t_out", instance.t_out},
            {"t_gate_arr", instance.t_gate_arr},
            {"t_gate_dep", instance.t_gate_dep},
            {"t_gate_gate", matrix_to_json(instance.t_gate_gate)},
            {"t_buf", instance.t_buf},
    };
}

FgaInstance fga_from_json(const json& j) {
    FgaInstance instance;
    instance.n_flights = require_as<int>(j, "n_flights");
    instance.m_gates = require_as<int>(j, "m_gates");
    instance.n_dep = require_as<std::vector<int>>(j, "n_dep");
    instance.n_arr = require_as<std::vector<int>>(j, "n_arr");
    instance.n_transfer = matrix_from_json<int>(j, "n_transfer");
    instance.t_in = require_as<std::vector<double>>(j, "t_in");
    instance.t_out = require_as<std::vector<double>>(j, "t_out");
    instance.t_gate_arr = require_as<std::vector<double>>(j, "t_gate_arr");
    instance.t_gate_dep = require_as<std::vector<double>>(j, "t_gate_dep");
    instance.t_gate_gate = matrix_from_json<double>(j, "t_gate_gate");
    instance.t_buf = require_as<double>(j, "t_buf");
    instance.validate();
    return instance;
}

json pipeline_to_json(const Pipeline& pipeline) {
    return json{
            {"name", pipeline.name},
            {"encoding", to_string(pipeline.encoding)},
            {"penalty", to_string(pipeline.penalty)},
            {"hardware", pipeline.hardware},
            {"chain", to_string(pipeline.chain)},
            {"repair", to_string(pipeline.repair)},
            {"embed_attempts", pipeline.embed_attempts},
            {"sampler", sampler_params_to_json(pipeline.sampler)},
    };
}

Pipeline pipeline_from_json(const json& j) {
    Pipeline pipeline;
    pipeline.name = require_as<std::string>(j, "name");
    pipeline.encoding = encoding_from_string(require_as<std::string>(j, "encoding"));
    pipeline.penalty = penalty_mode_from_string(require_as<std::string>(j, "penalty"));
    pipeline.hardware = require_as<std::string>(j, "hardware");
    pipeline.chain = chain_strength_mode_from_string(require_as<std::string>(j, "chain"));
    pipeline.repair = repair_mode_from_string(require_as<std::string>(j, "repair"));
    pipeline.embed_attempts = require_as<int>(j, "embed_attempts");
    pipeline.sampler = sampler_params_from_json(require_field(j, "sampler"));
    return pipeline;
}

}  // namespace dqmforge
