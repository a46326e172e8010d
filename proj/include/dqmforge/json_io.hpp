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

#include <optional>

#include <json.hpp>

#include "dqmforge/bench.hpp"
#include "dqmforge/embed.hpp"
#include "dqmforge/model.hpp"
#include "dqmforge/problems.hpp"
#include "dqmforge/sample.hpp"

// JSON views of every on-disk artifact. Parsers validate shape and report
// a missing or mistyped field by name via std::invalid_argument; value
// constraints (index ranges, vartype values, ...) are enforced by the
// constructed objects themselves.
//
// Schemas:
//   DiscreteModel  {"n", "m", "linear": [[i, alpha, v]...],
//                   "quadratic": [[i, j, alpha, beta, v]...]}
//   BinaryModel    {"num_vars", "vartype", "linear": [[i, v]...],
//                   "quadratic": [[i, j, v]...], "offset", "meta"?}
//   EncodingMeta   {"encoding", "n", "m", "penalty_strength"}
//   Graph          {"q", "edges": [[a, b]...]}
//   HardwareGraph  {"num_qubits", "edges": [[a, b]...], "name"?}
//   Embedding      {"chains": {"<var>": [qubit...]}, "chain_strength"}
//   SampleSet      {"vartype", "samples": [{"config", "energy", "count"}...],
//                   "params": {"num_reads", "num_sweeps", "beta", "seed",
//                              "num_threads"}}
//   FgaInstance    field-for-field mirror of the struct

namespace dqmforge {

nlohmann::json dqm_to_json(const DiscreteModel& model);
DiscreteModel dqm_from_json(const nlohmann::json& j);

nlohmann::json bqm_to_json(const BinaryModel& model);
BinaryModel bqm_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& graph);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json hardware_to_json(const HardwareGraph& graph);
HardwareGraph hardware_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const Embedding& embedding);
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json sampler_params_to_json(const SamplerParams& params);
SamplerParams sampler_params_from_json(const nlohmann::json& j);

/// Aggregated view: distinct configurations with counts, sorted by
/// (energy, configuration), plus the parameter echo.
nlohmann::json samples_to_json(const SampleSet& samples);

/// What decode needs back from a samples file. vartype is advisory (the
/// model being decoded against is authoritative) and may be absent in
/// hand-written files.
struct SampleFileContents {
    std::optional<Vartype> vartype;
    std::vector<SampleSet::Aggregate> aggregates;
};

SampleFileContents samples_from_json(const nlohmann::json& j);

nlohmann::json fga_to_json(const FgaInstance& instance);
FgaInstance fga_from_json(const nlohmann::json& j);

/// The fully resolved pipeline block embedded in reports and experiment
/// echoes: {"name", "encoding", "penalty", "hardware", "chain", "repair",
/// "embed_attempts", "sampler"}. pipeline_from_json is strict (every field
/// present); lenient config parsing with defaults lives in the CLI.
nlohmann::json pipeline_to_json(const Pipeline& pipeline);
Pipeline pipeline_from_json(const nlohmann::json& j);

}  // namespace dqmforge
