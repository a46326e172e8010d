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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqmforge/model.hpp"
#include "dqmforge/problems.hpp"
#include "dqmforge/sample.hpp"

namespace dqmforge {

inline constexpr double kDefaultChainPrefactor = 1.414;
inline constexpr int kDefaultEmbedAttempts = 3;

/// A physical qubit connectivity graph. Edges are canonical (a < b, sorted,
/// unique); qubits are 0..num_qubits-1 and may be isolated.
struct HardwareGraph {
    int num_qubits = 0;
    std::vector<std::pair<int, int>> edges;
    std::string name;  ///< optional tag, e.g. "chimera:4,4,4"

    void validate() const;
    std::vector<std::vector<int>> adjacency() const;
};

/// Standard Chimera lattice: a rows x cols grid of complete bipartite
/// K_{shore,shore} unit cells. Within a cell the two shores are fully
/// connected to each other; between vertically adjacent cells matching
/// qubits of the first shore are coupled, between horizontally adjacent
/// cells matching qubits of the second shore. Qubit (r, c, u, k) has index
/// ((r * cols) + c) * 2 * shore + u * shore + k.
HardwareGraph gen_chimera(int rows, int cols, int shore);

/// The logical interaction graph of a binary model: one vertex per
/// variable, one edge per nonzero coupling.
Graph interaction_graph(const BinaryModel& model);

/// A minor embedding: each logical variable owns a connected, pairwise
/// disjoint chain of physical qubits.
struct Embedding {
    std::map<int, std::vector<int>> chains;
    double chain_strength = 1.0;
};

/// Greedy chain-growth search for a minor embedding. Logical variables are
/// visited in (seeded) random order; each is rooted at the free qubit
/// reaching the most already-placed neighbor chains at the smallest summed
/// BFS distance, then grown toward each of them along shortest paths
/// through free qubits, distances re-measured arm by arm. Up to `attempts`
/// independently seeded tries; returns std::nullopt if all fail — failure
/// is a reportable outcome, not an error.
std::optional<Embedding> embed_greedy(const Graph& logical, const HardwareGraph& hardware,
                                      int attempts = kDefaultEmbedAttempts,
                                      std::uint64_t seed = 0);

/// Check that an embedding is usable for a logical graph on this hardware:
/// every logical vertex has a nonempty chain of in-range qubits, chains are
/// pairwise disjoint and connected, and every logical edge has at least one
/// physical edge between its chains. Throws EmbeddingError otherwise.
void validate_embedding(const Embedding& embedding, const Graph& logical,
                        const HardwareGraph& hardware);

/// How the ferromagnetic intra-chain coupling strength is chosen:
///  - utc(prefactor): prefactor * RMS(|J|) * sqrt(mean logical degree);
///  - max: the largest |h| or |J| of the logical model;
///  - fixed(v): exactly v.
/// Every mode returns 1.0 for a coupling-free model (nothing to chain).
struct ChainStrengthMode {
    enum class Kind { Utc, Fixed, Max };

    Kind kind = Kind::Utc;
    double value = kDefaultChainPrefactor;

    static ChainStrengthMode utc(double prefactor = kDefaultChainPrefactor);
    static ChainStrengthMode fixed(double v);
    static ChainStrengthMode max() { return {Kind::Max, 0.0}; }
};

/// Parse/print the compact spelling used in configs and reports:
/// "utc", "utc:<prefactor>", "fixed:<v>", "max".
ChainStrengthMode chain_strength_mode_from_string(const std::string& text);
std::string to_string(const ChainStrengthMode& mode);

double chain_strength(const BinaryModel& model, const ChainStrengthMode& mode);

/// Map a logical SPIN model onto hardware: each field h_i splits equally
/// over chain i's qubits, each coupling J_ij splits equally over the
/// physical edges between chains i and j, and every physical edge inside a
/// chain receives -chain_strength. The offset carries over unchanged.
/// Throws EmbeddingError if the embedding is unusable for this model.
BinaryModel apply_embedding(const BinaryModel& model, const Embedding& embedding,
                            const HardwareGraph& hardware);

/// What to do with reads whose chains disagree internally.
enum class RepairMode { Majority, Discard };

RepairMode repair_mode_from_string(const std::string& text);
std::string to_string(RepairMode mode);

/// Logical reads recovered from physical samples. chain_broken is indexed
/// by physical read; under Discard, broken reads are dropped from configs
/// but still counted there. source_reads maps each kept config back to its
/// physical read index.
struct UnembeddedReads {
    std::vector<std::vector<std::int8_t>> configs;
    std::vector<int> source_reads;
    std::vector<bool> chain_broken;

    /// Fraction of physical reads with every chain intact.
    double chain_rate() const;
};

/// Collapse physical reads to logical ones. Majority repair takes each
/// chain's majority spin (ties resolve to the spin of the chain's
/// lowest-index qubit); Discard drops any read with a broken chain.
/// Breakage is recorded before repair either way. The sample set must be
/// SPIN; chain keys must be exactly 0..num_chains-1.
UnembeddedReads unembed(const SampleSet& samples, const Embedding& embedding, RepairMode mode);

}  // namespace dqmforge
