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

#include "dqmforge/embed.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "dqmforge/detail/format.hpp"
#include "dqmforge/exceptions.hpp"
#include "dqmforge/random.hpp"

namespace dqmforge {

void HardwareGraph::validate() const {
    if (num_qubits < 1) throw std::invalid_argument("hardware graph: need at least one qubit");
    std::pair<int, int> prev{-1, -1};
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits)
            throw std::invalid_argument("hardware graph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("hardware graph: self-loop");
        if (a > b) throw std::invalid_argument("hardware graph: edge not in (a < b) form");
        if (std::pair{a, b} <= prev)
            throw std::invalid_argument("hardware graph: edges not sorted and unique");
        prev = {a, b};
    }
}

std::vector<std::vector<int>> HardwareGraph::adjacency() const {
    std::vector<std::vector<int>> adjacent(num_qubits);
    for (const auto& [a, b] : edges) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
    }
    return adjacent;
}

HardwareGraph gen_chimera(int rows, int cols, int shore) {
    if (rows < 1 || cols < 1 || shore < 1)
        throw std::invalid_argument("gen_chimera: rows, cols and shore must all be positive");

    const auto index = [cols, shore](int r, int c, int u, int k) {
        return ((r * cols) + c) * 2 * shore + u * shore + k;
    };

    HardwareGraph hardware;
    hardware.num_qubits = rows * cols * 2 * shore;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            for (int k = 0; k < shore; ++k) {
                for (int k2 = 0; k2 < shore; ++k2)
                    hardware.edges.emplace_back(index(r, c, 0, k), index(r, c, 1, k2));
                if (r + 1 < rows)
                    hardware.edges.emplace_back(index(r, c, 0, k), index(r + 1, c, 0, k));
                if (c + 1 < cols)
                    hardware.edges.emplace_back(index(r, c, 1, k), index(r, c + 1, 1, k));
            }
        }
    }
    for (auto& [a, b] : hardware.edges)
        if (a > b) std::swap(a, b);
    std::sort(hardware.edges.begin(), hardware.edges.end());
    hardware.validate();
    return hardware;
}

Graph interaction_graph(const BinaryModel& model) {
    Graph graph{model.num_variables(), {}};
    for (const auto& [key, value] : model.quadratic_terms())
        graph.edges.emplace_back(key.first, key.second);
    return graph;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// BFS distances to a chain through free qubits. Chain qubits get 0; every
// other reachable *free* qubit gets hops-to-the-chain. Qubits owned by
// `terminal_owner` also receive a distance (so an existing chain can serve
// as the start of a new arm) but are never expanded through.
std::vector<int> chain_distances(const std::vector<int>& chain,
                                 const std::vector<std::vector<int>>& adjacent,
                                 const std::vector<int>& owner, int terminal_owner) {
    std::vector<int> dist(adjacent.size(), kUnreached);
    std::deque<int> frontier;
    for (int q : chain) {
        dist[q] = 0;
        frontier.push_back(q);
    }
    while (!frontier.empty()) {
        const int q = frontier.front();
        frontier.pop_front();
        for (int next : adjacent[q]) {
            if (dist[next] != kUnreached) continue;
            if (owner[next] == -1) {
                dist[next] = dist[q] + 1;
                frontier.push_back(next);
            } else if (owner[next] == terminal_owner) {
                dist[next] = dist[q] + 1;
            }
        }
    }
    return dist;
}

// One seeded embedding attempt; empty optional on dead ends.
std::optional<std::map<int, std::vector<int>>> try_embed(
        const Graph& logical, const std::vector<std::vector<int>>& adjacent, Rng& rng) {
    const int num_qubits = static_cast<int>(adjacent.size());

    std::vector<std::vector<int>> logical_adjacent(logical.q);
    for (const auto& [i, j] : logical.edges) {
        logical_adjacent[i].push_back(j);
        logical_adjacent[j].push_back(i);
    }

    std::vector<int> order(logical.q);
    for (int v = 0; v < logical.q; ++v) order[v] = v;
    rng.shuffle(order);

    std::vector<int> owner(num_qubits, -1);
    std::map<int, std::vector<int>> chains;

    for (const int v : order) {
        std::vector<const std::vector<int>*> placed;
        for (int u : logical_adjacent[v])
            if (auto it = chains.find(u); it != chains.end()) placed.push_back(&it->second);

        std::vector<std::vector<int>> distances;
        distances.reserve(placed.size());
        for (const auto* chain : placed)
            distances.push_back(chain_distances(*chain, adjacent, owner, v));

        // Root: free qubit reaching the most placed neighbor chains, tie-broken
        // by the smallest summed distance to the reachable ones, then uniformly
        // at random. Chains the root cannot reach get a second chance below,
        // once the grown arms open paths from other parts of the new chain.
        std::size_t best_count = 0;
        long long best_total = std::numeric_limits<long long>::max();
        int root = -1;
        int num_ties = 0;
        for (int q = 0; q < num_qubits; ++q) {
            if (owner[q] != -1) continue;
            std::size_t count = 0;
            long long total = 0;
            for (const auto& dist : distances) {
                if (dist[q] == kUnreached) continue;
                ++count;
                total += dist[q];
            }
            if (root != -1 &&
                (count < best_count || (count == best_count && total > best_total)))
                continue;
            if (root == -1 || count > best_count || total < best_total) {
                best_count = count;
                best_total = total;
                root = q;
                num_ties = 1;
            } else if (rng.uniform_int(0, num_ties++) == 0) {
                root = q;
            }
        }
        if (root == -1) return std::nullopt;  // no free qubit left

        std::vector<int>& chain = chains[v];
        chain.push_back(root);
        owner[root] = v;

        // Grow toward each placed neighbor chain along a shortest path,
        // claiming the free qubits on the way: nearest chains first. Distances
        // are re-measured before each arm so it can start from whichever qubit
        // the chain owns by then -- earlier arms may have opened routes the
        // root itself never had.
        std::vector<std::size_t> arm_order(placed.size());
        for (std::size_t i = 0; i < arm_order.size(); ++i) arm_order[i] = i;
        std::sort(arm_order.begin(), arm_order.end(), [&](std::size_t a, std::size_t b) {
            return distances[a][root] < distances[b][root];
        });
        for (const std::size_t target : arm_order) {
            const auto dist = chain_distances(*placed[target], adjacent, owner, v);
            int at = chain.front();
            for (int q : chain)
                if (dist[q] < dist[at]) at = q;
            if (dist[at] == kUnreached) return std::nullopt;  // neighbor chain walled off
            while (dist[at] > 1) {
                int step = -1;
                int num_steps = 0;
                for (int next : adjacent[at])
                    if ((owner[next] == -1 || owner[next] == v) && dist[next] == dist[at] - 1 &&
                        rng.uniform_int(0, num_steps++) == 0)
                        step = next;
                if (step == -1) return std::nullopt;  // path got claimed mid-walk
                if (owner[step] == -1) {
                    owner[step] = v;
                    chain.push_back(step);
                }
                at = step;
            }
        }
    }
    return chains;
}

}  // namespace

std::optional<Embedding> embed_greedy(const Graph& logical, const HardwareGraph& hardware,
                                      int attempts, std::uint64_t seed) {
    logical.validate();
    hardware.validate();
    if (logical.q < 1) throw std::invalid_argument("embed_greedy: empty logical graph");
    if (attempts < 1) throw std::invalid_argument("embed_greedy: attempts must be at least 1");

    const auto adjacent = hardware.adjacency();
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(attempt)));
        if (auto chains = try_embed(logical, adjacent, rng)) {
            Embedding embedding{std::move(*chains), 1.0};
            validate_embedding(embedding, logical, hardware);
            return embedding;
        }
    }
    return std::nullopt;
}

void validate_embedding(const Embedding& embedding, const Graph& logical,
                        const HardwareGraph& hardware) {
    std::vector<int> owner(hardware.num_qubits, -1);
    for (int v = 0; v < logical.q; ++v) {
        const auto it = embedding.chains.find(v);
        if (it == embedding.chains.end() || it->second.empty())
            throw EmbeddingError("no chain for logical variable " + std::to_string(v));
        for (int q : it->second) {
            if (q < 0 || q >= hardware.num_qubits)
                throw EmbeddingError("chain of variable " + std::to_string(v) +
                                     " uses qubit " + std::to_string(q) + " outside the hardware");
            if (owner[q] != -1)
                throw EmbeddingError("qubit " + std::to_string(q) + " is claimed by chains " +
                                     std::to_string(owner[q]) + " and " + std::to_string(v));
            owner[q] = v;
        }
    }
    for (const auto& [v, chain] : embedding.chains)
        if (v < 0 || v >= logical.q)
            throw EmbeddingError("chain for unknown logical variable " + std::to_string(v));

    const auto adjacent = hardware.adjacency();
    for (const auto& [v, chain] : embedding.chains) {
        // connectivity by BFS within the chain
        std::vector<int> seen;
        std::deque<int> frontier{chain.front()};
        std::vector<bool> visited(hardware.num_qubits, false);
        visited[chain.front()] = true;
        while (!frontier.empty()) {
            const int q = frontier.front();
            frontier.pop_front();
            seen.push_back(q);
            for (int next : adjacent[q])
                if (!visited[next] && owner[next] == v) {
                    visited[next] = true;
                    frontier.push_back(next);
                }
        }
        if (seen.size() != chain.size())
            throw EmbeddingError("chain of variable " + std::to_string(v) + " is disconnected");
    }

    for (const auto& [i, j] : logical.edges) {
        bool coupled = false;
        for (int q : embedding.chains.at(i)) {
            for (int next : adjacent[q])
                if (owner[next] == j) {
                    coupled = true;
                    break;
                }
            if (coupled) break;
        }
        if (!coupled)
            throw EmbeddingError("no physical edge between the chains of logical variables " +
                                 std::to_string(i) + " and " + std::to_string(j));
    }
}

ChainStrengthMode ChainStrengthMode::utc(double prefactor) {
    if (!(prefactor > 0.0)) throw std::invalid_argument("chain prefactor must be positive");
    return {Kind::Utc, prefactor};
}

ChainStrengthMode ChainStrengthMode::fixed(double v) {
    if (!(v > 0.0)) throw std::invalid_argument("fixed chain strength must be positive");
    return {Kind::Fixed, v};
}

ChainStrengthMode chain_strength_mode_from_string(const std::string& text) {
    if (text == "utc") return ChainStrengthMode::utc();
    if (text == "max") return ChainStrengthMode::max();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        double value = 0.0;
        try {
            value = std::stod(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("chain strength mode \"" + text + "\": malformed number");
        }
        try {
            if (kind == "utc") return ChainStrengthMode::utc(value);
            if (kind == "fixed") return ChainStrengthMode::fixed(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("chain strength mode \"" + text + "\": " + e.what());
        }
    }
    throw ConfigError(
            "chain strength mode must be \"utc[:<prefactor>]\", \"fixed:<v>\" or \"max\", got \"" +
            text + "\"");
}

std::string to_string(const ChainStrengthMode& mode) {
    switch (mode.kind) {
        case ChainStrengthMode::Kind::Utc: return "utc:" + detail::format_double(mode.value);
        case ChainStrengthMode::Kind::Fixed: return "fixed:" + detail::format_double(mode.value);
        case ChainStrengthMode::Kind::Max: return "max";
    }
    throw std::logic_error("unknown chain strength mode");
}

double chain_strength(const BinaryModel& model, const ChainStrengthMode& mode) {
    const auto& couplings = model.quadratic_terms();
    if (couplings.empty()) return 1.0;

    switch (mode.kind) {
        case ChainStrengthMode::Kind::Fixed:
            return mode.value;
        case ChainStrengthMode::Kind::Max:
            return model.max_abs_coefficient();
        case ChainStrengthMode::Kind::Utc: {
            double sum_squares = 0.0;
            for (const auto& [key, value] : couplings) sum_squares += value * value;
            const double rms = std::sqrt(sum_squares / static_cast<double>(couplings.size()));
            const double mean_degree = 2.0 * static_cast<double>(couplings.size()) /
                                       static_cast<double>(model.num_variables());
            return mode.value * rms * std::sqrt(mean_degree);
        }
    }
    throw std::logic_error("unknown chain strength mode");
}

BinaryModel apply_embedding(const BinaryModel& model, const Embedding& embedding,
                            const HardwareGraph& hardware) {
    if (model.vartype() != Vartype::SPIN)
        throw std::invalid_argument("apply_embedding expects a SPIN model; convert with to_spin");
    validate_embedding(embedding, interaction_graph(model), hardware);

    std::vector<int> owner(hardware.num_qubits, -1);
    for (const auto& [v, chain] : embedding.chains)
        for (int q : chain) owner[q] = v;

    BinaryModel physical(hardware.num_qubits, Vartype::SPIN);
    physical.add_offset(model.offset());

    for (const auto& [i, value] : model.linear_terms()) {
        const auto& chain = embedding.chains.at(i);
        for (int q : chain) physical.add_linear(q, value / static_cast<double>(chain.size()));
    }

    const auto adjacent = hardware.adjacency();
    for (const auto& [key, value] : model.quadratic_terms()) {
        std::vector<std::pair<int, int>> bridge;
        for (int q : embedding.chains.at(key.first))
            for (int next : adjacent[q])
                if (owner[next] == key.second) bridge.emplace_back(q, next);
        for (const auto& [a, b] : bridge)
            physical.add_quadratic(a, b, value / static_cast<double>(bridge.size()));
    }

    for (const auto& [v, chain] : embedding.chains)
        for (int q : chain)
            for (int next : adjacent[q])
                if (owner[next] == v && q < next)
                    physical.add_quadratic(q, next, -embedding.chain_strength);

    return physical;
}

RepairMode repair_mode_from_string(const std::string& text) {
    if (text == "majority") return RepairMode::Majority;
    if (text == "discard") return RepairMode::Discard;
    throw ConfigError("repair mode must be \"majority\" or \"discard\", got \"" + text + "\"");
}

std::string to_string(RepairMode mode) {
    return mode == RepairMode::Majority ? "majority" : "discard";
}

double UnembeddedReads::chain_rate() const {
    if (chain_broken.empty()) return 1.0;
    std::size_t intact = 0;
    for (const bool broken : chain_broken)
        if (!broken) ++intact;
    return static_cast<double>(intact) / static_cast<double>(chain_broken.size());
}

UnembeddedReads unembed(const SampleSet& samples, const Embedding& embedding, RepairMode mode) {
    if (samples.vartype() != Vartype::SPIN)
        throw std::invalid_argument("unembed expects SPIN samples");
    const int num_logical = static_cast<int>(embedding.chains.size());
    for (int v = 0; v < num_logical; ++v)
        if (auto it = embedding.chains.find(v); it == embedding.chains.end() || it->second.empty())
            throw std::invalid_argument("chains must cover logical variables 0.." +
                                        std::to_string(num_logical - 1) + " and be nonempty");

    const std::size_t width = samples.reads().front().config.size();
    for (const auto& [v, chain] : embedding.chains)
        for (int q : chain)
            if (q < 0 || static_cast<std::size_t>(q) >= width)
                throw std::invalid_argument("chain qubit index outside the sampled configuration");

    UnembeddedReads result;
    result.chain_broken.resize(samples.num_reads());

    for (int r = 0; r < samples.num_reads(); ++r) {
        const auto& config = samples.reads()[r].config;
        std::vector<std::int8_t> logical(num_logical);
        bool broken = false;
        for (const auto& [v, chain] : embedding.chains) {
            int sum = 0;
            int anchor = chain.front();
            for (int q : chain) {
                sum += config[q];
                anchor = std::min(anchor, q);
            }
            if (std::abs(sum) != static_cast<int>(chain.size())) broken = true;
            // majority vote; an exact tie defers to the lowest-index qubit
            logical[v] = sum > 0 ? std::int8_t{1}
                       : sum < 0 ? std::int8_t{-1}
                                 : config[anchor];
        }
        result.chain_broken[r] = broken;
        if (broken && mode == RepairMode::Discard) continue;
        result.configs.push_back(std::move(logical));
        result.source_reads.push_back(r);
    }
    return result;
}

}  // namespace dqmforge
