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
#include <random>
#include <stdexcept>
#include <vector>

namespace dqmforge {

/// SplitMix64 finalizer. Used to derive well-separated substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive the seed for substream `stream` of a master seed. Used so that
/// e.g. read r of an anneal, or instance i of a benchmark, gets its own
/// independent, reproducible generator.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x51ed270b2f6c87ULL));
}

/// Seeded generator with hand-rolled value mappings.
///
/// std::mt19937_64's output sequence is pinned by the standard, but the
/// std::*_distribution mappings are not; rolling our own keeps every drawn
/// value identical across standard libraries and platforms.
class Rng {
 public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi], inclusive, bias-free by rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(gen_());  // full range
        const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - span) % span;
        std::uint64_t draw;
        do {
            draw = gen_();
        } while (limit != 0 && draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    /// Fair coin as a spin value, -1 or +1.
    std::int8_t spin() { return (gen_() >> 63) ? std::int8_t{1} : std::int8_t{-1}; }

    /// Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(values[i - 1], values[j]);
        }
    }

 private:
    std::mt19937_64 gen_;
};

}  // namespace dqmforge
