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

#include "dqmforge/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqmforge {

std::string to_string(Vartype vartype) {
    return vartype == Vartype::BINARY ? "BINARY" : "SPIN";
}

std::string to_string(Encoding encoding) {
    switch (encoding) {
        case Encoding::OneHot: return "one-hot";
        case Encoding::DomainWall: return "domain-wall";
        case Encoding::Raw: return "raw";
    }
    throw std::logic_error("unknown encoding");
}

Vartype vartype_from_string(const std::string& name) {
    if (name == "BINARY") return Vartype::BINARY;
    if (name == "SPIN") return Vartype::SPIN;
    throw std::invalid_argument("vartype must be \"BINARY\" or \"SPIN\", got \"" + name + "\"");
}

Encoding encoding_from_string(const std::string& name) {
    if (name == "one-hot" || name == "onehot") return Encoding::OneHot;
    if (name == "domain-wall" || name == "domainwall") return Encoding::DomainWall;
    if (name == "raw") return Encoding::Raw;
    throw std::invalid_argument("unknown encoding \"" + name + "\"");
}

int EncodingMeta::slots_per_var() const {
    switch (encoding) {
        case Encoding::OneHot: return m;
        case Encoding::DomainWall: return m - 1;
        case Encoding::Raw:
            throw std::invalid_argument("raw meta has no slot layout");
    }
    throw std::logic_error("unknown encoding");
}

namespace {

// Accumulate `value` into `map[key]`, erasing entries that cancel to exactly
// zero so canonical form is maintained.
template <class Map, class Key>
void accumulate(Map& map, const Key& key, double value) {
    auto [it, inserted] = map.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0.0) map.erase(it);
    } else if (value == 0.0) {
        map.erase(it);
    }
}

template <class Map>
double max_abs(const Map& map) {
    double best = 0.0;
    for (const auto& [key, value] : map) best = std::max(best, std::abs(value));
    return best;
}

}  // namespace

DiscreteModel::DiscreteModel(int num_variables, int num_values)
        : n_(num_variables), m_(num_values) {
    if (n_ < 1) throw std::invalid_argument("a discrete model needs at least one variable");
    if (m_ < 2) throw std::invalid_argument("a discrete model needs at least two values per variable");
}

void DiscreteModel::check_variable(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("variable index out of range");
}

void DiscreteModel::check_value(int alpha) const {
    if (alpha < 0 || alpha >= m_) throw std::out_of_range("value index out of range");
}

void DiscreteModel::add_linear(int i, int alpha, double value) {
    check_variable(i);
    check_value(alpha);
    accumulate(linear_, LinearKey{i, alpha}, value);
}

void DiscreteModel::add_quadratic(int i, int j, int alpha, int beta, double value) {
    if (i == j) throw std::invalid_argument("self-interaction (i == j); fold into linear terms instead");
    check_variable(i);
    check_variable(j);
    check_value(alpha);
    check_value(beta);
    if (i > j) {
        std::swap(i, j);
        std::swap(alpha, beta);
    }
    accumulate(quadratic_, QuadraticKey{i, j, alpha, beta}, value);
}

double DiscreteModel::linear(int i, int alpha) const {
    check_variable(i);
    check_value(alpha);
    auto it = linear_.find(LinearKey{i, alpha});
    return it == linear_.end() ? 0.0 : it->second;
}

double DiscreteModel::quadratic(int i, int j, int alpha, int beta) const {
    if (i == j) throw std::invalid_argument("self-interaction (i == j)");
    check_variable(i);
    check_variable(j);
    check_value(alpha);
    check_value(beta);
    if (i > j) {
        std::swap(i, j);
        std::swap(alpha, beta);
    }
    auto it = quadratic_.find(QuadraticKey{i, j, alpha, beta});
    return it == quadratic_.end() ? 0.0 : it->second;
}

double DiscreteModel::max_abs_coefficient() const {
    return std::max(max_abs(linear_), max_abs(quadratic_));
}

BinaryModel::BinaryModel(int num_variables, Vartype vartype)
        : num_variables_(num_variables), vartype_(vartype) {
    if (num_variables_ < 0) throw std::invalid_argument("negative variable count");
}

void BinaryModel::check_variable(int i) const {
    if (i < 0 || i >= num_variables_) throw std::out_of_range("variable index out of range");
}

void BinaryModel::add_linear(int i, double value) {
    check_variable(i);
    accumulate(linear_, i, value);
}

void BinaryModel::add_quadratic(int i, int j, double value) {
    if (i == j) throw std::invalid_argument("self-interaction (i == j); fold into linear terms instead");
    check_variable(i);
    check_variable(j);
    if (i > j) std::swap(i, j);
    accumulate(quadratic_, QuadraticKey{i, j}, value);
}

double BinaryModel::linear(int i) const {
    check_variable(i);
    auto it = linear_.find(i);
    return it == linear_.end() ? 0.0 : it->second;
}

double BinaryModel::quadratic(int i, int j) const {
    if (i == j) throw std::invalid_argument("self-interaction (i == j)");
    check_variable(i);
    check_variable(j);
    if (i > j) std::swap(i, j);
    auto it = quadratic_.find(QuadraticKey{i, j});
    return it == quadratic_.end() ? 0.0 : it->second;
}

double BinaryModel::max_abs_coefficient() const {
    return std::max(max_abs(linear_), max_abs(quadratic_));
}

double dqm_energy(const DiscreteModel& model, const Assignment& assignment) {
    if (static_cast<int>(assignment.size()) != model.num_variables())
        throw std::invalid_argument("assignment length does not match the number of variables");
    for (int value : assignment)
        if (value < 0 || value >= model.num_values())
            throw std::invalid_argument("assignment value out of range");

    double energy = 0.0;
    for (const auto& [key, value] : model.linear_terms())
        if (assignment[key[0]] == key[1]) energy += value;
    for (const auto& [key, value] : model.quadratic_terms())
        if (assignment[key[0]] == key[2] && assignment[key[1]] == key[3]) energy += value;
    return energy;
}

double binary_energy(const BinaryModel& model, std::span<const std::int8_t> config) {
    if (static_cast<int>(config.size()) != model.num_variables())
        throw std::invalid_argument("configuration length does not match the number of variables");
    for (std::int8_t value : config) {
        const bool ok = model.vartype() == Vartype::BINARY ? (value == 0 || value == 1)
                                                           : (value == -1 || value == 1);
        if (!ok) throw std::invalid_argument("configuration value does not match the model vartype");
    }

    double energy = model.offset();
    for (const auto& [i, value] : model.linear_terms()) energy += value * config[i];
    for (const auto& [key, value] : model.quadratic_terms())
        energy += value * config[key.first] * config[key.second];
    return energy;
}

BinaryModel to_spin(const BinaryModel& model) {
    if (model.vartype() == Vartype::SPIN) return model;

    // b = (1 - z) / 2
    BinaryModel spin(model.num_variables(), Vartype::SPIN);
    spin.add_offset(model.offset());
    for (const auto& [i, value] : model.linear_terms()) {
        spin.add_linear(i, -value / 2);
        spin.add_offset(value / 2);
    }
    for (const auto& [key, value] : model.quadratic_terms()) {
        spin.add_quadratic(key.first, key.second, value / 4);
        spin.add_linear(key.first, -value / 4);
        spin.add_linear(key.second, -value / 4);
        spin.add_offset(value / 4);
    }
    if (model.meta()) spin.set_meta(*model.meta());
    return spin;
}

BinaryModel to_binary(const BinaryModel& model) {
    if (model.vartype() == Vartype::BINARY) return model;

    // z = 1 - 2b
    BinaryModel binary(model.num_variables(), Vartype::BINARY);
    binary.add_offset(model.offset());
    for (const auto& [i, value] : model.linear_terms()) {
        binary.add_linear(i, -2 * value);
        binary.add_offset(value);
    }
    for (const auto& [key, value] : model.quadratic_terms()) {
        binary.add_quadratic(key.first, key.second, 4 * value);
        binary.add_linear(key.first, -2 * value);
        binary.add_linear(key.second, -2 * value);
        binary.add_offset(value);
    }
    if (model.meta()) binary.set_meta(*model.meta());
    return binary;
}

std::vector<std::int8_t> config_to_spin(std::span<const std::int8_t> binary_config) {
    std::vector<std::int8_t> spins(binary_config.size());
    for (std::size_t i = 0; i < binary_config.size(); ++i) {
        if (binary_config[i] != 0 && binary_config[i] != 1)
            throw std::invalid_argument("binary configuration values must be 0 or 1");
        spins[i] = static_cast<std::int8_t>(1 - 2 * binary_config[i]);
    }
    return spins;
}

std::vector<std::int8_t> config_to_binary(std::span<const std::int8_t> spin_config) {
    std::vector<std::int8_t> bits(spin_config.size());
    for (std::size_t i = 0; i < spin_config.size(); ++i) {
        if (spin_config[i] != -1 && spin_config[i] != 1)
            throw std::invalid_argument("spin configuration values must be -1 or +1");
        bits[i] = static_cast<std::int8_t>((1 - spin_config[i]) / 2);
    }
    return bits;
}

}  // namespace dqmforge
