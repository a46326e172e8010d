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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dqmforge {

enum class Vartype {
    BINARY,  ///< variables in {0, 1}
    SPIN     ///< variables in {-1, +1}
};

enum class Encoding { OneHot, DomainWall, Raw };

std::string to_string(Vartype vartype);
std::string to_string(Encoding encoding);
Vartype vartype_from_string(const std::string& name);
Encoding encoding_from_string(const std::string& name);

/// An assignment of one value in [0, m) to each of the n discrete variables.
using Assignment = std::vector<int>;

/// Provenance a binary model keeps about the discrete model it encodes.
///
/// Binary variables are laid out in variable-major order: discrete variable i
/// owns the contiguous slots [i*slots_per_var(), (i+1)*slots_per_var()).
struct EncodingMeta {
    Encoding encoding = Encoding::Raw;
    int n = 0;                      ///< discrete variables
    int m = 0;                      ///< values per variable
    double penalty_strength = 0.0;  ///< resolved constraint penalty

    int slots_per_var() const;      ///< m for one-hot, m-1 for domain-wall
    int num_binary_vars() const { return n * slots_per_var(); }
    int var(int i, int slot) const { return i * slots_per_var() + slot; }
};

/// A discrete quadratic model: n variables, each taking one of m consecutive
/// integer values 0..m-1, with energy
///
///     E(d) = sum_i L(i, d_i) + sum_{i<j} Q(i, j, d_i, d_j).
///
/// Storage is canonical: quadratic keys hold i < j, coefficients accumulate,
/// and entries that accumulate to exactly zero are erased, so structurally
/// equal models compare equal term-by-term.
class DiscreteModel {
 public:
    using LinearKey = std::array<int, 2>;     ///< {i, alpha}
    using QuadraticKey = std::array<int, 4>;  ///< {i, j, alpha, beta} with i < j

    DiscreteModel(int num_variables, int num_values);

    int num_variables() const { return n_; }
    int num_values() const { return m_; }

    /// Accumulate into L(i, alpha). Throws std::out_of_range on bad indices.
    void add_linear(int i, int alpha, double value);

    /// Accumulate into Q(i, j, alpha, beta), canonicalized to i < j.
    /// Throws std::invalid_argument if i == j (self-interactions must be
    /// folded into linear terms by the caller) and std::out_of_range on bad
    /// indices.
    void add_quadratic(int i, int j, int alpha, int beta, double value);

    double linear(int i, int alpha) const;
    double quadratic(int i, int j, int alpha, int beta) const;

    const std::map<LinearKey, double>& linear_terms() const { return linear_; }
    const std::map<QuadraticKey, double>& quadratic_terms() const { return quadratic_; }

    /// Largest |coefficient| over all stored terms; 0 for an all-zero model.
    double max_abs_coefficient() const;

    friend bool operator==(const DiscreteModel&, const DiscreteModel&) = default;

 private:
    void check_variable(int i) const;
    void check_value(int alpha) const;

    int n_;
    int m_;
    std::map<LinearKey, double> linear_;
    std::map<QuadraticKey, double> quadratic_;
};

/// A binary quadratic model over {0,1} or {-1,+1} variables:
///
///     E(x) = offset + sum_i h(i) x_i + sum_{i<j} J(i, j) x_i x_j.
///
/// Canonical storage as in DiscreteModel. A model produced by an encoder
/// carries EncodingMeta describing how to decode configurations back to
/// discrete assignments.
class BinaryModel {
 public:
    using QuadraticKey = std::pair<int, int>;  ///< (i, j) with i < j

    BinaryModel(int num_variables, Vartype vartype);

    int num_variables() const { return num_variables_; }
    Vartype vartype() const { return vartype_; }

    double offset() const { return offset_; }
    void add_offset(double value) { offset_ += value; }

    void add_linear(int i, double value);
    void add_quadratic(int i, int j, double value);

    double linear(int i) const;
    double quadratic(int i, int j) const;

    const std::map<int, double>& linear_terms() const { return linear_; }
    const std::map<QuadraticKey, double>& quadratic_terms() const { return quadratic_; }

    const std::optional<EncodingMeta>& meta() const { return meta_; }
    void set_meta(EncodingMeta meta) { meta_ = std::move(meta); }

    double max_abs_coefficient() const;

 private:
    void check_variable(int i) const;

    int num_variables_;
    Vartype vartype_;
    double offset_ = 0.0;
    std::map<int, double> linear_;
    std::map<QuadraticKey, double> quadratic_;
    std::optional<EncodingMeta> meta_;
};

/// Energy of a discrete assignment. Throws std::invalid_argument on length
/// or range mismatch.
double dqm_energy(const DiscreteModel& model, const Assignment& assignment);

/// Energy of a binary/spin configuration. Values must match the model's
/// vartype ({0,1} or {-1,+1}); throws std::invalid_argument otherwise.
double binary_energy(const BinaryModel& model, std::span<const std::int8_t> config);

/// Exact change of variables b = (1 - z) / 2 (BINARY -> SPIN) and
/// z = 1 - 2b (SPIN -> BINARY). Energies are preserved configuration by
/// configuration; the offset absorbs the constant part. Meta is preserved.
BinaryModel to_spin(const BinaryModel& model);
BinaryModel to_binary(const BinaryModel& model);

/// Map a configuration between the two variable domains, index by index.
std::vector<std::int8_t> config_to_spin(std::span<const std::int8_t> binary_config);
std::vector<std::int8_t> config_to_binary(std::span<const std::int8_t> spin_config);

}  // namespace dqmforge
