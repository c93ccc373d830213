// Copyright 2026 The cqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqec/integer.hpp"
#include "cqec/ring_symplectic.hpp"
#include "cqec/stabilizer_code.hpp"

namespace cqec {

/// Generator rows of `code` read in Z_Q. Unbounded codes are reduced; a
/// finite code must already live in Z_Q.
IntMatrix generators_over(const StabilizerCode& code, std::int64_t q);

struct LogicalDimension {
    Integer K;  // size of the logical space, Q^n / |S|
    double k;   // log_Q K
};

/// Throws InvalidCodeError if the generators do not commute mod Q.
LogicalDimension logical_dimension(const StabilizerCode& code, std::int64_t q);

/// log_Q of a positive integer, accurate for values far beyond 2^64.
double log_base(const Integer& value, std::int64_t q);

struct LogicalOperator {
    PauliVec op;
    std::int64_t order;  // additive order in the centralizer modulo the stabilizer group
};

/// Generators of the centralizer of the stabilizer group modulo the group
/// itself, split into prime-power orders. The orders multiply to K^2.
std::vector<LogicalOperator> logical_operators(const StabilizerCode& code, std::int64_t q);

struct DistanceOptions {
    /// Worker threads for the support-set partition; 0 picks hardware concurrency.
    unsigned jobs = 1;
    /// Largest number of candidate errors the search may visit.
    double budget = 2e9;
};

struct DistanceResult {
    /// Smallest weight of an undetectable non-member error, when one was found.
    std::optional<std::int64_t> distance;
    /// Every weight up to this one was searched exhaustively.
    std::int64_t searched_up_to = 0;
    /// First undetectable error of weight `distance` in enumeration order.
    std::optional<PauliVec> witness;
    bool budget_exhausted = false;
};

/// Exhaustive search by increasing weight: supports in lexicographic order,
/// then (x, z) power pairs in lexicographic order, (0, 0) skipped.
DistanceResult brute_force_distance(const StabilizerCode& code, std::int64_t q, std::int64_t max_weight,
                                    const DistanceOptions& options = {});

/// Number of candidates a search up to `max_weight` visits: sum_w C(n,w) (Q^2-1)^w.
double distance_search_cost(Eigen::Index n, std::int64_t q, std::int64_t max_weight);

enum class ErrorClass {
    Unavoidable,  // integer syndrome exactly zero
    Artifact,     // integer syndrome nonzero, zero mod Q
};

std::string to_string(ErrorClass c);

struct UndetectableError {
    PauliVec error;  // the integer lift that was classified
    Eigen::Index weight;
    ErrorClass classification;
    IntVector integer_syndrome;
};

/// Classifies an undetectable error by its syndrome over Z, computed from
/// the code's stored integer generators and the given lift of `error`.
/// Throws std::invalid_argument if the error is detectable mod Q or is a
/// member of the stabilizer group.
UndetectableError classify_undetectable(const StabilizerCode& code, const PauliVec& error, std::int64_t q);

/// Size of the generated group by breadth-first closure mod Q.
/// Throws std::length_error when it would exceed `budget`.
Integer brute_force_group_order(const StabilizerCode& code, std::int64_t q, std::size_t budget);

struct CodeReport {
    Integer K;
    double k;
    std::vector<std::int64_t> generator_orders;
    std::vector<LogicalOperator> logical_generators;
    std::optional<DistanceResult> distance;
};

/// Everything the `info` command prints; the distance search runs only when
/// `max_weight` is given.
CodeReport analyze(const StabilizerCode& code, std::int64_t q, std::optional<std::int64_t> max_weight = std::nullopt,
                   const DistanceOptions& options = {});

}  // namespace cqec
