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

// Exact linear algebra over Z and Z_Q: Smith normal form and everything
// that reads off it (subgroup orders, membership, kernels, quotients), plus
// rank over prime fields.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "cqec/integer.hpp"

namespace cqec {

/// U * M * V == D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
/// V_inverse is carried along so callers can change lattice bases without
/// inverting V themselves.
struct SnfDecomposition {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
    IntMatrix V_inverse;

    Eigen::Index diagonal_size() const { return std::min(D.rows(), D.cols()); }
    /// Diagonal entries d_0 .. d_{min(rows, cols) - 1}, zeros included.
    std::vector<Integer> invariant_factors() const;
    /// Number of nonzero invariant factors.
    Eigen::Index rank() const;
};

/// Pivot: nonzero entry of least absolute value, ties to the lowest (row, col).
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Residue of an integer-like scalar in [0, p).
inline std::int64_t residue(const Integer& v, std::int64_t p) {
    return to_int64(mod_floor(v, Integer(static_cast<long>(p))));
}
template <typename T>
    requires std::is_integral_v<T>
std::int64_t residue(T v, std::int64_t p) {
    return mod_floor(static_cast<std::int64_t>(v), p);
}

/// Rank over GF(p) of a matrix reduced mod p. Throws if p is not prime.
std::int64_t rank_mod_p(const WordMatrix& reduced, std::int64_t p);

template <typename Derived>
std::int64_t rank_mod_p(const Eigen::MatrixBase<Derived>& m, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not prime");
    WordMatrix reduced(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) reduced(i, j) = residue(m(i, j), p);
    return rank_mod_p(reduced, p);
}

/// Order of the subgroup of (Z_Q)^cols generated by the rows of `rows`:
/// prod_i Q / gcd(d_i, Q) over the invariant factors, a zero d_i adding nothing.
Integer subgroup_order(const IntMatrix& rows, std::int64_t q);

/// Solves c * M == v (mod Q) in invariant-factor coordinates. One SNF per
/// matrix; each query is a vector-matrix product mod Q.
class RowSpanSolver {
   public:
    RowSpanSolver(const IntMatrix& rows, std::int64_t q);

    std::int64_t modulus() const { return q_; }
    Eigen::Index cols() const { return cols_; }

    bool contains(const WordVector& v) const;
    bool contains(const IntVector& v) const;
    /// Coefficients c with c * M == v (mod Q), entries in [0, Q).
    std::optional<IntVector> witness(const IntVector& v) const;

   private:
    WordVector transformed(const WordVector& v) const;
    WordVector reduce(const IntVector& v) const;

    std::int64_t q_;
    Eigen::Index rows_;
    Eigen::Index cols_;
    WordMatrix v_mod_q_;             // cols x cols
    std::vector<std::int64_t> gcds_;  // gcd(d_i, Q) per column, Q past the diagonal
    std::vector<Integer> diag_;
    IntMatrix u_;
};

/// True iff some integer c has c * M == v (mod Q). Throws on dimension mismatch.
bool membership(const IntVector& v, const IntMatrix& rows, std::int64_t q);
std::optional<IntVector> membership_witness(const IntVector& v, const IntMatrix& rows, std::int64_t q);

/// Generators (as row vectors, entries in [0, Q)) of {x : M x == 0 mod Q}.
/// Zero generators are dropped, so the zero module yields an empty list.
std::vector<IntVector> kernel_mod_q(const IntMatrix& m, std::int64_t q);

/// A generator of a finite cyclic factor together with its order.
struct CyclicGenerator {
    IntVector generator;
    std::int64_t order;
};

/// Invariant-factor decomposition of span(larger)/span(smaller) inside
/// (Z_Q)^cols. Requires span(smaller) within span(larger); throws otherwise.
/// Only factors of order > 1 are returned; their orders multiply to the
/// index of the two subgroups.
std::vector<CyclicGenerator> quotient_generators(const IntMatrix& larger, const IntMatrix& smaller,
                                                 std::int64_t q);

/// Stacks a list of equal-length row vectors.
IntMatrix stack_rows(const std::vector<IntVector>& rows, Eigen::Index cols);

namespace oracle {

/// Elements of the subgroup generated by the rows, by breadth-first closure
/// under addition mod Q. Throws std::length_error past `budget` elements.
std::vector<WordVector> subgroup_elements(const IntMatrix& rows, std::int64_t q, std::size_t budget);

/// Every x in (Z_Q)^cols with M x == 0 mod Q, by exhaustive enumeration.
std::vector<WordVector> kernel_elements(const IntMatrix& m, std::int64_t q, std::size_t budget);

}  // namespace oracle

}  // namespace cqec
