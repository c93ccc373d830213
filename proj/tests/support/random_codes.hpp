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

#include <random>
#include <vector>

#include "cqec/linalg_zn.hpp"
#include "cqec/stabilizer_code.hpp"

namespace cqec::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

/// Rows [-z | x] so that (syndrome matrix) * e^T is the syndrome of e.
inline IntMatrix syndrome_matrix(const IntMatrix& rows, Eigen::Index n) {
    IntMatrix m(rows.rows(), 2 * n);
    m.leftCols(n) = -rows.rightCols(n);
    m.rightCols(n) = rows.leftCols(n);
    return m;
}

/// A random valid code over GF(p) with `r` generators: each new row is a
/// random element of the centralizer of the rows so far, kept only if it
/// raises the rank.
inline StabilizerCode random_prime_code(std::mt19937_64& rng, std::int64_t p, Eigen::Index n, Eigen::Index r) {
    std::uniform_int_distribution<long> coeff(0, p - 1);
    IntMatrix rows(0, 2 * n);
    while (rows.rows() < r) {
        std::vector<IntVector> basis;
        if (rows.rows() == 0) {
            for (Eigen::Index j = 0; j < 2 * n; ++j) {
                IntVector e = IntVector::Zero(2 * n);
                e(j) = 1;
                basis.push_back(e);
            }
        } else {
            basis = kernel_mod_q(syndrome_matrix(rows, n), p);
        }
        IntVector v = IntVector::Zero(2 * n);
        for (const IntVector& b : basis) v += b * Integer(coeff(rng));
        v = v.unaryExpr([p](const Integer& a) { return mod_floor(a, Integer(static_cast<long>(p))); });
        IntMatrix candidate(rows.rows() + 1, 2 * n);
        candidate.topRows(rows.rows()) = rows;
        candidate.row(rows.rows()) = v;
        if (rank_mod_p(candidate, p) == candidate.rows()) rows = candidate;
    }
    return StabilizerCode(n, Modulus::finite(p), rows, p);
}

inline StabilizerCode random_prime_code(std::mt19937_64& rng, std::int64_t p, Eigen::Index n) {
    std::uniform_int_distribution<Eigen::Index> count(1, n);
    return random_prime_code(rng, p, n, count(rng));
}

}  // namespace cqec::testing
