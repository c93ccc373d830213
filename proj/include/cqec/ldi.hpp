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

// Local-dimension-invariant (LDI) codes: generator sets that are
// symplectically orthogonal over the integers, and therefore define a
// stabilizer code for every local dimension.

#include <cstdint>
#include <optional>
#include <string>

#include "cqec/integer.hpp"
#include "cqec/stabilizer_code.hpp"

namespace cqec {

/// An integer generator matrix together with the prime it was derived from.
/// The constructor does not check orthogonality; ldi_metrics() does.
class LdiCode {
   public:
    LdiCode(StabilizerCode inner, std::int64_t origin_prime);

    const StabilizerCode& inner() const { return inner_; }
    std::int64_t origin_prime() const { return origin_prime_; }
    Eigen::Index n() const { return inner_.n(); }
    const IntMatrix& generators() const { return inner_.generators(); }
    /// Largest absolute entry, B.
    const Integer& max_entry() const { return max_entry_; }

   private:
    StabilizerCode inner_;
    std::int64_t origin_prime_;
    Integer max_entry_;
};

/// Lower-triangular correction in the canonical frame: for every pair of
/// pivots j < i < r, adds to Z1(i, j) the value that cancels the integer
/// symplectic product of rows i and j. All corrections are computed from the
/// input matrix and applied at once.
IntMatrix ldi_correct(const IntMatrix& canonical, Eigen::Index rank);

/// How much the product of (row i, row j) moves when Z1(i, j) grows by one,
/// measured once on a synthetic pair. Either +1 or -1.
int ldi_correction_shift();

/// Canonicalizes a prime-field code, applies the correction and maps the
/// result back to the original registers. Throws std::logic_error if the
/// result is not exactly orthogonal over Z.
LdiCode to_ldi(const StabilizerCode& code);

struct LdiMetrics {
    Integer max_entry;
    bool is_ldi;
};

LdiMetrics ldi_metrics(const LdiCode& code);

/// True iff every pair of rows is orthogonal over the integers.
bool is_exactly_orthogonal(const IntMatrix& generators);

enum class DistanceCondition {
    PrimeFactorsOfQuotientExceedB,  // q | Q and every prime factor of Q/q > B
    PrimeFactorsExceedCutoff,       // every prime factor of Q > p*
    Unknown,
};

std::string to_string(DistanceCondition c);

/// Sufficient conditions under which instantiating at Q keeps the distance.
/// The comparison with B is strict.
DistanceCondition check_distance_condition(const LdiCode& code, std::int64_t q,
                                           std::optional<std::int64_t> p_star = std::nullopt);

/// Entries reduced into [0, Q); generator count unchanged. The claimed
/// distance is kept only at Q = origin or when a distance condition holds.
StabilizerCode instantiate(const LdiCode& code, std::int64_t q);

/// Entries multiplied by m, held in Z_{mQ} (the multiples of m inside it).
StabilizerCode scale_by_m(const LdiCode& code, std::int64_t m, std::int64_t q);

}  // namespace cqec
