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

#include "cqec/ldi.hpp"

#include <stdexcept>

#include "cqec/ring_symplectic.hpp"

namespace cqec {

namespace {

Integer max_abs_entry(const IntMatrix& m) {
    Integer best = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (abs(m(i, j)) > best) best = abs(m(i, j));
    return best;
}

}  // namespace

LdiCode::LdiCode(StabilizerCode inner, std::int64_t origin_prime)
    : inner_(std::move(inner)), origin_prime_(origin_prime) {
    if (!inner_.modulus().is_unbounded()) throw std::invalid_argument("LdiCode: generators must be over Z");
    if (!is_prime(origin_prime_)) {
        throw std::invalid_argument("LdiCode: origin " + std::to_string(origin_prime_) + " is not prime");
    }
    inner_ = inner_.with_origin_prime(origin_prime_);
    max_entry_ = max_abs_entry(inner_.generators());
}

int ldi_correction_shift() {
    static const int shift = [] {
        // Row j pivots on register 0, row i on register 1; bump Z1(i, j).
        IntVector row_j(4), row_i(4);
        row_j << 1, 0, 0, 0;
        row_i << 0, 1, 0, 0;
        const Integer before = symplectic_form(row_i, row_j);
        row_i(2) += 1;
        const Integer delta = symplectic_form(row_i, row_j) - before;
        if (delta != 1 && delta != -1) throw std::logic_error("ldi_correction_shift: unexpected delta");
        return static_cast<int>(delta.get_si());
    }();
    return shift;
}

bool is_exactly_orthogonal(const IntMatrix& generators) {
    for (Eigen::Index i = 0; i < generators.rows(); ++i)
        for (Eigen::Index j = i + 1; j < generators.rows(); ++j)
            if (symplectic_form(generators.row(i), generators.row(j)) != 0) return false;
    return true;
}

IntMatrix ldi_correct(const IntMatrix& canonical, Eigen::Index rank) {
    const Eigen::Index n = canonical.cols() / 2;
    const int shift = ldi_correction_shift();
    IntMatrix corrected = canonical;
    for (Eigen::Index i = 0; i < rank; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            const Integer product = symplectic_form(canonical.row(i), canonical.row(j));
            corrected(i, n + j) -= product * shift;
        }
    }
    return corrected;
}

LdiCode to_ldi(const StabilizerCode& code) {
    const CanonicalForm canon = canonical_form(code);
    const std::int64_t q = code.modulus().value();
    const IntMatrix& canonical = canon.code.generators();
    const IntMatrix corrected = ldi_correct(canonical, canon.rank);

    const Integer big_q(static_cast<long>(q));
    for (Eigen::Index i = 0; i < corrected.rows(); ++i)
        for (Eigen::Index j = 0; j < corrected.cols(); ++j)
            if (!mpz_divisible_p(Integer(corrected(i, j) - canonical(i, j)).get_mpz_t(), big_q.get_mpz_t())) {
                throw std::logic_error("to_ldi: correction is not a multiple of q");
            }
    if (!is_exactly_orthogonal(corrected)) {
        throw std::logic_error("to_ldi: corrected generators are not orthogonal over Z");
    }
    IntMatrix restored = canon.to_original_frame(corrected);
    if (!is_exactly_orthogonal(restored)) {
        throw std::logic_error("to_ldi: frame restoration broke orthogonality");
    }
    return LdiCode(StabilizerCode(code.n(), Modulus::unbounded(), std::move(restored), q, code.claimed_distance()),
                   q);
}

LdiMetrics ldi_metrics(const LdiCode& code) {
    return {code.max_entry(), is_exactly_orthogonal(code.generators())};
}

std::string to_string(DistanceCondition c) {
    switch (c) {
        case DistanceCondition::PrimeFactorsOfQuotientExceedB:
            return "CondI";
        case DistanceCondition::PrimeFactorsExceedCutoff:
            return "CondII";
        case DistanceCondition::Unknown:
            return "Unknown";
    }
    return "Unknown";
}

DistanceCondition check_distance_condition(const LdiCode& code, std::int64_t q,
                                           std::optional<std::int64_t> p_star) {
    if (q < 2) throw std::invalid_argument("check_distance_condition: Q must be >= 2");
    const std::int64_t origin = code.origin_prime();
    if (q % origin == 0) {
        bool all_exceed = true;
        for (std::int64_t p : prime_factors(q / origin)) {
            if (Integer(static_cast<long>(p)) <= code.max_entry()) all_exceed = false;
        }
        if (all_exceed) return DistanceCondition::PrimeFactorsOfQuotientExceedB;
    }
    if (p_star) {
        bool all_exceed = true;
        for (std::int64_t p : prime_factors(q)) all_exceed = all_exceed && p > *p_star;
        if (all_exceed) return DistanceCondition::PrimeFactorsExceedCutoff;
    }
    return DistanceCondition::Unknown;
}

StabilizerCode instantiate(const LdiCode& code, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("instantiate: Q must be >= 2");
    const bool certified = q == code.origin_prime() || check_distance_condition(code, q) != DistanceCondition::Unknown;
    return StabilizerCode(code.n(), Modulus::finite(q), code.generators(), code.origin_prime(),
                          certified ? code.inner().claimed_distance() : std::nullopt);
}

StabilizerCode scale_by_m(const LdiCode& code, std::int64_t m, std::int64_t q) {
    if (m < 1) throw std::invalid_argument("scale_by_m: m must be >= 1");
    if (q < 2) throw std::invalid_argument("scale_by_m: Q must be >= 2");
    const IntMatrix scaled = code.generators() * Integer(static_cast<long>(m));
    return StabilizerCode(code.n(), Modulus::finite(m * q), scaled, code.origin_prime(),
                          code.inner().claimed_distance());
}

}  // namespace cqec
