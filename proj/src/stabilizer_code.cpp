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

#include "cqec/stabilizer_code.hpp"

#include <sstream>

#include "cqec/linalg_zn.hpp"

namespace cqec {

StabilizerCode::StabilizerCode(Eigen::Index n, Modulus modulus, IntMatrix generators,
                               std::optional<std::int64_t> origin_prime,
                               std::optional<std::int64_t> claimed_distance)
    : n_(n),
      modulus_(modulus),
      generators_(std::move(generators)),
      origin_prime_(origin_prime),
      claimed_distance_(claimed_distance) {
    if (n_ < 1) throw std::invalid_argument("StabilizerCode: n must be positive");
    if (generators_.rows() > 0 && generators_.cols() != 2 * n_) {
        throw std::invalid_argument("StabilizerCode: generator rows have " + std::to_string(generators_.cols()) +
                                    " entries, expected 2n = " + std::to_string(2 * n_));
    }
    if (generators_.rows() == 0) generators_.resize(0, 2 * n_);
    if (modulus_.is_finite()) {
        const Integer q(static_cast<long>(modulus_.value()));
        generators_ = generators_.unaryExpr([&q](const Integer& v) { return mod_floor(v, q); });
    }
}

StabilizerCode StabilizerCode::from_paulis(const std::vector<PauliVec>& generators, Modulus modulus) {
    if (generators.empty()) throw std::invalid_argument("from_paulis: need at least one generator to infer n");
    const Eigen::Index n = generators.front().n();
    IntMatrix m(static_cast<Eigen::Index>(generators.size()), 2 * n);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].n() != n) throw std::invalid_argument("from_paulis: length mismatch");
        m.row(static_cast<Eigen::Index>(i)) = generators[i].entries();
    }
    return StabilizerCode(n, modulus, std::move(m));
}

StabilizerCode StabilizerCode::with_claimed_distance(std::optional<std::int64_t> d) const {
    StabilizerCode out = *this;
    out.claimed_distance_ = d;
    return out;
}

StabilizerCode StabilizerCode::with_origin_prime(std::optional<std::int64_t> q) const {
    StabilizerCode out = *this;
    out.origin_prime_ = q;
    return out;
}

IntMatrix StabilizerCode::generators_mod(std::int64_t q) const {
    const Integer big_q(static_cast<long>(q));
    return generators_.unaryExpr([&big_q](const Integer& v) { return mod_floor(v, big_q); });
}

bool operator==(const StabilizerCode& a, const StabilizerCode& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_ && a.generators_.rows() == b.generators_.rows() &&
           a.generators_ == b.generators_ && a.origin_prime_ == b.origin_prime_ &&
           a.claimed_distance_ == b.claimed_distance_;
}

std::string ValidationReport::summary() const {
    if (valid()) return "valid";
    std::ostringstream out;
    out << "invalid:";
    for (const auto& v : violations) {
        out << " generators " << v.first + 1 << " and " << v.second + 1 << " have symplectic product "
            << v.product << ';';
    }
    for (Eigen::Index i : dependent) out << " generator " << i + 1 << " is dependent on the others;";
    return out.str();
}

ValidationReport validate(const StabilizerCode& code) {
    ValidationReport report;
    const IntMatrix& g = code.generators();
    const Eigen::Index r = g.rows();
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = i + 1; j < r; ++j) {
            Integer product = symplectic_form(g.row(i), g.row(j));
            if (code.modulus().is_finite()) product = mod_floor(product, Integer(static_cast<long>(code.modulus().value())));
            if (product != 0) report.violations.push_back({i, j, product});
        }
    }
    if (r == 0) return report;

    if (code.modulus().is_unbounded()) {
        // Integer rank deficit: report the rows that fall outside a greedy basis.
        Eigen::Index kept = 0;
        IntMatrix basis(0, g.cols());
        for (Eigen::Index i = 0; i < r; ++i) {
            IntMatrix trial(kept + 1, g.cols());
            trial.topRows(kept) = basis;
            trial.row(kept) = g.row(i);
            if (smith_normal_form(trial).rank() == kept + 1) {
                basis = std::move(trial);
                ++kept;
            } else {
                report.dependent.push_back(i);
            }
        }
        return report;
    }

    const std::int64_t q = code.modulus().value();
    if (is_prime(q)) {
        if (rank_mod_p(g, q) == r) return report;
        WordMatrix basis(0, g.cols());
        for (Eigen::Index i = 0; i < r; ++i) {
            WordMatrix trial(basis.rows() + 1, g.cols());
            trial.topRows(basis.rows()) = basis;
            for (Eigen::Index j = 0; j < g.cols(); ++j) trial(basis.rows(), j) = residue(g(i, j), q);
            if (rank_mod_p(trial, q) == trial.rows()) {
                basis = std::move(trial);
            } else {
                report.dependent.push_back(i);
            }
        }
        return report;
    }

    for (Eigen::Index i = 0; i < r; ++i) {
        IntMatrix others(r - 1, g.cols());
        for (Eigen::Index j = 0, k = 0; j < r; ++j) {
            if (j != i) others.row(k++) = g.row(j);
        }
        if (membership(g.row(i), others, q)) report.dependent.push_back(i);
    }
    return report;
}

InvalidCodeError::InvalidCodeError(const ValidationReport& report)
    : std::invalid_argument(report.summary()), report_(report) {}

void require_valid(const StabilizerCode& code) {
    ValidationReport report = validate(code);
    if (!report.valid()) throw InvalidCodeError(report);
}

IntVector syndrome(const StabilizerCode& code, const PauliVec& e, Modulus over) {
    if (e.entries().size() != 2 * code.n()) {
        throw std::invalid_argument("syndrome: error has " + std::to_string(e.entries().size()) +
                                    " entries, expected " + std::to_string(2 * code.n()));
    }
    const IntMatrix& g = code.generators();
    IntVector out(g.rows());
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        out(i) = symplectic_form(g.row(i), e.entries());
        if (over.is_finite()) out(i) = mod_floor(out(i), Integer(static_cast<long>(over.value())));
    }
    return out;
}

IntMatrix CanonicalForm::to_original_frame(const IntMatrix& canonical_rows) const {
    const Eigen::Index n = code.n();
    IntMatrix out(canonical_rows.rows(), 2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index orig = register_permutation[static_cast<std::size_t>(k)];
        if (hadamard_swaps[static_cast<std::size_t>(orig)]) {
            // Inverse of (x, z) -> (z, -x).
            out.col(orig) = -canonical_rows.col(n + k);
            out.col(n + orig) = canonical_rows.col(k);
        } else {
            out.col(orig) = canonical_rows.col(k);
            out.col(n + orig) = canonical_rows.col(n + k);
        }
    }
    return out;
}

CanonicalForm canonical_form(const StabilizerCode& code) {
    if (!code.modulus().is_finite() || !is_prime(code.modulus().value())) {
        throw std::invalid_argument("canonical_form: modulus " + code.modulus().to_string() + " is not prime");
    }
    require_valid(code);
    const std::int64_t p = code.modulus().value();
    const Eigen::Index n = code.n();
    const Eigen::Index r = code.num_generators();

    WordMatrix a(r, 2 * n);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < 2 * n; ++j) a(i, j) = residue(code.generators()(i, j), p);

    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
    std::vector<bool> swapped(static_cast<std::size_t>(n), false);

    for (Eigen::Index i = 0; i < r; ++i) {
        Eigen::Index pivot_row = -1, pivot_col = -1;
        for (Eigen::Index c = i; c < n && pivot_row < 0; ++c) {
            for (Eigen::Index k = i; k < r; ++k) {
                if (a(k, c) != 0) {
                    pivot_row = k;
                    pivot_col = c;
                    break;
                }
            }
        }
        if (pivot_row < 0) {
            for (Eigen::Index c = i; c < n && pivot_row < 0; ++c) {
                for (Eigen::Index k = i; k < r; ++k) {
                    if (a(k, n + c) != 0) {
                        pivot_row = k;
                        pivot_col = c;
                        break;
                    }
                }
            }
            if (pivot_row < 0) {
                throw CanonicalizationError("canonical_form: no pivot for generator " + std::to_string(i + 1));
            }
            auto flag = swapped[static_cast<std::size_t>(perm[static_cast<std::size_t>(pivot_col)])];
            if (flag) throw CanonicalizationError("canonical_form: register exchanged twice");
            flag = true;
            for (Eigen::Index k = 0; k < r; ++k) {
                const std::int64_t x = a(k, pivot_col);
                a(k, pivot_col) = a(k, n + pivot_col);
                a(k, n + pivot_col) = mod_floor(-x, p);
            }
        }
        a.row(i).swap(a.row(pivot_row));
        if (pivot_col != i) {
            a.col(i).swap(a.col(pivot_col));
            a.col(n + i).swap(a.col(n + pivot_col));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pivot_col)]);
        }
        const std::int64_t inv =
            mod_inverse(Integer(static_cast<long>(a(i, i))), Integer(static_cast<long>(p))).get_si();
        a.row(i) = a.row(i).unaryExpr([inv, p](std::int64_t v) { return v * inv % p; });
        for (Eigen::Index k = 0; k < r; ++k) {
            if (k == i || a(k, i) == 0) continue;
            const std::int64_t f = a(k, i);
            for (Eigen::Index j = 0; j < 2 * n; ++j) a(k, j) = mod_floor(a(k, j) - f * a(i, j), p);
        }
    }

    IntMatrix canonical(r, 2 * n);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < 2 * n; ++j) canonical(i, j) = static_cast<long>(a(i, j));
    return CanonicalForm{StabilizerCode(n, code.modulus(), std::move(canonical), code.origin_prime(),
                                        code.claimed_distance()),
                         r, std::move(perm), std::move(swapped)};
}

}  // namespace cqec
