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

#include "cqec/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "cqec/linalg_zn.hpp"

namespace cqec {

IntMatrix generators_over(const StabilizerCode& code, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("Q must be >= 2");
    if (code.modulus().is_finite() && code.modulus().value() != q) {
        throw std::invalid_argument("code is defined mod " + code.modulus().to_string() + ", not mod " +
                                    std::to_string(q));
    }
    return code.generators_mod(q);
}

namespace {

void require_commuting(const IntMatrix& rows, std::int64_t q) {
    ValidationReport report;
    const Integer big_q(static_cast<long>(q));
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < rows.rows(); ++j) {
            Integer product = mod_floor(symplectic_form(rows.row(i), rows.row(j)), big_q);
            if (product != 0) report.violations.push_back({i, j, product});
        }
    }
    if (!report.valid()) throw InvalidCodeError(report);
}

}  // namespace

double log_base(const Integer& value, std::int64_t q) {
    if (value <= 0) throw std::domain_error("log_base: value must be positive");
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return (std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0)) / std::log(static_cast<double>(q));
}

LogicalDimension logical_dimension(const StabilizerCode& code, std::int64_t q) {
    const IntMatrix rows = generators_over(code, q);
    require_commuting(rows, q);
    const Integer total = pow(Integer(static_cast<long>(q)), static_cast<unsigned long>(code.n()));
    const Integer group = subgroup_order(rows, q);
    Integer k_size = total / group;
    if (k_size * group != total) throw std::logic_error("logical_dimension: |S| does not divide Q^n");
    const double k = log_base(k_size, q);
    return {std::move(k_size), k};
}

std::vector<LogicalOperator> logical_operators(const StabilizerCode& code, std::int64_t q) {
    const IntMatrix rows = generators_over(code, q);
    require_commuting(rows, q);
    const Eigen::Index n = code.n();

    // syndrome_i(e) = g_x . e_z - g_z . e_x, i.e. [-g_z | g_x] e^T.
    IntMatrix check(rows.rows(), 2 * n);
    check.leftCols(n) = -rows.rightCols(n);
    check.rightCols(n) = rows.leftCols(n);
    const IntMatrix centralizer = stack_rows(kernel_mod_q(check, q), 2 * n);

    std::vector<LogicalOperator> out;
    for (const CyclicGenerator& g : quotient_generators(centralizer, rows, q)) {
        std::int64_t rest = g.order;
        for (std::int64_t p : prime_factors(g.order)) {
            std::int64_t power = 1;
            while (rest % p == 0) {
                rest /= p;
                power *= p;
            }
            const IntVector component = g.generator * Integer(static_cast<long>(g.order / power));
            out.push_back({PauliVec(component, Modulus::finite(q)), power});
        }
    }
    return out;
}

double distance_search_cost(Eigen::Index n, std::int64_t q, std::int64_t max_weight) {
    double total = 0;
    double binom = 1;
    const double alphabet = static_cast<double>(q) * static_cast<double>(q) - 1;
    for (std::int64_t w = 1; w <= std::min<std::int64_t>(max_weight, n); ++w) {
        binom = binom * static_cast<double>(n - w + 1) / static_cast<double>(w);
        total += binom * std::pow(alphabet, static_cast<double>(w));
    }
    return total;
}

namespace {

std::vector<std::vector<Eigen::Index>> supports_of_weight(Eigen::Index n, Eigen::Index w) {
    std::vector<std::vector<Eigen::Index>> out;
    std::vector<Eigen::Index> s(static_cast<std::size_t>(w));
    for (Eigen::Index i = 0; i < w; ++i) s[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(s);
        Eigen::Index i = w - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - w + i) --i;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < w; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Read-only tables shared by the search workers.
struct SearchTables {
    Eigen::Index n;
    Eigen::Index r;
    std::int64_t q;
    std::int64_t pairs;  // Q^2
    // syndrome contribution of power pair (x, z) on register j, r entries each
    std::vector<std::int64_t> contrib;
    const RowSpanSolver* solver;

    const std::int64_t* column(Eigen::Index reg, std::int64_t pair) const {
        return contrib.data() + (reg * pairs + pair) * r;
    }
};

struct Hit {
    std::size_t support_index;
    std::vector<std::int64_t> pairs;
};

// Searches one support set in lexicographic pair order; returns the first
// undetectable non-member, if any.
std::optional<std::vector<std::int64_t>> search_support(const SearchTables& t, const std::vector<Eigen::Index>& support) {
    const std::size_t w = support.size();
    const std::size_t r = static_cast<std::size_t>(t.r);
    std::vector<std::int64_t> digits(w, 1);
    // partial[level] holds the syndrome of the first `level` registers.
    std::vector<std::int64_t> partial((w + 1) * r, 0);
    auto refresh_from = [&](std::size_t level) {
        for (std::size_t l = level; l < w; ++l) {
            const std::int64_t* col = t.column(support[l], digits[l]);
            const std::int64_t* prev = partial.data() + l * r;
            std::int64_t* next = partial.data() + (l + 1) * r;
            for (std::size_t i = 0; i < r; ++i) {
                std::int64_t v = prev[i] + col[i];
                next[i] = v >= t.q ? v - t.q : v;
            }
        }
    };
    refresh_from(0);
    WordVector e(2 * t.n);
    while (true) {
        const std::int64_t* s = partial.data() + w * r;
        bool zero = true;
        for (std::size_t i = 0; i < r && zero; ++i) zero = s[i] == 0;
        if (zero) {
            e.setZero();
            for (std::size_t l = 0; l < w; ++l) {
                e(support[l]) = digits[l] / t.q;
                e(t.n + support[l]) = digits[l] % t.q;
            }
            if (!t.solver->contains(e)) return digits;
        }
        std::size_t pos = w;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < t.pairs) break;
            digits[pos] = 1;
            if (pos == 0) return std::nullopt;
        }
        refresh_from(pos);
    }
}

}  // namespace

DistanceResult brute_force_distance(const StabilizerCode& code, std::int64_t q, std::int64_t max_weight,
                                    const DistanceOptions& options) {
    const IntMatrix rows = generators_over(code, q);
    require_commuting(rows, q);
    const Eigen::Index n = code.n();
    const RowSpanSolver solver(rows, q);

    SearchTables t{n, rows.rows(), q, q * q, {}, &solver};
    t.contrib.assign(static_cast<std::size_t>(n * t.pairs * t.r), 0);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (std::int64_t pair = 1; pair < t.pairs; ++pair) {
            const std::int64_t x = pair / q, z = pair % q;
            std::int64_t* col = t.contrib.data() + (j * t.pairs + pair) * t.r;
            for (Eigen::Index i = 0; i < t.r; ++i) {
                col[i] = mod_floor(residue(rows(i, j), q) * z - residue(rows(i, n + j), q) * x, q);
            }
        }
    }

    unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
    DistanceResult result;
    double spent = 0;
    const std::int64_t top = std::min<std::int64_t>(max_weight, n);
    for (std::int64_t w = 1; w <= top; ++w) {
        const double cost = distance_search_cost(n, q, w) - distance_search_cost(n, q, w - 1);
        if (spent + cost > options.budget) {
            result.budget_exhausted = true;
            return result;
        }
        spent += cost;
        const auto supports = supports_of_weight(n, static_cast<Eigen::Index>(w));

        constexpr std::size_t kChunk = 16;
        std::atomic<std::size_t> next_chunk{0};
        std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
        std::mutex hit_mutex;
        std::optional<Hit> hit;

        auto worker = [&] {
            while (true) {
                const std::size_t begin = next_chunk.fetch_add(kChunk);
                if (begin >= supports.size() || begin >= best.load()) return;
                const std::size_t end = std::min(begin + kChunk, supports.size());
                for (std::size_t s = begin; s < end && s < best.load(); ++s) {
                    auto found = search_support(t, supports[s]);
                    if (!found) continue;
                    std::lock_guard<std::mutex> lock(hit_mutex);
                    if (!hit || s < hit->support_index) {
                        hit = Hit{s, std::move(*found)};
                        best.store(s);
                    }
                    break;
                }
            }
        };
        if (jobs <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        if (hit) {
            IntVector e = IntVector::Zero(2 * n);
            const auto& support = supports[hit->support_index];
            for (std::size_t l = 0; l < support.size(); ++l) {
                e(support[l]) = static_cast<long>(hit->pairs[l] / q);
                e(n + support[l]) = static_cast<long>(hit->pairs[l] % q);
            }
            result.distance = w;
            result.searched_up_to = w;
            result.witness = PauliVec(std::move(e), Modulus::finite(q));
            return result;
        }
        result.searched_up_to = w;
    }
    return result;
}

std::string to_string(ErrorClass c) { return c == ErrorClass::Unavoidable ? "Unavoidable" : "Artifact"; }

UndetectableError classify_undetectable(const StabilizerCode& code, const PauliVec& error, std::int64_t q) {
    const IntMatrix rows = generators_over(code, q);
    if (error.n() != code.n()) throw std::invalid_argument("classify_undetectable: length mismatch");
    const PauliVec lift = error.modulus().is_unbounded() ? error : lift_and_reduce(error, Modulus::unbounded());
    IntVector integer_syndrome = syndrome(code, lift, Modulus::unbounded());
    const Integer big_q(static_cast<long>(q));
    for (Eigen::Index i = 0; i < integer_syndrome.size(); ++i) {
        if (mod_floor(integer_syndrome(i), big_q) != 0) {
            throw std::invalid_argument("classify_undetectable: error is detected by generator " +
                                        std::to_string(i + 1));
        }
    }
    if (membership(lift.entries(), rows, q)) {
        throw std::invalid_argument("classify_undetectable: error is a member of the stabilizer group");
    }
    bool exact_zero = true;
    for (Eigen::Index i = 0; i < integer_syndrome.size(); ++i) exact_zero = exact_zero && integer_syndrome(i) == 0;
    return UndetectableError{lift, pauli_weight(PauliVec(lift.entries(), Modulus::finite(q))),
                             exact_zero ? ErrorClass::Unavoidable : ErrorClass::Artifact, std::move(integer_syndrome)};
}

Integer brute_force_group_order(const StabilizerCode& code, std::int64_t q, std::size_t budget) {
    return Integer(static_cast<unsigned long>(oracle::subgroup_elements(generators_over(code, q), q, budget).size()));
}

CodeReport analyze(const StabilizerCode& code, std::int64_t q, std::optional<std::int64_t> max_weight,
                   const DistanceOptions& options) {
    CodeReport report;
    LogicalDimension dim = logical_dimension(code, q);
    report.K = std::move(dim.K);
    report.k = dim.k;
    const IntMatrix rows = generators_over(code, q);
    for (Eigen::Index i = 0; i < rows.rows(); ++i) report.generator_orders.push_back(additive_order(IntVector(rows.row(i)), q));
    report.logical_generators = logical_operators(code, q);
    if (max_weight) report.distance = brute_force_distance(code, q, *max_weight, options);
    return report;
}

}  // namespace cqec
