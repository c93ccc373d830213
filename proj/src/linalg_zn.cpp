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

#include "cqec/linalg_zn.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace cqec {

namespace {

Integer abs_value(const Integer& v) { return abs(v); }

// Working state of the elimination; every operation on `a` is mirrored into
// the transforms so that U * M * V == a holds throughout.
struct SnfState {
    IntMatrix a, u, v, v_inv;

    void swap_rows(Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        u.row(i).swap(u.row(j));
    }
    void swap_cols(Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a.col(i).swap(a.col(j));
        v.col(i).swap(v.col(j));
        v_inv.row(i).swap(v_inv.row(j));
    }
    // row_i -= q * row_t
    void sub_row(Eigen::Index i, Eigen::Index t, const Integer& q) {
        a.row(i) -= q * a.row(t);
        u.row(i) -= q * u.row(t);
    }
    // col_j -= q * col_t
    void sub_col(Eigen::Index j, Eigen::Index t, const Integer& q) {
        a.col(j) -= q * a.col(t);
        v.col(j) -= q * v.col(t);
        v_inv.row(t) += q * v_inv.row(j);
    }
    void add_row(Eigen::Index t, Eigen::Index i) {
        a.row(t) += a.row(i);
        u.row(t) += u.row(i);
    }
    void negate_row(Eigen::Index t) {
        a.row(t) = -a.row(t);
        u.row(t) = -u.row(t);
    }
};

}  // namespace

std::vector<Integer> SnfDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    for (Eigen::Index i = 0; i < diagonal_size(); ++i) out.push_back(D(i, i));
    return out;
}

Eigen::Index SnfDecomposition::rank() const {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < diagonal_size(); ++i) r += D(i, i) != 0;
    return r;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    SnfState s{m, IntMatrix::Identity(rows, rows), IntMatrix::Identity(cols, cols),
               IntMatrix::Identity(cols, cols)};
    const Eigen::Index diag = std::min(rows, cols);

    for (Eigen::Index t = 0; t < diag; ++t) {
        // Global pivot over the trailing block.
        Eigen::Index pr = -1, pc = -1;
        Integer best;
        for (Eigen::Index i = t; i < rows; ++i) {
            for (Eigen::Index j = t; j < cols; ++j) {
                if (s.a(i, j) == 0) continue;
                Integer mag = abs_value(s.a(i, j));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;
        s.swap_rows(t, pr);
        s.swap_cols(t, pc);

        while (true) {
            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (s.a(i, t) == 0) continue;
                s.sub_row(i, t, floor_div(s.a(i, t), s.a(t, t)));
                if (s.a(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (s.a(t, j) == 0) continue;
                s.sub_col(j, t, floor_div(s.a(t, j), s.a(t, t)));
                if (s.a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; promote the
                // smallest one in row/column t and go again.
                Eigen::Index br = t, bc = t;
                Integer mag = abs_value(s.a(t, t));
                for (Eigen::Index i = t + 1; i < rows; ++i) {
                    if (s.a(i, t) != 0 && abs_value(s.a(i, t)) < mag) {
                        mag = abs_value(s.a(i, t));
                        br = i;
                        bc = t;
                    }
                }
                for (Eigen::Index j = t + 1; j < cols; ++j) {
                    if (s.a(t, j) != 0 && abs_value(s.a(t, j)) < mag) {
                        mag = abs_value(s.a(t, j));
                        br = t;
                        bc = j;
                    }
                }
                s.swap_rows(t, br);
                s.swap_cols(t, bc);
                continue;
            }
            // Divisibility: fold an offending row into row t, which leaves a
            // remainder in row t on the next sweep.
            bool divides = true;
            for (Eigen::Index i = t + 1; i < rows && divides; ++i) {
                for (Eigen::Index j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(s.a(i, j).get_mpz_t(), s.a(t, t).get_mpz_t())) {
                        s.add_row(t, i);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (s.a(t, t) < 0) s.negate_row(t);
    }
    return SnfDecomposition{std::move(s.a), std::move(s.u), std::move(s.v), std::move(s.v_inv)};
}

std::int64_t rank_mod_p(const WordMatrix& reduced, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not prime");
    WordMatrix a = reduced.unaryExpr([p](std::int64_t v) { return mod_floor(v, p); });
    std::int64_t rank = 0;
    for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = rank; i < a.rows(); ++i) {
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        a.row(rank).swap(a.row(pivot));
        const std::int64_t inv = mod_inverse(Integer(static_cast<long>(a(rank, col))), Integer(static_cast<long>(p))).get_si();
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(rank, j) = a(rank, j) * inv % p;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == rank || a(i, col) == 0) continue;
            const std::int64_t f = a(i, col);
            for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j) - f * a(rank, j), p);
        }
        ++rank;
    }
    return rank;
}

Integer subgroup_order(const IntMatrix& rows, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("subgroup_order: Q must be >= 2");
    const Integer big_q(static_cast<long>(q));
    Integer order = 1;
    for (const Integer& d : smith_normal_form(rows).invariant_factors()) {
        if (d != 0) order *= big_q / gcd(d, big_q);
    }
    return order;
}

RowSpanSolver::RowSpanSolver(const IntMatrix& rows, std::int64_t q) : q_(q), rows_(rows.rows()), cols_(rows.cols()) {
    if (q < 2) throw std::invalid_argument("RowSpanSolver: Q must be >= 2");
    SnfDecomposition snf = smith_normal_form(rows);
    const Integer big_q(static_cast<long>(q));
    v_mod_q_.resize(cols_, cols_);
    for (Eigen::Index i = 0; i < cols_; ++i)
        for (Eigen::Index j = 0; j < cols_; ++j) v_mod_q_(i, j) = residue(snf.V(i, j), q);
    gcds_.assign(static_cast<std::size_t>(cols_), q);
    diag_.assign(static_cast<std::size_t>(cols_), Integer(0));
    for (Eigen::Index i = 0; i < snf.diagonal_size(); ++i) {
        diag_[i] = snf.D(i, i);
        gcds_[i] = to_int64(gcd(snf.D(i, i), big_q));
    }
    u_ = std::move(snf.U);
}

WordVector RowSpanSolver::reduce(const IntVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("membership: vector length " + std::to_string(v.size()) + " != " +
                                    std::to_string(cols_) + " columns");
    }
    WordVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = residue(v(i), q_);
    return out;
}

WordVector RowSpanSolver::transformed(const WordVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("membership: dimension mismatch");
    WordVector w = WordVector::Zero(cols_);
    for (Eigen::Index k = 0; k < cols_; ++k) {
        const std::int64_t vk = mod_floor(v(k), q_);
        if (vk == 0) continue;
        for (Eigen::Index j = 0; j < cols_; ++j) w(j) = (w(j) + vk * v_mod_q_(k, j)) % q_;
    }
    return w;
}

bool RowSpanSolver::contains(const WordVector& v) const {
    const WordVector w = transformed(v);
    for (Eigen::Index j = 0; j < cols_; ++j) {
        if (w(j) % gcds_[j] != 0) return false;
    }
    return true;
}

bool RowSpanSolver::contains(const IntVector& v) const { return contains(reduce(v)); }

std::optional<IntVector> RowSpanSolver::witness(const IntVector& v) const {
    const WordVector w = transformed(reduce(v));
    const Integer big_q(static_cast<long>(q_));
    IntVector y = IntVector::Zero(rows_);
    for (Eigen::Index j = 0; j < cols_; ++j) {
        if (w(j) % gcds_[j] != 0) return std::nullopt;
        if (j >= rows_ || diag_[j] == 0) continue;
        const Integer g(static_cast<long>(gcds_[j]));
        const Integer sub_q = big_q / g;
        if (sub_q == 1) continue;
        const Integer target = Integer(static_cast<long>(w(j))) / g;
        const Integer unit = mod_floor(diag_[j] / g, sub_q);
        y(j) = mod_floor(target * mod_inverse(unit, sub_q), sub_q);
    }
    IntVector c = y * u_;
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = mod_floor(c(i), big_q);
    return c;
}

bool membership(const IntVector& v, const IntMatrix& rows, std::int64_t q) {
    if (v.size() != rows.cols()) throw std::invalid_argument("membership: dimension mismatch");
    return RowSpanSolver(rows, q).contains(v);
}

std::optional<IntVector> membership_witness(const IntVector& v, const IntMatrix& rows, std::int64_t q) {
    if (v.size() != rows.cols()) throw std::invalid_argument("membership: dimension mismatch");
    return RowSpanSolver(rows, q).witness(v);
}

std::vector<IntVector> kernel_mod_q(const IntMatrix& m, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("kernel_mod_q: Q must be >= 2");
    const SnfDecomposition snf = smith_normal_form(m);
    const Integer big_q(static_cast<long>(q));
    std::vector<IntVector> out;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        // y_j must be a multiple of Q / gcd(d_j, Q); past the diagonal d_j = 0.
        const Integer d = j < snf.diagonal_size() ? snf.D(j, j) : Integer(0);
        const Integer step = big_q / gcd(d, big_q);
        IntVector g = (snf.V.col(j) * step).transpose();
        bool nonzero = false;
        for (Eigen::Index i = 0; i < g.size(); ++i) {
            g(i) = mod_floor(g(i), big_q);
            nonzero = nonzero || g(i) != 0;
        }
        if (nonzero) out.push_back(std::move(g));
    }
    return out;
}

IntMatrix stack_rows(const std::vector<IntVector>& rows, Eigen::Index cols) {
    IntMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("stack_rows: length mismatch");
        out.row(static_cast<Eigen::Index>(i)) = rows[i];
    }
    return out;
}

namespace {

IntMatrix with_modulus_rows(const IntMatrix& m, std::int64_t q) {
    IntMatrix out(m.rows() + m.cols(), m.cols());
    out.topRows(m.rows()) = m;
    out.bottomRows(m.cols()) = IntMatrix::Identity(m.cols(), m.cols()) * Integer(static_cast<long>(q));
    return out;
}

}  // namespace

std::vector<CyclicGenerator> quotient_generators(const IntMatrix& larger, const IntMatrix& smaller,
                                                 std::int64_t q) {
    if (larger.cols() != smaller.cols()) throw std::invalid_argument("quotient_generators: column mismatch");
    const Eigen::Index cols = larger.cols();
    const Integer big_q(static_cast<long>(q));

    // Lattice L = span(larger) + Q Z^cols has basis rows d_i * V^{-1}_i.
    const SnfDecomposition outer = smith_normal_form(with_modulus_rows(larger, q));
    IntMatrix basis(cols, cols);
    for (Eigen::Index i = 0; i < cols; ++i) basis.row(i) = outer.V_inverse.row(i) * outer.D(i, i);

    // Coordinates of the smaller lattice's generators in that basis.
    IntMatrix coords = with_modulus_rows(smaller, q) * outer.V;
    for (Eigen::Index j = 0; j < cols; ++j) {
        const Integer& d = outer.D(j, j);
        for (Eigen::Index i = 0; i < coords.rows(); ++i) {
            if (!mpz_divisible_p(coords(i, j).get_mpz_t(), d.get_mpz_t())) {
                throw std::invalid_argument("quotient_generators: smaller span is not contained in larger span");
            }
            coords(i, j) /= d;
        }
    }

    const SnfDecomposition inner = smith_normal_form(coords);
    const IntMatrix generators = inner.V_inverse * basis;
    std::vector<CyclicGenerator> out;
    for (Eigen::Index i = 0; i < cols; ++i) {
        const Integer& d = inner.D(i, i);
        if (d == 1) continue;
        IntVector g = generators.row(i);
        for (Eigen::Index j = 0; j < cols; ++j) g(j) = mod_floor(g(j), big_q);
        out.push_back({std::move(g), to_int64(d)});
    }
    return out;
}

namespace oracle {

std::vector<WordVector> subgroup_elements(const IntMatrix& rows, std::int64_t q, std::size_t budget) {
    const Eigen::Index cols = rows.cols();
    std::vector<WordVector> gens;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        WordVector g(cols);
        for (Eigen::Index j = 0; j < cols; ++j) g(j) = residue(rows(i, j), q);
        gens.push_back(g);
    }
    auto key = [](const WordVector& v) { return std::vector<std::int64_t>(v.data(), v.data() + v.size()); };
    std::set<std::vector<std::int64_t>> seen;
    std::vector<WordVector> out;
    std::deque<WordVector> frontier;
    const WordVector zero = WordVector::Zero(cols);
    seen.insert(key(zero));
    out.push_back(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        WordVector cur = frontier.front();
        frontier.pop_front();
        for (const WordVector& g : gens) {
            WordVector next = (cur + g).unaryExpr([q](std::int64_t v) { return v % q; });
            if (seen.insert(key(next)).second) {
                if (out.size() >= budget) throw std::length_error("subgroup enumeration exceeded budget");
                out.push_back(next);
                frontier.push_back(std::move(next));
            }
        }
    }
    return out;
}

std::vector<WordVector> kernel_elements(const IntMatrix& m, std::int64_t q, std::size_t budget) {
    const Eigen::Index cols = m.cols();
    double total = 1;
    for (Eigen::Index j = 0; j < cols; ++j) total *= static_cast<double>(q);
    if (total > static_cast<double>(budget)) throw std::length_error("kernel enumeration exceeded budget");
    WordMatrix reduced(m.rows(), cols);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < cols; ++j) reduced(i, j) = residue(m(i, j), q);
    std::vector<WordVector> out;
    WordVector x = WordVector::Zero(cols);
    while (true) {
        bool zero = true;
        for (Eigen::Index i = 0; i < m.rows() && zero; ++i) {
            std::int64_t acc = 0;
            for (Eigen::Index j = 0; j < cols; ++j) acc = (acc + reduced(i, j) * x(j)) % q;
            zero = acc == 0;
        }
        if (zero) out.push_back(x);
        Eigen::Index pos = 0;
        while (pos < cols && ++x(pos) == q) x(pos++) = 0;
        if (pos == cols) break;
    }
    return out;
}

}  // namespace oracle

}  // namespace cqec
