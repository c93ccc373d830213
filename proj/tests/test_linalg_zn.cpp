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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cqec/linalg_zn.hpp"
#include "support/random_codes.hpp"

namespace cqec {
namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        Eigen::Index j = 0;
        for (long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntVector vec(std::initializer_list<long> values) { return mat({values}).row(0); }

std::vector<Integer> diag(const SnfDecomposition& snf) { return snf.invariant_factors(); }

void expect_valid_snf(const IntMatrix& m, const SnfDecomposition& snf) {
    ASSERT_EQ(snf.U * m * snf.V, snf.D);
    ASSERT_EQ(snf.V * snf.V_inverse, IntMatrix::Identity(m.cols(), m.cols()));
    for (Eigen::Index i = 0; i < snf.D.rows(); ++i)
        for (Eigen::Index j = 0; j < snf.D.cols(); ++j)
            if (i != j) ASSERT_EQ(snf.D(i, j), 0);
    const auto d = snf.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) {
        ASSERT_GE(d[i], 0);
        if (i + 1 < d.size() && d[i] != 0) ASSERT_EQ(d[i + 1] % d[i], 0) << "chain breaks at " << i;
        if (d[i] == 0 && i + 1 < d.size()) ASSERT_EQ(d[i + 1], 0);
    }
}

TEST(SmithNormalForm, Examples) {
    EXPECT_EQ(diag(smith_normal_form(mat({{2, 0}, {0, 3}}))), (std::vector<Integer>{1, 6}));
    EXPECT_EQ(diag(smith_normal_form(mat({{1, 0}, {0, 1}}))), (std::vector<Integer>{1, 1}));
    EXPECT_EQ(diag(smith_normal_form(mat({{2, 4}, {6, 8}}))), (std::vector<Integer>{2, 4}));
}

TEST(SmithNormalForm, RandomMatricesRemultiply) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Eigen::Index> dim(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const IntMatrix m = testing::random_matrix(rng, dim(rng), dim(rng), -50, 50);
        expect_valid_snf(m, smith_normal_form(m));
    }
}

TEST(SmithNormalForm, RankDeficientAndEmpty) {
    const IntMatrix m = mat({{1, 2, 3}, {2, 4, 6}, {0, 0, 0}});
    const auto snf = smith_normal_form(m);
    expect_valid_snf(m, snf);
    EXPECT_EQ(snf.rank(), 1);
    const IntMatrix empty(0, 3);
    expect_valid_snf(empty, smith_normal_form(empty));
}

TEST(SmithNormalForm, LargeEntriesStayExact) {
    IntMatrix m = mat({{1, 0}, {0, 1}});
    m(0, 0) = Integer("123456789012345678901234567890");
    m(1, 1) = Integer("987654321098765432109876543210");
    const auto snf = smith_normal_form(m);
    expect_valid_snf(m, snf);
    EXPECT_EQ(snf.invariant_factors()[0] * snf.invariant_factors()[1], m(0, 0) * m(1, 1));
}

TEST(RankModP, Examples) {
    EXPECT_EQ(rank_mod_p(IntMatrix(IntMatrix::Identity(3, 3)), 7), 3);
    EXPECT_EQ(rank_mod_p(mat({{2, 4}, {1, 2}}), 2), 1);
    EXPECT_EQ(rank_mod_p(mat({{2, 4}, {1, 2}}), 5), 1);
    EXPECT_THROW(rank_mod_p(mat({{1}}), 4), std::invalid_argument);
}

TEST(SubgroupOrder, Examples) {
    EXPECT_EQ(subgroup_order(mat({{3, 0}, {0, 2}}), 6), 6);
    EXPECT_EQ(subgroup_order(mat({{1, 0}, {0, 1}}), 6), 36);
    EXPECT_EQ(subgroup_order(mat({{2, 0}, {4, 0}}), 6), 3);
    EXPECT_EQ(oracle::subgroup_elements(mat({{2, 0}, {4, 0}}), 6, 1000).size(), 3u);
}

TEST(SubgroupOrder, MatchesBreadthFirstClosure) {
    std::mt19937_64 rng(2);
    for (std::int64_t q : {4, 6, 10, 12}) {
        for (int trial = 0; trial < 60; ++trial) {
            const IntMatrix m = testing::random_matrix(rng, 3, 4, 0, q - 1);
            EXPECT_EQ(subgroup_order(m, q), oracle::subgroup_elements(m, q, 100000).size()) << m;
        }
    }
}

TEST(Membership, Examples) {
    const IntMatrix m = mat({{1, 2}, {3, 4}});
    EXPECT_TRUE(membership(vec({1, 2}), m, 6));
    EXPECT_FALSE(membership(vec({1, 0}), mat({{2, 0}}), 4));
    EXPECT_TRUE(membership(vec({3, 3}), mat({{1, 1}}), 6));
}

TEST(Membership, AgreesWithEnumerationAndWitnessesVerify) {
    std::mt19937_64 rng(3);
    for (std::int64_t q : {4, 6, 10, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const IntMatrix m = testing::random_matrix(rng, 3, 3, 0, q - 1);
            std::set<std::vector<std::int64_t>> members;
            for (const WordVector& e : oracle::subgroup_elements(m, q, 100000)) {
                members.insert(std::vector<std::int64_t>(e.data(), e.data() + e.size()));
            }
            const RowSpanSolver solver(m, q);
            const Integer bq(static_cast<long>(q));
            WordVector v = WordVector::Zero(3);
            while (true) {
                const bool expected = members.count(std::vector<std::int64_t>(v.data(), v.data() + v.size())) > 0;
                ASSERT_EQ(solver.contains(v), expected);
                IntVector iv(3);
                for (int j = 0; j < 3; ++j) iv(j) = static_cast<long>(v(j));
                const auto w = solver.witness(iv);
                ASSERT_EQ(w.has_value(), expected);
                if (w) {
                    const IntVector back = *w * m;
                    for (int j = 0; j < 3; ++j) ASSERT_EQ(mod_floor(back(j) - iv(j), bq), 0);
                }
                int pos = 0;
                while (pos < 3 && ++v(pos) == q) v(pos++) = 0;
                if (pos == 3) break;
            }
        }
    }
}

std::set<std::vector<std::int64_t>> as_set(const std::vector<WordVector>& vs) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& v : vs) out.insert(std::vector<std::int64_t>(v.data(), v.data() + v.size()));
    return out;
}

TEST(KernelModQ, Examples) {
    EXPECT_TRUE(kernel_mod_q(mat({{1, 0}, {0, 1}}), 6).empty());
    const auto k1 = kernel_mod_q(mat({{2}}), 6);
    EXPECT_EQ(subgroup_order(stack_rows(k1, 1), 6), 2);
    EXPECT_TRUE(membership(vec({3}), stack_rows(k1, 1), 6));
    const IntMatrix m = mat({{2, 3}});
    const auto k2 = kernel_mod_q(m, 6);
    EXPECT_EQ(subgroup_order(stack_rows(k2, 2), 6), 6);
    EXPECT_EQ(oracle::kernel_elements(m, 6, 100).size(), 6u);
}

TEST(KernelModQ, GeneratesExactlyTheBruteForceKernel) {
    std::mt19937_64 rng(4);
    for (std::int64_t q : {4, 6, 10, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const IntMatrix m = testing::random_matrix(rng, 2, 3, -q, q);
            const auto gens = kernel_mod_q(m, q);
            for (const IntVector& g : gens) {
                const IntMatrix prod = m * g.transpose();
                for (Eigen::Index i = 0; i < prod.rows(); ++i) EXPECT_EQ(mod_floor(prod(i, 0), Integer(q)), 0);
            }
            const auto brute = oracle::kernel_elements(m, q, 100000);
            const auto generated =
                gens.empty() ? std::vector<WordVector>{WordVector::Zero(3)}
                             : oracle::subgroup_elements(stack_rows(gens, 3), q, 100000);
            EXPECT_EQ(as_set(generated), as_set(brute));
            // |ker M| * |row span of M| = Q^cols
            const Integer product = Integer(static_cast<long>(brute.size())) * subgroup_order(m, q);
            EXPECT_EQ(product, pow(Integer(static_cast<long>(q)), 3));
        }
    }
}

TEST(QuotientGenerators, OrdersMultiplyToIndex) {
    // Z_6^2 over the subgroup generated by (2, 0): index 12 = 2 * 6.
    const IntMatrix larger = IntMatrix::Identity(2, 2);
    const auto gens = quotient_generators(larger, mat({{2, 0}}), 6);
    Integer product = 1;
    for (const auto& g : gens) {
        product *= g.order;
        EXPECT_GT(g.order, 1);
    }
    EXPECT_EQ(product, 12);
}

}  // namespace
}  // namespace cqec
