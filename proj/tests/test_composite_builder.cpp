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

#include "cqec/analysis.hpp"
#include "cqec/composite_builder.hpp"
#include "cqec/linalg_zn.hpp"
#include "support/random_codes.hpp"

namespace cqec {
namespace {

TEST(PickAndMix, CrossProductsVanishModQ) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = testing::random_prime_code(rng, 2, 3);
        const auto b = testing::random_prime_code(rng, 3, 3);
        const auto scaled = pick_and_mix_scale({{2, a}, {3, b}}, 6);
        for (Eigen::Index i = 0; i < scaled[0].rows(); ++i)
            for (Eigen::Index j = 0; j < scaled[1].rows(); ++j)
                EXPECT_EQ(mod_floor(symplectic_form(scaled[0].row(i), scaled[1].row(j)), Integer(6)), 0);
        for (Eigen::Index i = 0; i < scaled[0].rows(); ++i) EXPECT_EQ(additive_order(IntVector(scaled[0].row(i)), 6), 2);
        for (Eigen::Index i = 0; i < scaled[1].rows(); ++i) EXPECT_EQ(additive_order(IntVector(scaled[1].row(i)), 6), 3);
    }
}

TEST(PickAndMix, SinglePrimeComponentIsUnchanged) {
    const StabilizerCode code = codes::five_qudit(5);
    const auto scaled = pick_and_mix_scale({{5, code}}, 5);
    EXPECT_EQ(scaled[0], code.generators());
}

TEST(PickAndMix, Preconditions) {
    const StabilizerCode five = codes::five_qubit();
    EXPECT_THROW(pick_and_mix_scale({{2, five}}, 12), std::invalid_argument);
    EXPECT_THROW(pick_and_mix_scale({{2, five}}, 15), std::invalid_argument);
    EXPECT_THROW(pick_and_mix_scale({{2, five}, {2, five}}, 6), std::invalid_argument);
    EXPECT_THROW(PrimeComponent::from(five, 3), std::invalid_argument);
    EXPECT_THROW(mix_codes({{2, five}, {3, codes::repetition_z(3, 3)}}, 6), std::invalid_argument);
}

TEST(MixCodes, DeskScaleExample) {
    const StabilizerCode mixed = mix_codes({PrimeComponent::from(codes::five_qubit(), 2),
                                            PrimeComponent::from(codes::five_qudit(3), 3)},
                                           6);
    EXPECT_TRUE(validate(mixed).valid());
    EXPECT_EQ(mixed.num_generators(), 8);
    EXPECT_EQ(subgroup_order(mixed.generators(), 6), 1296);
    EXPECT_EQ(logical_dimension(mixed, 6).K, 6);
    EXPECT_EQ(mixed.claimed_distance(), 3);
    EXPECT_EQ(brute_force_distance(mixed, 6, 3).distance, 3);
}

TEST(MixCodes, LogicalDimensionMatchesComponentCount) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Eigen::Index> len(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = len(rng);
        const auto a = testing::random_prime_code(rng, 2, n);
        const auto b = testing::random_prime_code(rng, 3, n);
        const StabilizerCode mixed = mix_codes({{2, a}, {3, b}}, 6);
        const Integer expected = pow(Integer(6), static_cast<unsigned long>(n)) /
                                 (pow(Integer(2), static_cast<unsigned long>(a.num_generators())) *
                                  pow(Integer(3), static_cast<unsigned long>(b.num_generators())));
        EXPECT_EQ(logical_dimension(mixed, 6).K, expected);
    }
}

TEST(MixCodes, DistanceAtLeastComponentMinimum) {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<Eigen::Index> len(2, 4);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = len(rng);
        const auto a = testing::random_prime_code(rng, 2, n, n - 1);
        const auto b = testing::random_prime_code(rng, 3, n, n - 1);
        const auto da = brute_force_distance(a, 2, n).distance;
        const auto db = brute_force_distance(b, 3, n).distance;
        ASSERT_TRUE(da && db);
        const auto dm = brute_force_distance(mix_codes({{2, a}, {3, b}}, 6), 6, n).distance;
        ASSERT_TRUE(dm);
        EXPECT_GE(*dm, std::min(*da, *db));
        ++checked;
    }
    EXPECT_EQ(checked, 30);
}

TEST(BlockEmbed, IdentityAndPadding) {
    const StabilizerCode five = codes::five_qubit();
    EXPECT_EQ(block_embed(five, 5, 0), five);
    const StabilizerCode padded = block_embed(five, 35, 5);
    EXPECT_EQ(padded.n(), 35);
    const IntMatrix& g = padded.generators();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index k = 0; k < 35; ++k) {
            if (k >= 5 && k < 10) continue;
            EXPECT_EQ(g(i, k), 0);
            EXPECT_EQ(g(i, 35 + k), 0);
        }
    }
    EXPECT_THROW(block_embed(five, 7, 3), std::invalid_argument);
}

TEST(BlockEmbed, PreservesDistanceInsideTheBlock) {
    const StabilizerCode five = codes::five_qubit();
    const StabilizerCode padded = block_embed(five, 7, 1);
    // Outside the block every single-register error is undetectable; restrict
    // to the block by deleting the two idle registers again.
    IntMatrix inner(padded.num_generators(), 10);
    inner.leftCols(5) = padded.generators().middleCols(1, 5);
    inner.rightCols(5) = padded.generators().middleCols(8, 5);
    EXPECT_EQ(brute_force_distance(StabilizerCode(5, Modulus::finite(2), inner), 2, 3).distance, 3);
    EXPECT_EQ(brute_force_distance(padded, 2, 3).distance, 1);
}

TEST(TileBlocks, GroupOrderMultiplies) {
    const StabilizerCode tiled = tile_blocks(codes::five_qubit(), 3);
    EXPECT_EQ(tiled.n(), 15);
    EXPECT_TRUE(validate(tiled).valid());
    EXPECT_EQ(subgroup_order(tiled.generators(), 2), pow(Integer(16), 3));
}

TEST(GaugeFix, AppendingNothingIsIdentity) {
    const StabilizerCode five = codes::five_qubit();
    EXPECT_EQ(gauge_fix_to_integer_k(five, {}), five);
}

TEST(GaugeFix, RejectsNonCommutingOrMemberOperators) {
    const StabilizerCode five = codes::five_qubit();
    EXPECT_THROW(gauge_fix_to_integer_k(five, {PauliVec({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, Modulus::finite(2))}),
                 std::invalid_argument);
    EXPECT_THROW(gauge_fix_to_integer_k(five, {five.generator(0)}), std::invalid_argument);
    const PauliVec z_bar({0, 0, 0, 0, 0, 1, 1, 1, 1, 1}, Modulus::finite(2));
    const PauliVec x_bar({1, 1, 1, 1, 1, 0, 0, 0, 0, 0}, Modulus::finite(2));
    EXPECT_THROW(gauge_fix_to_integer_k(five, {z_bar, x_bar}), std::invalid_argument);
    const StabilizerCode fixed = gauge_fix_to_integer_k(five, {z_bar});
    EXPECT_TRUE(validate(fixed).valid());
    EXPECT_EQ(logical_dimension(fixed, 2).K, 1);
}

TEST(KnownCodes, Catalogue) {
    const StabilizerCode five = codes::five_qubit();
    EXPECT_EQ(five.num_generators(), 4);
    EXPECT_EQ(brute_force_distance(five, 2, 3).distance, 3);

    const StabilizerCode rep = codes::repetition_z(2, 3);
    EXPECT_EQ(rep.num_generators(), 2);
    EXPECT_EQ(logical_dimension(rep, 2).K, 2);
    EXPECT_EQ(brute_force_distance(rep, 2, 3).distance, 1);

    const StabilizerCode qutrit = codes::five_qudit(3);
    EXPECT_TRUE(validate(qutrit).valid());
    EXPECT_EQ(brute_force_distance(qutrit, 3, 3).distance, 3);
    EXPECT_EQ(brute_force_distance(codes::five_qudit(7), 7, 3).distance, 3);

    EXPECT_EQ(brute_force_distance(codes::steane(), 2, 3).distance, 3);
    EXPECT_TRUE(std::holds_alternative<LdiCode>(codes::known_code("steane_ldi")));
    EXPECT_EQ(std::get<StabilizerCode>(codes::known_code("repetition_x:3:4")), codes::repetition_x(3, 4));
    EXPECT_THROW(codes::known_code("five_qudit"), std::invalid_argument);
    EXPECT_THROW(codes::known_code("toric"), std::invalid_argument);
    EXPECT_THROW(codes::five_qudit(4), std::invalid_argument);
}

}  // namespace
}  // namespace cqec
