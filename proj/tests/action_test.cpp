/*
 * Copyright 2026 The jqforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <gtest/gtest.h>

#include "jqforge/action.hpp"
#include "jqforge/error.hpp"
#include "test_util.hpp"

using namespace jqforge;
using jqforge::testing::poly;
using jqforge::testing::randomPoly;

TEST(Action, BinomialOnPowers)
{
    for (unsigned m = 0; m <= 14; ++m)
        for (unsigned k = 0; k <= m + 2; ++k)
            EXPECT_EQ(applyJq(k, Polynomial::variable(1, 1, m)), Polynomial::variable(1, 1, m + k, binom(m, k)));
}

TEST(Action, ConstantsAndTopSquare)
{
    EXPECT_TRUE(applyJq(1, poly("5", 2)).isZero());
    EXPECT_EQ(applyJq(0, poly("5", 2)), poly("5", 2));
    std::mt19937 rng(1);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = gradedPart(randomPoly(rng, 2, 5), 3);
        Polynomial squared(2);
        for (const auto& [m, c] : f.terms())
            squared.addTerm(MultiIndex{2 * m[0], 2 * m[1]}, c);
        EXPECT_EQ(applyJq(3, f), squared);
        EXPECT_TRUE(applyJq(4, f).isZero());
    }
}

TEST(Action, CartanFormula)
{
    std::mt19937 rng(2026);
    for (int i = 0; i < 300; ++i) {
        unsigned k = rng() % 7;
        Polynomial f = randomPoly(rng, 3, 4, 3), g = randomPoly(rng, 3, 4, 3);
        Polynomial sum(3);
        for (unsigned a = 0; a <= k; ++a)
            sum += applyJq(a, f) * applyJq(k - a, g);
        EXPECT_EQ(applyJq(k, f * g), sum);
    }
}

TEST(Action, TotalSquareIsRingMapAndSumOfPieces)
{
    std::mt19937 rng(9);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = randomPoly(rng, 2, 4), g = randomPoly(rng, 2, 4);
        EXPECT_EQ(applyTotal(f * g), applyTotal(f) * applyTotal(g));
        Polynomial sum(2);
        for (unsigned k = 0; k <= 4; ++k)
            sum += applyJq(k, f);
        EXPECT_EQ(applyTotal(f), sum);
        EXPECT_EQ(applyPsiQ(DyadicScalar(1, 3), f * g), applyPsiQ(DyadicScalar(1, 3), f) * applyPsiQ(DyadicScalar(1, 3), g));
        EXPECT_EQ(applyPsiQ(1, f), applyTotal(f));
    }
}

TEST(Action, ConjugateTotalInvertsTotal)
{
    std::mt19937 rng(4);
    for (int i = 0; i < 30; ++i) {
        Polynomial f = randomPoly(rng, 2, 3);
        unsigned N = 9;
        TruncatedSeries s = applyConjTotal(applyTotal(f), N);
        EXPECT_EQ(truncate(s.expanded(), N), truncate(f, N));
    }
}

TEST(Action, GaussNormNonIncreasing)
{
    std::mt19937 rng(6);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = randomPoly(rng, 3, 5);
        for (unsigned k = 1; k <= 5; ++k)
            EXPECT_LE(gaussNorm(applyJq(k, f)), gaussNorm(f));
    }
}

TEST(Action, AffinoidRegression) { EXPECT_EQ(applyJq(1, poly("2*x2 - x1^2")), poly("2*x2^2 - 2*x1^3")); }

TEST(Action, InverseOperationsOnPowers)
{
    for (unsigned k = 0; k <= 6; ++k)
        EXPECT_EQ(jqOnInverseMonomial(k).sign, k % 2 ? -1 : 1);
    EXPECT_EQ(jqOnInverseMonomial(3).exponent, 2);
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned m = 2 * k; m <= 14; ++m) {
            DyadicScalar c = applyJqNeg(k, m);
            EXPECT_EQ(applyJq(k, Polynomial::variable(1, 1, m - k, c)), Polynomial::variable(1, 1, m));
        }
    EXPECT_THROW(applyJqNeg(2, 3), DomainError);
}
