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

#include "jqforge/error.hpp"
#include "jqforge/evaluation.hpp"
#include "jqforge/relations.hpp"
#include "test_util.hpp"

using namespace jqforge;

namespace {

OpElement op(const char* s) { return OpElement::parse(s); }

}  // namespace

TEST(Relations, WordLists)
{
    EXPECT_EQ(tPartitionWords(4, 2), (std::vector<OpWord>{{4}, {3, 1}, {2, 2}, {1, 3}}));
    EXPECT_EQ(compositions(3), (std::vector<OpWord>{{3}, {2, 1}, {1, 2}, {1, 1, 1}}));
    for (const OpWord& w : binaryWords(6))
        for (unsigned a : w)
            EXPECT_EQ(a & (a - 1), 0u);
    EXPECT_EQ(oneTwoWords(4).size(), 5u);
}

TEST(Relations, AdemThree)
{
    RelationBasis rb = ademNullspace(3, compositions(3));
    ASSERT_EQ(rb.basis.size(), 1u);
    EXPECT_EQ(rb.basis[0], (QVector{3, -6, 3, 1}));
    EXPECT_TRUE(rb.multivariable[0]);
    RelationBasis ev = relationNullspace(3, compositions(3));
    ASSERT_EQ(ev.basis.size(), 1u);
    EXPECT_EQ(ev.basis[0], rb.basis[0]);
}

TEST(Relations, TwoPartitionRelationsOnPowers)
{
    RelationBasis a4 = ademNullspace(4, tPartitionWords(4, 2));
    ASSERT_EQ(a4.basis.size(), 1u);
    EXPECT_EQ(a4.basis[0], (QVector{2, -3, 1, 1}));
    RelationBasis a5 = ademNullspace(5, tPartitionWords(5, 2));
    ASSERT_EQ(a5.basis.size(), 1u);
    EXPECT_EQ(a5.basis[0], (QVector{5, -5, 0, 1, 2}));
    RelationBasis a6 = ademNullspace(6, tPartitionWords(6, 2));
    ASSERT_EQ(a6.basis.size(), 1u);
    EXPECT_EQ(a6.basis[0], (QVector{9, -7, 0, 0, 1, 3}));
    EXPECT_EQ(ademNullspace(7, tPartitionWords(7, 2)).basis.size(), 2u);
    for (const RelationBasis* rb : {&a4, &a5, &a6})
        EXPECT_FALSE(rb->multivariable[0]);
}

TEST(Relations, NoTwoPartitionOperatorRelations)
{
    for (unsigned k = 4; k <= 7; ++k)
        EXPECT_TRUE(relationNullspace(k, tPartitionWords(k, 2)).basis.empty()) << k;
}

TEST(Relations, RelationsVanishAsOperators)
{
    for (unsigned k = 2; k <= 5; ++k) {
        RelationBasis rb = relationNullspace(k, compositions(k));
        EXPECT_EQ(rb.basis.size(), compositions(k).size() - partitionCount(k)) << k;
        for (std::size_t i = 0; i < rb.basis.size(); ++i)
            EXPECT_TRUE(equalByEvaluation(rb.element(i), OpElement()));
    }
}

TEST(Relations, BinaryDecomposition)
{
    EXPECT_EQ(binaryDecompose(3), op("2*Jq2.Jq1 - Jq1.Jq2 - 1/3*Jq1.Jq1.Jq1"));
    for (unsigned k : {3u, 5u, 6u, 7u}) {
        OpElement e = binaryDecompose(k);
        EXPECT_TRUE(e.hasZ2Coefficients());
        EXPECT_TRUE(equalByEvaluation(e, OpElement::generator(k))) << k;
        for (const auto& [w, c] : e.terms())
            for (unsigned a : w)
                EXPECT_EQ(a & (a - 1), 0u);
    }
    for (unsigned k : {1u, 2u, 4u, 8u})
        EXPECT_THROW(binaryDecompose(k), IndecomposableError) << k;
}

TEST(Relations, OneTwoDecomposition)
{
    for (unsigned k = 1; k <= 7; ++k) {
        OpElement e = q12Decompose(k);
        EXPECT_TRUE(equalByEvaluation(e, OpElement::generator(k))) << k;
    }
}

TEST(Relations, OreCondition)
{
    auto p = oreSolveDefault(op("Jq1"), op("Jq2"));
    ASSERT_TRUE(p);
    EXPECT_FALSE(p->x.isZero());
    EXPECT_FALSE(p->y.isZero());
    EXPECT_TRUE(equalByEvaluation(op("Jq1") * p->x, op("Jq2") * p->y));
    EXPECT_FALSE(p->log.empty());

    auto f = fractionAdd(op("1"), op("Jq1"), op("1"), op("Jq2"));
    ASSERT_TRUE(f);
    EXPECT_FALSE(f->denominator.isZero());
}

TEST(Relations, Ranks)
{
    for (unsigned d = 1; d <= 3; ++d)
        EXPECT_EQ(rankEstimate(d, 4, 16).rank, d);
    for (unsigned d = 4; d <= 6; ++d) {
        RankReport r = rankEstimate(d, 4, 16);
        EXPECT_EQ(r.rank, partitionCount(d));
        EXPECT_TRUE(r.saturated);
    }
    EXPECT_LT(rankEstimate(4, 1, 16).rank, partitionCount(4));
}
