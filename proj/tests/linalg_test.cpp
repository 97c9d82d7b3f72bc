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

#include "jqforge/linalg.hpp"
#include "test_util.hpp"

using namespace jqforge;

namespace {

QMatrix ints(std::initializer_list<std::initializer_list<long>> rows)
{
    QMatrix m;
    for (auto r : rows)
        m.emplace_back(r.begin(), r.end());
    return m;
}

}  // namespace

TEST(Linalg, RankAndNullspace)
{
    QMatrix m = ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    EXPECT_EQ(rank(m, 3), 2u);
    auto ns = nullspace(m, 3);
    ASSERT_EQ(ns.size(), 1u);
    for (DyadicScalar x : matVec(m, ns[0]))
        EXPECT_TRUE(x.isZero());
    EXPECT_EQ(primitiveIntegerVector(ns[0]), (QVector{1, 1, -1}));
    EXPECT_TRUE(nullspace(ints({{1, 0}, {0, 1}}), 2).empty());
}

TEST(Linalg, Solve)
{
    QMatrix m = ints({{2, 1}, {1, 3}});
    auto x = solve(m, 2, {3, 4});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (QVector{1, 1}));
    EXPECT_FALSE(solve(ints({{1, 1}, {2, 2}}), 2, {1, 3}));
}

TEST(Linalg, PrimitiveVector)
{
    EXPECT_EQ(primitiveIntegerVector({DyadicScalar(1, 2), DyadicScalar(-1, 3)}), (QVector{3, -2}));
    EXPECT_EQ(primitiveIntegerVector({0, -4, 6}), (QVector{0, 2, -3}));
}

TEST(Linalg, RowBasis)
{
    RowBasis b(3);
    EXPECT_TRUE(b.insert({2, 4, 0}));
    EXPECT_TRUE(b.contains({1, 2, 0}));
    EXPECT_FALSE(b.insert({3, 6, 0}));
    EXPECT_TRUE(b.insert({0, 1, 1}));
    EXPECT_EQ(b.rank(), 2u);
    EXPECT_FALSE(b.contains({0, 0, 1}));
}

TEST(Linalg, DyadicLattice)
{
    Lattice2 even({{2}}, 1);
    EXPECT_TRUE(even.contains({4}));
    EXPECT_TRUE(even.contains({DyadicScalar(2, 3)}));
    EXPECT_FALSE(even.contains({1}));
    Lattice2 unit({{3}}, 1);
    auto c = unit.represent({1});
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)[0], DyadicScalar(1, 3));

    std::vector<QVector> gens = {{2, 0}, {1, 1}, {0, 4}};
    Lattice2 l(gens, 2);
    QVector target{3, 1};
    auto r = l.represent(target);
    ASSERT_TRUE(r);
    QVector back(2);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        EXPECT_TRUE((*r)[i].inZ2());
        for (std::size_t j = 0; j < 2; ++j)
            back[j] += (*r)[i] * gens[i][j];
    }
    EXPECT_EQ(back, target);
    EXPECT_FALSE(l.contains({0, 1}));
}

TEST(Linalg, F2)
{
    std::vector<std::vector<int>> m = {{1, 1, 0}, {0, 1, 1}};
    auto ns = nullspaceF2(m, 3);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0], (std::vector<int>{1, 1, 1}));
    auto x = solveF2(m, 3, {1, 0});
    ASSERT_TRUE(x);
    EXPECT_EQ(((*x)[0] + (*x)[1]) % 2, 1);
    EXPECT_FALSE(solveF2({{1, 1}, {1, 1}}, 2, {1, 0}));
}
