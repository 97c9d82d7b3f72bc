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
#include "jqforge/poly.hpp"
#include "jqforge/truncated_series.hpp"
#include "test_util.hpp"

using namespace jqforge;
using jqforge::testing::poly;
using jqforge::testing::randomPoly;

TEST(Poly, ParseFormatRoundTrip)
{
    for (const char* s : {"3*x1^2*x2 - 1/3*x2^4", "x1", "-x3 + 2", "0", "1/3*x1^6"}) {
        Polynomial f = poly(s);
        EXPECT_EQ(poly(f.str().c_str(), f.arity()), f) << s;
    }
    EXPECT_EQ(poly("x1*x1").str(), "x1^2");
}

TEST(Poly, ArityInferenceAndMismatch)
{
    EXPECT_EQ(poly("x3").arity(), 3u);
    EXPECT_EQ(poly("x1", 4).arity(), 4u);
    EXPECT_THROW(poly("x3", 2), Error);
    EXPECT_THROW(poly("x1 +"), ParseError);
    EXPECT_THROW(poly("y^2"), ParseError);
}

TEST(Poly, Arithmetic)
{
    EXPECT_EQ(polyPow(poly("x1 + x2"), 2), poly("x1^2 + 2*x1*x2 + x2^2"));
    EXPECT_EQ(polyMul(poly("x1 - 1"), poly("x1 + 1")), poly("x1^2 - 1"));
    EXPECT_TRUE((poly("x1") - poly("x1")).isZero());
    Polynomial f = poly("x1^3 + x1*x2 + 5");
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(f.lowDegree(), 0);
    EXPECT_EQ(truncate(f, 2), poly("x1*x2 + 5"));
    EXPECT_EQ(gradedPart(f, 3), poly("x1^3", 2));
    EXPECT_FALSE(f.isHomogeneous());
}

TEST(Poly, GaussNorm)
{
    EXPECT_EQ(gaussNorm(poly("4*x1 + 1/2*x2")), 2);
    EXPECT_EQ(gaussValuation(poly("4*x1 + 12*x2")), 2);
    EXPECT_EQ(gaussNorm(Polynomial(1)), 0);
}

TEST(Poly, GaussNormIsMultiplicative)
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = randomPoly(rng, 2, 4), g = randomPoly(rng, 2, 4);
        EXPECT_EQ(gaussNorm(f * g), gaussNorm(f) * gaussNorm(g));
    }
}

TEST(TruncatedSeries, CenterShiftRoundTrip)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = randomPoly(rng, 1, 8);
        for (DyadicScalar c : {DyadicScalar(1), DyadicScalar(-3), DyadicScalar(1, 2)})
            EXPECT_EQ(shiftFromCenter(shiftToCenter(p, c), c), p);
    }
    EXPECT_EQ(shiftToCenter(poly("x1^2"), 1), poly("x1^2 + 2*x1 + 1"));
}

TEST(TruncatedSeries, CoefficientsAndDisplay)
{
    TruncatedSeries s(1, 4, DyadicScalar(1));
    s.setCoefficient(0, 1);
    s.setCoefficient(1, 1);
    EXPECT_EQ(s.coefficient(1), 1);
    EXPECT_EQ(s.coefficient(3), 0);
    EXPECT_EQ(s.expanded(), poly("x1"));
    EXPECT_NE(s.str().find("O("), std::string::npos);
}
