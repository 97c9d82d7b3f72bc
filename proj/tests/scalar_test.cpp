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
#include "jqforge/scalar.hpp"
#include "jqforge/serialize.hpp"
#include "test_util.hpp"

using namespace jqforge;

TEST(Scalar, ParseFormatRoundTrip)
{
    for (const char* s : {"0", "1", "-6", "1/3", "-3/4", "12345678901234567890/7"}) {
        DyadicScalar a = DyadicScalar::parse(s);
        EXPECT_EQ(a.str(), s);
        EXPECT_EQ(DyadicScalar::parse(a.str()), a);
    }
    EXPECT_EQ(DyadicScalar::parse("6/4").str(), "3/2");
}

TEST(Scalar, ParseRejectsGarbage)
{
    for (const char* s : {"", "abc", "1/", "1//2", "x1"})
        EXPECT_THROW(DyadicScalar::parse(s), Error) << s;
}

TEST(Scalar, Valuation)
{
    EXPECT_EQ(DyadicScalar(12).valuation(), 2);
    EXPECT_EQ(DyadicScalar(1, 8).valuation(), -3);
    EXPECT_EQ(DyadicScalar(3, 5).valuation(), 0);
    EXPECT_EQ(DyadicScalar(0).valuation(), kInfiniteValuation);
    EXPECT_EQ(abs2(12), DyadicScalar(1, 4));
    EXPECT_EQ(abs2(DyadicScalar(1, 8)), 8);
    EXPECT_EQ(abs2(0), 0);
    EXPECT_EQ(pow2(-3), DyadicScalar(1, 8));
    EXPECT_EQ(v2(mpz_class(96)), 5);
}

TEST(Scalar, ValuationIsAdditive)
{
    for (long a = -20; a <= 20; ++a)
        for (long b = 1; b <= 20; ++b) {
            if (a == 0)
                continue;
            DyadicScalar x(a, b), y(b, 3);
            EXPECT_EQ((x * y).valuation(), x.valuation() + y.valuation());
            EXPECT_LE(abs2(x + y), std::max(abs2(x), abs2(y)));
        }
}

TEST(Scalar, Z2Membership)
{
    EXPECT_TRUE(DyadicScalar(1, 3).inZ2());
    EXPECT_FALSE(DyadicScalar(1, 2).inZ2());
    EXPECT_EQ(mod2Reduce(DyadicScalar(1, 3)), 1);
    EXPECT_EQ(mod2Reduce(DyadicScalar(2, 3)), 0);
    EXPECT_EQ(mod2Reduce(-7), 1);
    EXPECT_THROW(mod2Reduce(DyadicScalar(1, 2)), NotInZ2Error);
}

TEST(Scalar, Binomials)
{
    EXPECT_EQ(binom(5, 2), 10);
    EXPECT_EQ(binom(3, 5), 0);
    EXPECT_EQ(binom(4, -1), 0);
    EXPECT_EQ(binom(60, 30), mpz_class("118264581564861424"));
    EXPECT_THROW(binom(-1, 0), DomainError);
}

TEST(Scalar, TwoAdicDigits)
{
    EXPECT_EQ(twoAdicDigits(DyadicScalar(1, 3), 8), "...10101011");
    EXPECT_EQ(twoAdicDigits(DyadicScalar(3, 4), 8), "...000000.11");
    EXPECT_EQ(twoAdicDigits(-1, 4), "...1111");
}
