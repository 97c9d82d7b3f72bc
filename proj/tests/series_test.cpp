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
#include "jqforge/series.hpp"
#include "test_util.hpp"

using namespace jqforge;
using jqforge::testing::randomPoly;

namespace {

OpElement op(const char* s) { return OpElement::parse(s); }

mpz_class factorial(unsigned n)
{
    mpz_class f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

TruncatedSeries logSeries(int sign, unsigned order)
{
    TruncatedSeries s(1, order, DyadicScalar(1));
    for (unsigned n = 1; n <= order; ++n)
        s.setCoefficient(n, DyadicScalar(mpz_class(n % 2 ? -sign : sign), mpz_class(n)));
    return s;
}

}  // namespace

TEST(Series, StencilMatchesThreeTermRecursion)
{
    for (DyadicScalar x0 : {DyadicScalar(1), DyadicScalar(2), DyadicScalar(1, 3)}) {
        auto st = recurrenceStencil(op("Jq1 - Jq0"), x0);
        for (long n = 1; n <= 10; ++n) {
            EXPECT_EQ(st[-1].eval(n), DyadicScalar(n - 1));
            EXPECT_EQ(st[0].eval(n), DyadicScalar(2 * n) * x0 - 1);
            EXPECT_EQ(st[1].eval(n), x0 * x0 * DyadicScalar(n + 1));
        }
    }
}

TEST(Series, StencilAgreesWithDirectApplication)
{
    std::mt19937 rng(8);
    for (const char* s : {"Jq1 - Jq0", "Jq2 + 3*Jq1", "Jq2.Jq1 - 1/3*Jq3"}) {
        OpElement e = op(s);
        for (DyadicScalar x0 : {DyadicScalar(1), DyadicScalar(-2)}) {
            Polynomial p = randomPoly(rng, 1, 10, 6);
            TruncatedSeries in(p, 10, x0);
            TruncatedSeries out = seriesApplyOp(e, in);
            auto st = recurrenceStencil(e, x0);
            for (unsigned r = 0; r <= out.order(); ++r) {
                DyadicScalar want = 0;
                for (const auto& [shift, poly] : st) {
                    long idx = static_cast<long>(r) + shift;
                    if (idx >= 0)
                        want += poly.eval(static_cast<long>(r)) * in.coefficient(static_cast<unsigned>(idx));
                }
                EXPECT_EQ(out.coefficient(r), want) << s << " r=" << r;
            }
        }
    }
}

TEST(Series, CenteredApplicationMatchesPolynomialAction)
{
    std::mt19937 rng(12);
    for (int i = 0; i < 20; ++i) {
        Polynomial p = randomPoly(rng, 1, 6, 4);
        DyadicScalar x0 = i % 2 ? DyadicScalar(3) : DyadicScalar(1, 2);
        TruncatedSeries in(shiftToCenter(p, x0), 20, x0);
        OpElement e = op("Jq2 - Jq1.Jq1 + 2");
        TruncatedSeries out = seriesApplyOp(e, in);
        EXPECT_EQ(out.expanded(), evalElement(e, p));
        EXPECT_EQ(out.order(), 18u);
    }
}

TEST(Series, SolveAtOne)
{
    Sode eq = Sode::parse("Jq1 - Jq0", "0");
    SodeSolution sol = sodeSolve(eq, 1, 1, 16);
    ASSERT_TRUE(sol.series);
    EXPECT_EQ(sol.series->coefficient(0), 1);
    EXPECT_EQ(sol.series->coefficient(1), 1);
    EXPECT_EQ(sol.series->coefficient(2), DyadicScalar(-1, 2));
    ResidualReport r = sodeResidual(eq, *sol.series, 16);
    EXPECT_TRUE(r.ok);
    EXPECT_GE(r.verifiedThrough, 15);
}

TEST(Series, NoSolutionAtZero)
{
    SodeSolution sol = sodeSolve(Sode::parse("Jq1 - Jq0", "0"), 0, 1, 16);
    EXPECT_FALSE(sol.series);
    EXPECT_TRUE(sol.inconsistentIndex);
    EXPECT_FALSE(sol.reason.empty());
}

TEST(Series, LogarithmSolvesJq1)
{
    Sode eq = Sode::parse("Jq1", "x1");
    EXPECT_TRUE(sodeResidual(eq, logSeries(-1, 13), 12).ok);
    ResidualReport bad = sodeResidual(eq, logSeries(1, 13), 12);
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.failDegree, 0u);
}

TEST(Series, GeometricInverse)
{
    TruncatedSeries g = geometricInverse(1, Polynomial::parse("x1"), 20);
    for (unsigned k = 0; k <= 19; ++k)
        EXPECT_EQ(g.coefficient(k + 1), DyadicScalar(factorial(k))) << k;
    EXPECT_TRUE(sodeResidual(Sode::parse("Jq0 - Jq1", "x1"), g, 20).ok);
    TruncatedSeries g2 = geometricInverse(2, Polynomial::parse("x1"), 12);
    EXPECT_TRUE(sodeResidual(Sode::parse("Jq0 - Jq2", "x1"), g2, 12).ok);
}

TEST(Series, VariableCoefficientParsing)
{
    Sode eq = Sode::parse("[x1^2]*Jq1 - Jq0", "0");
    ASSERT_EQ(eq.terms.size(), 2u);
    EXPECT_THROW(eq.constantOperator(), UnsupportedCoefficientsError);
    EXPECT_EQ(Sode::parse("Jq1 - Jq0", "0").constantOperator(), op("Jq1 - Jq0"));
    EXPECT_THROW(Sode::parse("[x1*Jq1", "0"), ParseError);
}

TEST(Series, TateCheck)
{
    TruncatedSeries fact(1, 41), geo2(1, 40), geo1(1, 40);
    for (unsigned k = 0; k <= 40; ++k) {
        fact.setCoefficient(k + 1, DyadicScalar(factorial(k)));
        geo2.setCoefficient(k, DyadicScalar(mpz_class(mpz_class(1) << k)));
        geo1.setCoefficient(k, 1);
    }
    EXPECT_EQ(tateCheck(fact).verdict, TateVerdict::pass);
    EXPECT_EQ(tateCheck(geo2).verdict, TateVerdict::pass);
    EXPECT_EQ(tateCheck(geo1).verdict, TateVerdict::fail);
    EXPECT_EQ(tateCheck(TruncatedSeries(Polynomial::parse("x1 + 1"), 30)).verdict, TateVerdict::pass);
}
