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
#include "jqforge/reference_checks.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "jqforge/action.hpp"
#include "jqforge/classical.hpp"
#include "jqforge/error.hpp"
#include "jqforge/evaluation.hpp"
#include "jqforge/hit.hpp"
#include "jqforge/norms.hpp"
#include "jqforge/opalg.hpp"
#include "jqforge/relations.hpp"
#include "jqforge/series.hpp"

namespace jqforge {

std::string statusName(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "PASS";
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::diverges:
        return "DIVERGES";
    }
    return "?";
}

namespace {

enum class Expect { holds, misprint };

class Suite {
public:
    void add(std::string id, std::string claim, bool ok, std::string detail, Expect expect = Expect::holds)
    {
        CheckStatus s = ok ? CheckStatus::pass : expect == Expect::misprint ? CheckStatus::diverges : CheckStatus::fail;
        rows_.push_back({std::move(id), std::move(claim), s, std::move(detail)});
    }

    /* Runs fn; an exception becomes a FAIL row. */
    template <class Fn>
    void guarded(const std::string& id, const std::string& claim, Fn fn)
    {
        try {
            fn();
        } catch (const std::exception& ex) {
            rows_.push_back({id, claim, CheckStatus::fail, std::string("exception: ") + ex.what()});
        }
    }

    std::vector<ReferenceCheck> take() { return std::move(rows_); }

private:
    std::vector<ReferenceCheck> rows_;
};

OpElement op(const char* s) { return OpElement::parse(s); }
Polynomial poly(const char* s, std::size_t arity = 0) { return Polynomial::parse(s, arity); }

DyadicScalar q(long n, long d = 1) { return DyadicScalar(mpz_class(n), mpz_class(d)); }

/* The first test monomial on which a and b differ, rendered for a detail line. */
std::string differenceWitness(const OpElement& a, const OpElement& b)
{
    OpElement diff = a - b;
    if (diff.isZero())
        return "identical";
    EvalBounds bounds = defaultEvalBounds(std::max(a.maxDegree(), b.maxDegree()));
    for (const auto& mu : testMonomials(bounds)) {
        Polynomial image = evalElement(diff, Polynomial::monomial(mu));
        if (!image.isZero())
            return "difference on " + formatMonomial(mu) + " is " + image.str();
    }
    return "no witness within " + std::to_string(bounds.nVars) + " variables, degree " +
           std::to_string(bounds.degBound);
}

std::string symbolicText(const OpElement& e)
{
    SymbolicPoly p = evaluateOnPower(e);
    return p.isZero() ? "0" : p.str();
}

/* Symbolic and multivariable vanishing of an expansion, as one detail line. */
struct Vanishing {
    bool onPowers;
    bool asOperator;
    std::string detail;
};

Vanishing vanishing(const OpElement& e)
{
    Vanishing v;
    v.onPowers = evaluateOnPower(e).isZero();
    v.asOperator = equalByEvaluation(e, OpElement());
    std::ostringstream os;
    os << "on xi^m: " << symbolicText(e);
    if (!v.asOperator)
        os << "; " << differenceWitness(e, OpElement());
    v.detail = os.str();
    return v;
}

std::string certificateText(const HitResult& r)
{
    if (!r.hit)
        return "not hit";
    std::string s = "hit:";
    for (const auto& [k, p] : r.certificate->pairs)
        s += " (" + std::to_string(k) + ", " + p.str() + ")";
    return s;
}

bool singlePair(const HitResult& r, unsigned k, const Polynomial& cofactor)
{
    return r.hit && r.certificate->pairs.size() == 1 && r.certificate->pairs[0].first == k &&
           r.certificate->pairs[0].second == cofactor;
}

TruncatedSeries centeredSeries(const DyadicScalar& center, unsigned order, auto coeff)
{
    TruncatedSeries s(1, order, center);
    for (unsigned n = 0; n <= order; ++n)
        s.setCoefficient(n, coeff(n));
    return s;
}

std::string residualText(const ResidualReport& r)
{
    if (r.ok)
        return "residual vanishes through degree " + std::to_string(r.verifiedThrough);
    return "residual coefficient " + r.failCoefficient.str() + " at degree " + std::to_string(*r.failDegree);
}

mpz_class factorial(unsigned n)
{
    mpz_class f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/* ---------------------------------------------------------------- action */

void actionChecks(Suite& s)
{
    s.guarded("binomial-action", "Jq^k(x^d) = C(d,k) x^(d+k)", [&] {
        bool ok = applyJq(1, poly("x1^3")) == poly("3*x1^4");
        for (unsigned d = 0; d <= 12 && ok; ++d)
            for (unsigned k = 0; k <= d + 1 && ok; ++k)
                ok = applyJq(k, Polynomial::variable(1, 1, d)) == Polynomial::variable(1, 1, d + k, binom(d, k));
        s.add("binomial-action", "Jq^k(x^d) = C(d,k) x^(d+k)", ok, "Jq1(x1^3) = " + applyJq(1, poly("x1^3")).str());
    });

    s.guarded("constants-annihilated", "Jq^k(a) = 0 for k > 0", [&] {
        bool ok = true;
        for (long a : {1L, 2L, -3L})
            for (unsigned k = 1; k <= 4; ++k)
                ok = ok && applyJq(k, Polynomial::constant(2, q(a, 3))).isZero();
        s.add("constants-annihilated", "Jq^k(a) = 0 for k > 0", ok, "a in {1/3, 2/3, -1}, k <= 4");
    });

    s.guarded("monic-top-square", "Jq^d(f) = f^2 and Jq^k(f) = 0 for k > d, f a monic monomial of degree d", [&] {
        bool ok = true;
        for (const char* m : {"x1", "x1^3", "x1*x2", "x1^2*x2*x3", "x2^4*x3"}) {
            Polynomial f = poly(m, 3);
            unsigned d = static_cast<unsigned>(f.degree());
            ok = ok && applyJq(d, f) == polyMul(f, f) && applyJq(d + 1, f).isZero() && applyJq(d + 2, f).isZero();
        }
        s.add("monic-top-square", "Jq^d(f) = f^2 and Jq^k(f) = 0 for k > d, f a monic monomial of degree d", ok,
              "five monomials in three variables");
    });

    s.guarded("gauss-norm-bound", "|Jq^k(f)|_2 <= |f|_2", [&] {
        bool ok = true;
        for (const char* f : {"1/3*x1^2*x2 - 5*x2^3", "1/2*x1*x2 + x2^2", "7/4*x1^5 - x1^2*x2^3"}) {
            Polynomial p = poly(f, 2);
            for (unsigned k = 1; k <= 6; ++k)
                ok = ok && gaussNorm(applyJq(k, p)) <= gaussNorm(p);
        }
        s.add("gauss-norm-bound", "|Jq^k(f)|_2 <= |f|_2", ok, "three polynomials, k <= 6");
    });

    s.guarded("affinoid-image", "Jq1(2 x2 - x1^2) = 2 x2^2 - 2 x1^3", [&] {
        Polynomial got = applyJq(1, poly("2*x2 - x1^2", 2));
        s.add("affinoid-image", "Jq1(2 x2 - x1^2) = 2 x2^2 - 2 x1^3", got == poly("2*x2^2 - 2*x1^3", 2), got.str());
    });
}

/* ------------------------------------------------------------- relations */

void relationChecks(Suite& s)
{
    s.guarded("adem3-expansion", "3 Jq3 - 6 Jq2.Jq1 + 3 Jq1.Jq2 + Jq1.Jq1.Jq1 = 0, unique up to scale", [&] {
        RelationBasis rb = ademNullspace(3, compositions(3));
        OpElement a3 = op("3*Jq3 - 6*Jq2.Jq1 + 3*Jq1.Jq2 + Jq1.Jq1.Jq1");
        bool ok = rb.basis.size() == 1 && rb.multivariable[0] && equalByEvaluation(a3, OpElement()) &&
                  rb.element(0) == a3;
        s.add("adem3-expansion", "3 Jq3 - 6 Jq2.Jq1 + 3 Jq1.Jq2 + Jq1.Jq1.Jq1 = 0, unique up to scale", ok,
              "nullspace dimension " + std::to_string(rb.basis.size()) +
                  (rb.basis.empty() ? std::string() : ", basis " + rb.element(0).str()));
    });

    s.guarded("adem3-powers-polynomial", "displayed cubic in m for a Jq3 + b Jq2.Jq1 + c Jq1.Jq2 + d Jq1^3 on xi^m", [&] {
        // Columns scaled by 6, as in the display: (m^3, m^2, m) per unknown.
        const char* words[] = {"Jq3", "Jq2.Jq1", "Jq1.Jq2", "Jq1.Jq1.Jq1"};
        const long shown[4][3] = {{3, -3, 2}, {3, 3, 0}, {3, 3, -6}, {6, 18, 12}};
        std::ostringstream os;
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            SymbolicPoly p = evaluateOnPower(op(words[i])) * DyadicScalar(6);
            auto c = p.coefficients();
            c.resize(4);
            for (int j = 0; j < 3; ++j)
                if (c[3 - j] != DyadicScalar(shown[i][j])) {
                    ok = false;
                    os << words[i] << ": m^" << 3 - j << " coefficient is " << c[3 - j].str() << ", shown "
                       << shown[i][j] << "; ";
                }
        }
        s.add("adem3-powers-polynomial", "displayed cubic in m for a Jq3 + b Jq2.Jq1 + c Jq1.Jq2 + d Jq1^3 on xi^m",
              ok, ok ? "all coefficients agree" : os.str() + "the displayed system does not admit (3,-6,3,1)",
              Expect::misprint);
    });

    struct Displayed {
        const char* id;
        const char* text;
        Expect onPowers, asOperator;
    };
    const Displayed shown[] = {
        {"adem4", "2*Jq4 - 3*Jq3.Jq1 + Jq2.Jq2 + Jq1.Jq3", Expect::holds, Expect::misprint},
        {"adem5", "5*Jq5 - 5*Jq4.Jq1 + Jq2.Jq3 - 2*Jq1.Jq4", Expect::misprint, Expect::misprint},
        {"adem6", "9*Jq6 - 7*Jq5.Jq1 + Jq2.Jq4 + 3*Jq1.Jq5", Expect::holds, Expect::misprint},
    };
    for (const auto& d : shown) {
        std::string claim = std::string(d.text) + " = 0";
        s.guarded(std::string(d.id) + "-on-powers", claim + " on xi^m", [&] {
            Vanishing v = vanishing(op(d.text));
            std::string detail = "on xi^m: " + symbolicText(op(d.text));
            if (!v.onPowers) {
                unsigned k = op(d.text).degree();
                RelationBasis rb = ademNullspace(k, tPartitionWords(k, 2));
                for (std::size_t i = 0; i < rb.basis.size(); ++i)
                    detail += "; computed " + rb.element(i).str();
            }
            s.add(std::string(d.id) + "-on-powers", claim + " on xi^m", v.onPowers, detail, d.onPowers);
        });
        s.guarded(std::string(d.id) + "-as-operator", claim + " on all polynomials", [&] {
            Vanishing v = vanishing(op(d.text));
            s.add(std::string(d.id) + "-as-operator", claim + " on all polynomials", v.asOperator, v.detail,
                  d.asOperator);
        });
    }

    auto a7 = [](const DyadicScalar& a, const DyadicScalar& b) {
        std::vector<OpWord> words = {{7}, {6, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 5}, {1, 6}};
        std::vector<DyadicScalar> c = {q(-14, 3) * a + q(14, 3) * b, q(29, 3) * a - q(14, 3) * b,
                                       q(-28, 3) * a + q(7, 3) * b,  q(28, 15) * a - q(7, 15) * b,
                                       q(4, 3) * a - q(1, 3) * b,    a,
                                       b};
        return combine(words, c);
    };
    s.guarded("adem7-family-on-powers", "A_7(a,b) vanishes on xi^m; the 2-partition nullspace has dimension 2", [&] {
        RelationBasis rb = ademNullspace(7, tPartitionWords(7, 2));
        bool ok = rb.basis.size() == 2 && evaluateOnPower(a7(1, 0)).isZero() && evaluateOnPower(a7(0, 1)).isZero();
        std::ostringstream os;
        os << "nullspace dimension " << rb.basis.size() << "; A_7(0,1) on x1^4:";
        const OpElement a701 = a7(0, 1);
        for (const auto& [w, c] : a701.terms()) {
            Polynomial img = evalElement(OpElement::word(w, c), poly("x1^4"));
            if (!img.isZero())
                os << " " << formatWord(w) << " -> " << img.str() << ";";
        }
        s.add("adem7-family-on-powers", "A_7(a,b) vanishes on xi^m; the 2-partition nullspace has dimension 2", ok,
              os.str());
    });
    s.guarded("adem7-family-as-operator", "A_7(a,b) = 0 on all polynomials", [&] {
        Vanishing v0 = vanishing(a7(1, 0)), v1 = vanishing(a7(0, 1));
        s.add("adem7-family-as-operator", "A_7(a,b) = 0 on all polynomials", v0.asOperator && v1.asOperator,
              "A_7(1,0): " + v0.detail + "; A_7(0,1): " + v1.detail, Expect::misprint);
    });

    s.guarded("two-partition-expansions-exist", "a nonzero 2-partition relation exists in each degree k >= 4", [&] {
        std::ostringstream os;
        bool ok = true;
        for (unsigned k = 4; k <= 7; ++k) {
            RelationBasis rb = relationNullspace(k, tPartitionWords(k, 2));
            RelationBasis sym = ademNullspace(k, tPartitionWords(k, 2));
            os << "k=" << k << ": operator nullspace " << rb.basis.size() << ", on xi^m " << sym.basis.size() << "; ";
            ok = ok && !rb.basis.empty();
        }
        s.add("two-partition-expansions-exist", "a nonzero 2-partition relation exists in each degree k >= 4", ok,
              os.str() + "relations found only on single-variable powers", Expect::misprint);
    });

    s.guarded("jq4-three-partition", "24 Jq4 - 12 Jq1.Jq1.Jq2 + 12 Jq1.Jq2.Jq1 - 12 Jq2.Jq1.Jq1 + Jq1^4 = 0", [&] {
        Vanishing v = vanishing(op("24*Jq4 - 12*Jq1.Jq1.Jq2 + 12*Jq1.Jq2.Jq1 - 12*Jq2.Jq1.Jq1 + Jq1.Jq1.Jq1.Jq1"));
        std::vector<OpWord> words = tPartitionWords(4, 3);
        words.push_back({1, 1, 1, 1});
        RelationBasis rb = ademNullspace(4, words);
        std::string computed;
        for (std::size_t i = 0; i < rb.basis.size(); ++i)
            computed += "; computed " + rb.element(i).str();
        s.add("jq4-three-partition", "24 Jq4 - 12 Jq1.Jq1.Jq2 + 12 Jq1.Jq2.Jq1 - 12 Jq2.Jq1.Jq1 + Jq1^4 = 0",
              v.asOperator, v.detail + computed, Expect::misprint);
    });

    s.guarded("jq3-in-jq1-jq2", "Jq3 = 2 Jq1.Jq2 - Jq2.Jq1 - 1/3 Jq1^3", [&] {
        OpElement shownRhs = op("2*Jq1.Jq2 - Jq2.Jq1 - 1/3*Jq1.Jq1.Jq1");
        OpElement fixed = op("2*Jq2.Jq1 - Jq1.Jq2 - 1/3*Jq1.Jq1.Jq1");
        bool ok = equalByEvaluation(op("Jq3"), shownRhs);
        std::string detail = differenceWitness(op("Jq3"), shownRhs) + "; Jq3 = " + fixed.str() + " holds: " +
                             (equalByEvaluation(op("Jq3"), fixed) ? "yes" : "no");
        s.add("jq3-in-jq1-jq2", "Jq3 = 2 Jq1.Jq2 - Jq2.Jq1 - 1/3 Jq1^3", ok, detail, Expect::misprint);
    });

    s.guarded("jq4-in-jq1-jq2", "displayed expression of Jq4 in Jq1, Jq2", [&] {
        OpElement rhs = op("3*Jq1.Jq2.Jq1 - 3/2*Jq2.Jq1.Jq1 - Jq1.Jq1.Jq2 + 1/2*Jq1.Jq2.Jq1 - 1/2*Jq2.Jq2 - "
                           "1/3*Jq1.Jq1.Jq1.Jq1");
        bool ok = equalByEvaluation(op("Jq4"), rhs);
        s.add("jq4-in-jq1-jq2", "displayed expression of Jq4 in Jq1, Jq2", ok,
              differenceWitness(op("Jq4"), rhs) + "; computed Jq4 = " + q12Decompose(4).str(), Expect::misprint);
    });

    struct Binary7 {
        const char* id;
        const char* text;
    };
    const Binary7 b7[] = {
        {"jq7-binary-even", "210*Jq7 + 280/3*Jq4.Jq1.Jq2 + 60*Jq1.Jq2.Jq4 - 700/9*Jq1.Jq4.Jq2 - 15*Jq2.Jq1.Jq4 + "
                            "125*Jq2.Jq4.Jq1 + 14*Jq4.Jq1.Jq1.Jq1"},
        {"jq7-binary-unit", "15*Jq7 + 6*Jq4.Jq2.Jq1 + 31/3*Jq4.Jq1.Jq2 + 65/7*Jq1.Jq2.Jq4 - 145/9*Jq1.Jq4.Jq2 - "
                            "60/7*Jq2.Jq1.Jq4 + 170/21*Jq2.Jq4.Jq1 + Jq4.Jq1.Jq1.Jq1"},
    };
    for (const auto& b : b7) {
        std::string claim = std::string("binary expansion ") + b.text + " = 0";
        s.guarded(b.id, claim, [&] {
            Vanishing v = vanishing(op(b.text));
            s.add(b.id, claim, v.asOperator, v.detail + "; computed Jq7 = " + binaryDecompose(7).str(),
                  Expect::misprint);
        });
    }

    s.guarded("generated-by-jq1-jq2", "Jq^k lies in the Q_2-algebra generated by Jq1, Jq2", [&] {
        std::string detail;
        bool ok = true;
        for (unsigned k = 3; k <= 6; ++k) {
            OpElement e = q12Decompose(k);
            ok = ok && equalByEvaluation(OpElement::generator(k), e);
            detail += "k=" + std::to_string(k) + ": " + std::to_string(e.terms().size()) + " terms; ";
        }
        s.add("generated-by-jq1-jq2", "Jq^k lies in the Q_2-algebra generated by Jq1, Jq2", ok, detail + "k <= 6");
    });

    s.guarded("power-of-two-indecomposable", "Jq^(2^n) is not a Z_2-combination of products of lower Jq^(2^i)", [&] {
        bool ok = true;
        std::string detail;
        for (unsigned k : {1u, 2u, 4u, 8u}) {
            try {
                binaryDecompose(k);
                ok = false;
                detail += "Jq" + std::to_string(k) + " decomposed; ";
            } catch (const IndecomposableError&) {
                detail += "Jq" + std::to_string(k) + " indecomposable; ";
            }
        }
        s.add("power-of-two-indecomposable", "Jq^(2^n) is not a Z_2-combination of products of lower Jq^(2^i)", ok,
              detail);
    });

    s.guarded("binary-generation", "Jq^k, k not a power of 2, is a Z_2-combination of binary words", [&] {
        bool ok = true;
        std::string detail;
        for (unsigned k : {3u, 5u, 6u, 7u}) {
            OpElement e = binaryDecompose(k);
            ok = ok && e.hasZ2Coefficients() && equalByEvaluation(OpElement::generator(k), e);
            if (k == 3)
                detail = "Jq3 = " + e.str();
        }
        s.add("binary-generation", "Jq^k, k not a power of 2, is a Z_2-combination of binary words", ok,
              detail + "; k in {3, 5, 6, 7}");
    });

    s.guarded("low-ranks", "rank of degree d is d for d = 1, 2, 3", [&] {
        bool ok = true;
        std::string detail;
        for (unsigned d = 1; d <= 3; ++d) {
            EvalBounds b = defaultEvalBounds(d);
            RankReport r = rankEstimate(d, b.nVars, b.degBound);
            ok = ok && r.rank == d;
            detail += "d=" + std::to_string(d) + ": " + std::to_string(r.rank) + "; ";
        }
        s.add("low-ranks", "rank of degree d is d for d = 1, 2, 3", ok, detail);
    });
}

/* ----------------------------------------------------------------- Hopf */

void hopfChecks(Suite& s)
{
    s.guarded("conjugation-low", "chi(Jq1) = -Jq1, chi(Jq2) = Jq1.Jq1 - Jq2", [&] {
        bool ok = chi(1, ChiMethod::recursion) == op("-Jq1") && chi(2, ChiMethod::recursion) == op("Jq1.Jq1 - Jq2");
        s.add("conjugation-low", "chi(Jq1) = -Jq1, chi(Jq2) = Jq1.Jq1 - Jq2", ok,
              "chi(Jq2) = " + chi(2, ChiMethod::recursion).str());
    });

    s.guarded("conjugation-partitions", "chi(Jq^k) = sum over compositions of (-1)^len Jq^alpha", [&] {
        bool ok = true;
        for (unsigned k = 1; k <= 10; ++k)
            ok = ok && chi(k, ChiMethod::recursion) == chi(k, ChiMethod::partitions);
        s.add("conjugation-partitions", "chi(Jq^k) = sum over compositions of (-1)^len Jq^alpha", ok,
              "recursion and composition formula agree for k <= 10");
    });

    s.guarded("conjugation-classical", "chi(Sq^k) = sum over compositions of Sq^alpha", [&] {
        bool ok = true;
        for (unsigned k = 1; k <= 8; ++k) {
            ClassicalElement sum;
            for (const auto& w : compositions(k))
                sum += ClassicalElement::fromWord(w);
            ok = ok && phiReduce(chi(k, ChiMethod::partitions)) == sum;
        }
        s.add("conjugation-classical", "chi(Sq^k) = sum over compositions of Sq^alpha", ok,
              "phi(chi(Jq^k)) compared for k <= 8");
    });

    s.guarded("total-conjugate-inverse", "Cq inverts the total square and is multiplicative", [&] {
        bool ok = true;
        const unsigned n = 12;
        for (const char* f : {"x1^2 - 3*x1*x2", "1/3*x1 + x2^3", "x1*x2*x3"}) {
            Polynomial p = poly(f, 3);
            ok = ok && applyConjTotal(applyTotal(p), n).terms() == p;
            ok = ok && truncate(applyTotal(applyConjTotal(p, n).terms()), n) == p;
        }
        Polynomial f = poly("x1 + x2^2", 2), g = poly("3*x1*x2 - x2", 2);
        ok = ok && applyConjTotal(polyMul(f, g), n).terms() ==
                       truncate(polyMul(applyConjTotal(f, n).terms(), applyConjTotal(g, n).terms()), n);
        s.add("total-conjugate-inverse", "Cq inverts the total square and is multiplicative", ok,
              "three polynomials, through degree 12");
    });

    s.guarded("psi-q-automorphism", "psi_q is multiplicative with inverse sum q^k chi(Jq^k)", [&] {
        bool ok = true;
        const unsigned K = 8;
        for (long qq : {3L, -1L, 2L}) {
            Polynomial f = poly("x1^2 + 3*x1*x2", 2), g = poly("x2 - 1/3*x1^2", 2);
            ok = ok && applyPsiQ(qq, polyMul(f, g)) == polyMul(applyPsiQ(qq, f), applyPsiQ(qq, g));
            Polynomial image = applyPsiQ(qq, f);
            Polynomial back(2);
            for (unsigned k = 0; k <= K; ++k)
                back += evalElement(chi(k, ChiMethod::partitions) * pow(DyadicScalar(qq), k), image);
            ok = ok && truncate(back, f.lowDegree() + K) == f;
        }
        s.add("psi-q-automorphism", "psi_q is multiplicative with inverse sum q^k chi(Jq^k)", ok,
              "q in {3, -1, 2}, inverse series through 8 terms");
    });
}

/* ------------------------------------------------------------------ Ore */

void oreChecks(Suite& s)
{
    s.guarded("ore-condition", "Jq1 x = Jq2 y has a nonzero solution", [&] {
        auto pair = oreSolveDefault(op("Jq1"), op("Jq2"));
        bool ok = pair && !pair->x.isZero() && !pair->y.isZero() &&
                  equalByEvaluation(op("Jq1") * pair->x, op("Jq2") * pair->y);
        s.add("ore-condition", "Jq1 x = Jq2 y has a nonzero solution", ok,
              pair ? "x = " + pair->x.str() + ", y = " + pair->y.str() : "no pair found");
    });

    s.guarded("ore-two-parameter-family", "displayed (x, y) family for Jq1 (...) = Jq2 (x Jq2 + y Jq1.Jq1)", [&] {
        OpElement lhs = op("Jq1") * op("4*Jq3 - 29/8*Jq2.Jq1 + 7/4*Jq1.Jq2 + 23/24*Jq1.Jq1.Jq1");
        OpElement rhs = op("Jq2.Jq1.Jq1");
        bool ok = equalByEvaluation(lhs, rhs);
        s.add("ore-two-parameter-family", "displayed (x, y) family for Jq1 (...) = Jq2 (x Jq2 + y Jq1.Jq1)", ok,
              "at (x, y) = (0, 1): " + differenceWitness(lhs, rhs), Expect::misprint);
    });

    s.guarded("ore-y-zero-example", "Jq1 (Jq3 + Jq2.Jq1 - 1/6 Jq1^3) = Jq2.Jq2", [&] {
        OpElement lhs = op("Jq1") * op("Jq3 + Jq2.Jq1 - 1/6*Jq1.Jq1.Jq1");
        OpElement rhs = op("Jq2.Jq2");
        bool ok = equalByEvaluation(lhs, rhs);
        s.add("ore-y-zero-example", "Jq1 (Jq3 + Jq2.Jq1 - 1/6 Jq1^3) = Jq2.Jq2", ok,
              "on x1^2: left " + evalElement(lhs, poly("x1^2")).str() + ", right " +
                  evalElement(rhs, poly("x1^2")).str(),
              Expect::misprint);
    });

    s.guarded("fraction-sum-example", "Jq1^-1 + Jq2^-1 = (Jq3 + Jq2.Jq1 - 1/6 Jq1^3 + Jq2)(Jq2.Jq2)^-1", [&] {
        // Valid exactly when Jq1 d1 = Jq2 b1 for d1 = Jq3 + Jq2.Jq1 - 1/6 Jq1^3, b1 = Jq2.
        bool ok = equalByEvaluation(op("Jq1") * op("Jq3 + Jq2.Jq1 - 1/6*Jq1.Jq1.Jq1"), op("Jq2.Jq2"));
        auto fr = fractionAdd(op("1"), op("Jq1"), op("1"), op("Jq2"));
        std::string detail = fr ? "computed (" + fr->numerator.str() + ")(" + fr->denominator.str() + ")^-1"
                                : "no fraction found";
        s.add("fraction-sum-example", "Jq1^-1 + Jq2^-1 = (Jq3 + Jq2.Jq1 - 1/6 Jq1^3 + Jq2)(Jq2.Jq2)^-1", ok,
              detail, Expect::misprint);
    });
}

/* ---------------------------------------------------------------- norms */

void normChecks(Suite& s)
{
    s.guarded("operator-norm-generators", "|Jq^k|_L = 1", [&] {
        bool ok = true;
        for (unsigned k = 0; k <= 8; ++k)
            ok = ok && operatorNormEstimate(OpElement::generator(k)).value == 0;
        s.add("operator-norm-generators", "|Jq^k|_L = 1", ok, "k <= 8, witness x1^k");
    });

    s.guarded("operator-norm-jq1-squared", "|Jq1.Jq1|_L = 1/2", [&] {
        ValuationReport r = operatorNormEstimate(op("Jq1.Jq1"));
        s.add("operator-norm-jq1-squared", "|Jq1.Jq1|_L = 1/2", r.value == 1, "norm " + r.norm().str());
    });

    s.guarded("jq1-powers-kernel-filtration", "(Jq1)^3 in ker \\ ker^2, (Jq1)^4 in ker^2 \\ ker^3", [&] {
        long v3 = kerAdicValuation(opPow(op("Jq1"), 3)).value, v4 = kerAdicValuation(opPow(op("Jq1"), 4)).value;
        s.add("jq1-powers-kernel-filtration", "(Jq1)^3 in ker \\ ker^2, (Jq1)^4 in ker^2 \\ ker^3", v3 == 1 && v4 == 2,
              "ker-adic valuations " + std::to_string(v3) + ", " + std::to_string(v4));
    });

    s.guarded("jq1-power-operator-norm", "|(Jq1)^k|_L = 2^-floor(k/2)", [&] {
        bool ok = true;
        std::ostringstream os;
        for (unsigned k = 1; k <= 6; ++k) {
            OpElement e = opPow(op("Jq1"), k);
            long est = operatorNormEstimate(e).value, ker = kerAdicValuation(e).value;
            ok = ok && est == static_cast<long>(k / 2);
            os << "k=" << k << ": monomial sup " << est << ", ker-adic " << ker << "; ";
        }
        s.add("jq1-power-operator-norm", "|(Jq1)^k|_L = 2^-floor(k/2)", ok,
              os.str() + "the formula is the ker-adic filtration, not the operator norm", Expect::misprint);
    });

    s.guarded("jq2-powers-kernel", "(Jq2)^m outside ker for m < 4, inside for 4 <= m <= 7", [&] {
        bool ok = true;
        for (unsigned m = 1; m <= 7; ++m)
            ok = ok && kerPhiMembership(opPow(op("Jq2"), m)) == (m >= 4);
        s.add("jq2-powers-kernel", "(Jq2)^m outside ker for m < 4, inside for 4 <= m <= 7", ok, "via phi");
    });

    s.guarded("nilpotency-degrees", "(Sq1)^2 = 0 and (Sq2)^4 = 0 with no smaller power vanishing", [&] {
        auto n1 = nilpotencyDegree(1, 8), n2 = nilpotencyDegree(2, 8);
        bool ok = n1 == 2u && n2 == 4u;
        s.add("nilpotency-degrees", "(Sq1)^2 = 0 and (Sq2)^4 = 0 with no smaller power vanishing", ok,
              "degrees " + (n1 ? std::to_string(*n1) : "none") + ", " + (n2 ? std::to_string(*n2) : "none"));
    });

    auto admissible = [](const OpWord& w) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] < 2 * w[i + 1])
                return false;
        return true;
    };
    auto reversed = [](const OpWord& w) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > 2 * w[i + 1])
                return false;
        return true;
    };
    s.guarded("admissible-norm-one", "admissible words have |.|_L = 1", [&] {
        bool ok = true;
        for (unsigned d = 1; d <= 7; ++d)
            for (const auto& w : compositions(d))
                if (admissible(w))
                    ok = ok && !kerPhiMembership(OpElement::word(w));
        s.add("admissible-norm-one", "admissible words have |.|_L = 1", ok, "degrees <= 7");
    });
    s.guarded("reversed-admissible-norm-one", "reversed admissible words have |.|_L = 1", [&] {
        std::vector<std::string> bad;
        for (unsigned d = 1; d <= 6; ++d)
            for (const auto& w : compositions(d))
                if (reversed(w) && kerPhiMembership(OpElement::word(w)))
                    bad.push_back(formatWord(w));
        std::string detail = std::to_string(bad.size()) + " reversed admissible words of degree <= 6 lie in ker";
        for (std::size_t i = 0; i < std::min<std::size_t>(bad.size(), 4); ++i)
            detail += (i ? ", " : ": ") + bad[i];
        s.add("reversed-admissible-norm-one", "reversed admissible words have |.|_L = 1", bad.empty(), detail,
              Expect::misprint);
    });

    s.guarded("adem-relation-lifts", "R(a,b) = Jq^a Jq^b - sum C(b-j-1, a-2j) Jq^(a+b-j) Jq^j lies in ker, a <= 2b",
              [&] {
                  bool ok = true;
                  unsigned count = 0;
                  for (unsigned b = 1; b <= 6; ++b)
                      for (unsigned a = 1; a <= 2 * b && a + b <= 9; ++a) {
                          OpElement r = OpElement::word({a, b});
                          for (unsigned j = 0; 2 * j <= a; ++j) {
                              mpz_class c = (b == j + 0 && a == 2 * j) ? mpz_class(1) : binom(long(b) - j - 1, a - 2 * j);
                              OpWord w = {a + b - j};
                              if (j > 0)
                                  w.push_back(j);
                              r.addTerm(w, -DyadicScalar(c));
                          }
                          ok = ok && kerPhiMembership(r);
                          ++count;
                      }
                  s.add("adem-relation-lifts",
                        "R(a,b) = Jq^a Jq^b - sum C(b-j-1, a-2j) Jq^(a+b-j) Jq^j lies in ker, a <= 2b", ok,
                        std::to_string(count) + " pairs with a + b <= 9");
              });

    s.guarded("strong-triangle-examples", "1 - Jq^k and Jq1 - Jq1.Jq^(2k+1) have norm 1; R(1,2) lies in ker", [&] {
        bool ok = kerPhiMembership(op("Jq3 - Jq1.Jq2"));
        for (unsigned k = 1; k <= 6; ++k)
            ok = ok && !kerPhiMembership(op("1") - OpElement::generator(k));
        for (unsigned k = 0; k <= 2; ++k) {
            OpElement t = OpElement::word({1, 2 * k + 1});
            ok = ok && kerPhiMembership(t) && !kerPhiMembership(op("Jq1") - t);
        }
        s.add("strong-triangle-examples", "1 - Jq^k and Jq1 - Jq1.Jq^(2k+1) have norm 1; R(1,2) lies in ker", ok,
              "k <= 6 and k <= 2");
    });

    s.guarded("classical-adem-norm", "Sq1.Sq1 = 0 in the classical algebra", [&] {
        s.add("classical-adem-norm", "Sq1.Sq1 = 0 in the classical algebra", phiReduce(op("Jq1.Jq1")).isZero(),
              "phi(Jq1.Jq1) = " + phiReduce(op("Jq1.Jq1")).str());
    });

    s.guarded("adem-norm-low", "|Jq1|_A = |Jq2|_A = 1/2 and |Jq3|_A = 1/4", [&] {
        long v1 = ademValuation(op("Jq1")).value, v2v = ademValuation(op("Jq2")).value,
             v3 = ademValuation(op("Jq3")).value;
        s.add("adem-norm-low", "|Jq1|_A = |Jq2|_A = 1/2 and |Jq3|_A = 1/4", v1 == 1 && v2v == 1 && v3 == 2,
              "valuations " + std::to_string(v1) + ", " + std::to_string(v2v) + ", " + std::to_string(v3));
    });

    s.guarded("adem-norm-formula", "|Jq^k|_A = 2^-(k-1) for k >= 4", [&] {
        bool ok = true;
        std::ostringstream os;
        for (unsigned k = 4; k <= 8; ++k) {
            long v = ademValuation(OpElement::generator(k), false).value;
            ok = ok && v == static_cast<long>(k) - 1;
            os << "Jq" << k << ": " << v << "; ";
        }
        s.add("adem-norm-formula", "|Jq^k|_A = 2^-(k-1) for k >= 4", ok,
              os.str() + "the computed valuation is ceil(k/2)", Expect::misprint);
    });

    s.guarded("adem-norm-multiplicative", "|ab|_A = |a|_A |b|_A", [&] {
        unsigned bad = 0, total = 0;
        for (unsigned d1 = 1; d1 <= 7; ++d1)
            for (unsigned d2 = 1; d1 + d2 <= 8; ++d2)
                for (const auto& a : compositions(d1))
                    for (const auto& b : compositions(d2)) {
                        OpWord ab = a;
                        ab.insert(ab.end(), b.begin(), b.end());
                        long va = ademValuation(OpElement::word(a), false).value;
                        long vb = ademValuation(OpElement::word(b), false).value;
                        long vab = ademValuation(OpElement::word(ab), false).value;
                        bad += vab != va + vb;
                        ++total;
                    }
        s.add("adem-norm-multiplicative", "|ab|_A = |a|_A |b|_A", bad == 0,
              std::to_string(total) + " word pairs up to degree 8, " + std::to_string(bad) + " violations");
    });

    s.guarded("adem-degree-sandwich", "(1/2)|.|_rho <= |.|_A <= |.|_rho at rho = 1/2", [&] {
        bool ok = true;
        std::ostringstream os;
        for (unsigned k = 1; k <= 6; ++k) {
            SandwichReport r = sandwichCheck(OpElement::generator(k));
            if (!r.holds) {
                ok = false;
                os << "Jq" << k << ": " << r.lower.str() << " <= " << r.adem.str() << " <= " << r.upper.str()
                   << " fails; ";
            }
        }
        s.add("adem-degree-sandwich", "(1/2)|.|_rho <= |.|_A <= |.|_rho at rho = 1/2", ok,
              ok ? "holds for Jq1..Jq6" : os.str(), Expect::misprint);
    });

    s.guarded("jq1-powers-on-xi", "(Jq1)^k(x) = k! x^(k+1), so sum 2^k (Jq1)^k(x) = sum 2^k k! x^(k+1)", [&] {
        bool ok = true;
        Polynomial p = poly("x1");
        for (unsigned k = 1; k <= 12; ++k) {
            p = applyJq(1, p);
            ok = ok && p == Polynomial::variable(1, 1, k + 1, factorial(k));
        }
        s.add("jq1-powers-on-xi", "(Jq1)^k(x) = k! x^(k+1), so sum 2^k (Jq1)^k(x) = sum 2^k k! x^(k+1)", ok,
              "(Jq1)^4(x1) = " + evalElement(opPow(op("Jq1"), 4), poly("x1")).str());
    });
}

/* ------------------------------------------------------------------ hit */

void hitChecks(Suite& s)
{
    s.guarded("hit-low-degrees", "a x not hit; a x^2 hit with x^2 = Jq1(x); 2 x^3 hit, x^3 not", [&] {
        bool ok = !hitDecideGraded(poly("x1")).hit && !hitDecideGraded(poly("5*x1")).hit;
        ok = ok && singlePair(hitDecideGraded(poly("x1^2")), 1, poly("x1"));
        ok = ok && hitDecideGraded(poly("3*x1^2")).hit && hitDecideGraded(poly("1/3*x1^2")).hit;
        ok = ok && singlePair(hitDecideGraded(poly("2*x1^3")), 1, poly("x1^2")) && !hitDecideGraded(poly("x1^3")).hit;
        s.add("hit-low-degrees", "a x not hit; a x^2 hit with x^2 = Jq1(x); 2 x^3 hit, x^3 not", ok,
              "2*x1^3: " + certificateText(hitDecideGraded(poly("2*x1^3"))));
    });

    s.guarded("hit-degree-seven", "x^7, 2 x^7, 3 x^7 are not hit; 4 x^7 = Jq3(x^4)", [&] {
        HitResult h1 = hitDecideGraded(poly("x1^7")), h2 = hitDecideGraded(poly("2*x1^7")),
                  h3 = hitDecideGraded(poly("3*x1^7")), h4 = hitDecideGraded(poly("4*x1^7"));
        bool ok = !h1.hit && !h2.hit && !h3.hit && singlePair(h4, 3, poly("x1^4"));
        s.add("hit-degree-seven", "x^7, 2 x^7, 3 x^7 are not hit; 4 x^7 = Jq3(x^4)", ok,
              "2*x1^7 " + certificateText(h2) + "; 4*x1^7 " + certificateText(h4), Expect::misprint);
    });

    s.guarded("hit-power-family", "2^n x^(2^(n+1)-1) = Jq^(2^n-1)(x^(2^n))", [&] {
        bool ok = true;
        for (unsigned n = 0; n <= 5; ++n) {
            unsigned p = 1u << n;
            Polynomial f = Polynomial::variable(1, 1, 2 * p - 1, DyadicScalar(long(p)));
            ok = ok && applyJq(p - 1, Polynomial::variable(1, 1, p)) == f;
            if (n >= 1)
                ok = ok && singlePair(hitDecideGraded(f), p - 1, Polynomial::variable(1, 1, p));
        }
        s.add("hit-power-family", "2^n x^(2^(n+1)-1) = Jq^(2^n-1)(x^(2^n))", ok,
              "identity for n <= 5, certificates for 1 <= n <= 5");
    });

    s.guarded("cohit-support", "Q^d(1) = 0 unless d = 2^n - 1; Q^1(1) = Z_2", [&] {
        bool ok = !cohitOrder(1).has_value();
        for (unsigned d = 2; d <= 63; ++d) {
            bool mersenne = ((d + 1) & d) == 0;
            ok = ok && (minHitValuation(d) > 0) == mersenne;
        }
        s.add("cohit-support", "Q^d(1) = 0 unless d = 2^n - 1; Q^1(1) = Z_2", ok, "d <= 63");
    });

    s.guarded("cohit-cyclic-order", "Q^(2^n-1)(1) is cyclic of order n", [&] {
        bool ok = true;
        std::ostringstream os;
        for (unsigned n = 2; n <= 6; ++n) {
            auto order = cohitOrder((1u << n) - 1);
            ok = ok && order && *order == mpz_class(n);
            os << "d=" << (1u << n) - 1 << ": order " << (order ? order->get_str() : "inf") << "; ";
        }
        s.add("cohit-cyclic-order", "Q^(2^n-1)(1) is cyclic of order n", ok, os.str() + "2 x^d = Jq1(2/(d-1) x^(d-1)) with 2/(d-1) in Z_2",
              Expect::misprint);
    });

    s.guarded("hit-iff-adem-filtration", "f is hit iff |f|_A < 1", [&] {
        bool ok = true;
        for (const char* f : {"x1^2", "x1^3", "2*x1^3", "x1^4", "x1^2*x2^2", "x1*x2", "2*x1^7", "x1^2*x2"}) {
            Polynomial p = poly(f, 2);
            ok = ok && hitDecideGraded(p).hit == (moduleAdemFiltration(p, 4) >= 1);
        }
        s.add("hit-iff-adem-filtration", "f is hit iff |f|_A < 1", ok, "eight polynomials in two variables");
    });
}

/* --------------------------------------------------------------- series */

void seriesChecks(Suite& s)
{
    s.guarded("geometric-jq1", "(1 - Jq1)^-1(x) = sum k! x^(k+1)", [&] {
        TruncatedSeries g = geometricInverse(1, poly("x1"), 20);
        bool ok = true;
        for (unsigned k = 0; k <= 19; ++k)
            ok = ok && g.coefficient(k + 1) == DyadicScalar(factorial(k));
        ResidualReport r = sodeResidual(Sode::parse("Jq0 - Jq1", "x1"), g, 20);
        s.add("geometric-jq1", "(1 - Jq1)^-1(x) = sum k! x^(k+1)", ok && r.ok, residualText(r));
    });

    s.guarded("geometric-jq2-display", "sum_(n>=2) (n-2)!/(n 2^(n-2)) x^n solves -Jq2(z) + z = x", [&] {
        TruncatedSeries c(1, 12);
        for (unsigned n = 2; n <= 12; ++n)
            c.setCoefficient(n, DyadicScalar(factorial(n - 2), mpz_class(n) * (mpz_class(1) << (n - 2))));
        ResidualReport r = sodeResidual(Sode::parse("Jq0 - Jq2", "x1"), c, 12);
        s.add("geometric-jq2-display", "sum_(n>=2) (n-2)!/(n 2^(n-2)) x^n solves -Jq2(z) + z = x", r.ok,
              residualText(r) + "; (1 - Jq2)^-1(x1) = " + geometricInverse(2, poly("x1"), 12).str(),
              Expect::misprint);
    });

    s.guarded("inverse-on-powers", "Jq^-k(x^m) = x^(m-k)/C(m-k,k) for m > k", [&] {
        bool ok = true;
        std::string undefinedAt;
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned m = k + 1; m <= 14; ++m) {
                try {
                    DyadicScalar c = applyJqNeg(k, m);
                    ok = ok && applyJq(k, Polynomial::variable(1, 1, m - k, c)) == Polynomial::variable(1, 1, m);
                } catch (const DomainError&) {
                    ok = false;
                    if (undefinedAt.empty())
                        undefinedAt = "C(m-k,k) = 0 at k=" + std::to_string(k) + ", m=" + std::to_string(m);
                }
            }
        s.add("inverse-on-powers", "Jq^-k(x^m) = x^(m-k)/C(m-k,k) for m > k", ok,
              ok ? "k <= 4, m <= 14" : undefinedAt + "; the formula needs m >= 2k", Expect::misprint);
    });

    s.guarded("jq-on-reciprocal", "Jq^k(1/x) = (-1)^k x^(k-1)", [&] {
        // (x + x^2) * sum_k Jq^k(1/x) = 1 up to the truncation, checked after multiplying by x.
        const unsigned K = 12;
        Polynomial tail(1);
        for (unsigned k = 0; k <= K; ++k) {
            SignedPower sp = jqOnInverseMonomial(k);
            tail += Polynomial::variable(1, 1, static_cast<unsigned>(sp.exponent + 1), DyadicScalar(long(sp.sign)));
        }
        Polynomial prod = truncate(polyMul(poly("1 + x1"), tail), K);
        s.add("jq-on-reciprocal", "Jq^k(1/x) = (-1)^k x^(k-1)", prod == poly("1"),
              "Jq(1/x) (x + x^2) = 1 through degree " + std::to_string(K));
    });

    s.guarded("inverse-on-negative-powers", "Jq^-1(1/x^m) = -m/x^(m-1)", [&] {
        // Cartan with Jq1(1/x) = -1: Jq1(c x^-n) = c n j1 x^(1-n), j1 the coefficient of Jq1(1/x).
        const DyadicScalar j1(long(jqOnInverseMonomial(1).sign));
        auto image = [&](const DyadicScalar& c, long n) { return std::make_pair(c * DyadicScalar(n) * j1, 1 - n); };
        bool ok = true, fixedOk = true;
        std::ostringstream os;
        for (long m = 1; m <= 4; ++m) {
            auto [c, e] = image(DyadicScalar(-m), m - 1);
            bool hits = (c == DyadicScalar(1) && e == -m);
            ok = ok && hits;
            if (!hits && m <= 3)
                os << "Jq1(-" << m << " x^" << 1 - m << ") = " << c.str() << " x^" << e << "; ";
            auto [cf, ef] = image(DyadicScalar(mpz_class(-1), mpz_class(m + 1)), m + 1);
            fixedOk = fixedOk && cf == DyadicScalar(1) && ef == -m;
        }
        os << "-x^(-m-1)/(m+1) is mapped to x^-m: " << (fixedOk ? "yes" : "no");
        s.add("inverse-on-negative-powers", "Jq^-1(1/x^m) = -m/x^(m-1)", ok, os.str(), Expect::misprint);
    });

    s.guarded("centered-action", "Jq^k((x - x0)^n) = C(n,k) x^(2k) (x - x0)^(n-k) for n >= k", [&] {
        bool ok = true;
        for (const DyadicScalar& x0 : {DyadicScalar(1), DyadicScalar(3), q(1, 2), DyadicScalar(-2)})
            for (unsigned n = 0; n <= 8; ++n)
                for (unsigned k = 1; k <= n; ++k) {
                    Polynomial u = poly("x1") - Polynomial::constant(1, x0);
                    Polynomial rhs = polyMul(Polynomial::variable(1, 1, 2 * k, binom(n, k)), polyPow(u, n - k));
                    ok = ok && applyJq(k, polyPow(u, n)) == rhs;
                }
        s.add("centered-action", "Jq^k((x - x0)^n) = C(n,k) x^(2k) (x - x0)^(n-k) for n >= k", ok,
              "x0 in {1, 3, 1/2, -2}, n <= 8");
    });

    auto logLike = [](int sign) {
        return [sign](unsigned n) { return n == 0 ? DyadicScalar(0) : DyadicScalar(mpz_class(n % 2 ? -sign : sign), mpz_class(n)); };
    };
    s.guarded("log-series", "Jq^-1(x) = sum_(n>=1) (-1)^n/n (x - 1)^n", [&] {
        Sode eq = Sode::parse("Jq1", "x1");
        ResidualReport shown = sodeResidual(eq, centeredSeries(1, 13, logLike(1)), 12);
        ResidualReport flipped = sodeResidual(eq, centeredSeries(1, 13, logLike(-1)), 12);
        s.add("log-series", "Jq^-1(x) = sum_(n>=1) (-1)^n/n (x - 1)^n", shown.ok,
              residualText(shown) + "; with (-1)^(n+1): " + residualText(flipped), Expect::misprint);
    });

    s.guarded("power-family-sode", "sum_(n>=0) (-1)^n/n (x - 1)^n solves Jq^k(z) = x^k for every k", [&] {
        std::ostringstream os;
        os << "the n = 0 term is undefined; with n >= 1 and either sign: ";
        bool ok = false;
        for (unsigned k = 1; k <= 3; ++k) {
            std::string rhs = "x1^" + std::to_string(k);
            Sode eq = Sode::parse("Jq" + std::to_string(k), rhs);
            ResidualReport a = sodeResidual(eq, centeredSeries(1, 14, logLike(1)), 12);
            ResidualReport b = sodeResidual(eq, centeredSeries(1, 14, logLike(-1)), 12);
            os << "k=" << k << " [" << residualText(a) << " | " << residualText(b) << "] ";
        }
        s.add("power-family-sode", "sum_(n>=0) (-1)^n/n (x - 1)^n solves Jq^k(z) = x^k for every k", ok, os.str(),
              Expect::misprint);
    });

    s.guarded("factorial-series-sode", "sum m! x^(m+1) solves -Jq1(z) + z = x", [&] {
        TruncatedSeries c(1, 20);
        for (unsigned m = 0; m + 1 <= 20; ++m)
            c.setCoefficient(m + 1, DyadicScalar(factorial(m)));
        ResidualReport r = sodeResidual(Sode::parse("Jq0 - Jq1", "x1"), c, 20);
        s.add("factorial-series-sode", "sum m! x^(m+1) solves -Jq1(z) + z = x", r.ok, residualText(r));
    });

    s.guarded("sode-recurrence", "(n-1)a_(n-1) + (2n x0 - 1)a_n + x0^2 (n+1) a_(n+1) = 0 for Jq1(z) = z", [&] {
        bool ok = true;
        for (const DyadicScalar& x0 : {DyadicScalar(1), DyadicScalar(2), DyadicScalar(-3), q(1, 3)}) {
            auto st = recurrenceStencil(op("Jq1 - Jq0"), x0);
            std::map<int, SymbolicPoly> want = {{-1, SymbolicPoly({-1, 1})},
                                                {0, SymbolicPoly({-1, DyadicScalar(2) * x0})},
                                                {1, SymbolicPoly({x0 * x0, x0 * x0})}};
            for (auto it = st.begin(); it != st.end();)
                it = it->second.isZero() ? st.erase(it) : std::next(it);
            ok = ok && st == want;
        }
        auto st1 = recurrenceStencil(op("Jq1 - Jq0"), 1);
        std::string detail = "at x0 = 1:";
        for (const auto& [sh, p] : st1)
            detail += std::string(sh == st1.begin()->first ? " " : " + ") + "(" + p.str("n") + ") a_" +
                      (sh == 0 ? std::string("n") : "(n" + std::string(sh < 0 ? "-" : "+") + "1)");
        s.add("sode-recurrence", "(n-1)a_(n-1) + (2n x0 - 1)a_n + x0^2 (n+1) a_(n+1) = 0 for Jq1(z) = z", ok, detail);
    });

    s.guarded("sode-initial-coefficients", "a_1 = a_0/x0^2 and a_2 = -(2 x0 - 1)/(2 x0^4)", [&] {
        bool ok = true;
        Sode eq = Sode::parse("Jq1 - Jq0", "0");
        std::string note;
        for (const DyadicScalar& x0 : {DyadicScalar(1), DyadicScalar(2), DyadicScalar(3)})
            for (long a0 : {1L, 3L}) {
                SodeSolution sol = sodeSolve(eq, x0, a0, 8);
                if (!sol.series) {
                    ok = false;
                    continue;
                }
                DyadicScalar x2 = x0 * x0;
                ok = ok && sol.series->coefficient(1) == DyadicScalar(a0) / x2;
                DyadicScalar a2 = -(DyadicScalar(2) * x0 - 1) / (DyadicScalar(2) * x2 * x2);
                if (a0 == 1)
                    ok = ok && sol.series->coefficient(2) == a2;
                else if (sol.series->coefficient(2) == a2 * a0 && note.empty())
                    note = "for general a_0 the second coefficient carries a factor a_0";
            }
        s.add("sode-initial-coefficients", "a_1 = a_0/x0^2 and a_2 = -(2 x0 - 1)/(2 x0^4)", ok,
              "x0 in {1, 2, 3}; a_2 checked at a_0 = 1; " + note);
    });

    s.guarded("sode-no-solution-at-zero", "Jq1(z) = z has no power-series solution at x0 = 0", [&] {
        SodeSolution sol = sodeSolve(Sode::parse("Jq1 - Jq0", "0"), 0, 1, 16);
        s.add("sode-no-solution-at-zero", "Jq1(z) = z has no power-series solution at x0 = 0", !sol.series,
              sol.series ? "unexpected solution" : sol.reason);
    });

    s.guarded("sode-solution-residual", "the recursion at x0 = 1, a_0 = 1 solves Jq1(z) = z", [&] {
        Sode eq = Sode::parse("Jq1 - Jq0", "0");
        SodeSolution sol = sodeSolve(eq, 1, 1, 16);
        bool ok = sol.series.has_value();
        ResidualReport r{false, -1, std::nullopt, 0};
        if (ok) {
            r = sodeResidual(eq, *sol.series, 16);
            ok = r.ok && r.verifiedThrough >= 15;
        }
        s.add("sode-solution-residual", "the recursion at x0 = 1, a_0 = 1 solves Jq1(z) = z", ok, residualText(r));
    });

    s.guarded("tate-convergence", "sum k! x^(k+1) and sum 2^k x^k converge, sum x^k does not", [&] {
        TruncatedSeries fact(1, 41), geo2(1, 40), geo1(1, 40);
        for (unsigned k = 0; k <= 40; ++k) {
            fact.setCoefficient(k + 1, DyadicScalar(factorial(k)));
            geo2.setCoefficient(k, DyadicScalar(mpz_class(mpz_class(1) << k)));
            geo1.setCoefficient(k, 1);
        }
        TateReport a = tateCheck(fact), b = tateCheck(geo2), c = tateCheck(geo1);
        bool ok = a.verdict == TateVerdict::pass && b.verdict == TateVerdict::pass && c.verdict == TateVerdict::fail;
        s.add("tate-convergence", "sum k! x^(k+1) and sum 2^k x^k converge, sum x^k does not", ok,
              verdictName(a.verdict) + ", " + verdictName(b.verdict) + ", " + verdictName(c.verdict));
    });
}

}  // namespace

std::vector<ReferenceCheck> runReferenceChecks()
{
    Suite s;
    actionChecks(s);
    relationChecks(s);
    hopfChecks(s);
    oreChecks(s);
    normChecks(s);
    hitChecks(s);
    seriesChecks(s);
    return s.take();
}

}  // namespace jqforge
