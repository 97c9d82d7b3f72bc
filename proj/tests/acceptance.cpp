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
// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "jqforge/action.hpp"
#include "jqforge/cli.hpp"
#include "jqforge/hit.hpp"
#include "jqforge/linalg.hpp"
#include "jqforge/norms.hpp"
#include "jqforge/opalg.hpp"
#include "jqforge/relations.hpp"
#include "jqforge/serialize.hpp"
#include "jqforge/series.hpp"

using namespace jqforge;

namespace {

OpElement op(const char* s) { return OpElement::parse(s); }
Polynomial poly(const char* s) { return Polynomial::parse(s); }
DyadicScalar q(long n, long d) { return DyadicScalar(mpz_class(n), mpz_class(d)); }

struct Result {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int n, const char* name, const std::function<Result()>& body)
{
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.ok;
    std::printf("%s %2d %s: %s\n", r.ok ? "PASS" : "FAIL", n, name, r.detail.c_str());
    std::fflush(stdout);
}

Polynomial randomPoly(std::mt19937& rng, std::size_t arity, unsigned maxDeg)
{
    Polynomial f(arity);
    unsigned terms = 1 + rng() % 4;
    for (unsigned t = 0; t < terms; ++t) {
        MultiIndex m(arity, 0);
        unsigned budget = rng() % (maxDeg + 1);
        for (std::size_t i = 0; i < arity; ++i) {
            unsigned e = i + 1 == arity ? budget : rng() % (budget + 1);
            m[i] = e;
            budget -= e;
        }
        long c = static_cast<long>(rng() % 13) - 6;
        f.addTerm(m, rng() % 4 == 0 ? q(c, 3) : DyadicScalar(c));
    }
    return f;
}

std::string vecText(const QVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s + ")";
}

mpz_class factorial(unsigned n)
{
    mpz_class f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

bool inSpan(const std::vector<QVector>& basis, const QVector& v)
{
    QMatrix m = basis;
    std::size_t r = rank(m, v.size());
    m.push_back(v);
    return rank(m, v.size()) == r;
}

Word randomWord(std::mt19937& rng)
{
    Word w;
    unsigned len = 1 + rng() % 3;
    for (unsigned j = 0; j < len; ++j)
        w.push_back(1 + rng() % 4);
    return w;
}

F2Poly classicalApply(const ClassicalElement& e, const F2Poly& f)
{
    F2Poly out;
    for (const Word& w : e.terms()) {
        F2Poly g = f;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            g = classicalSq(*it, g);
        for (const MultiIndex& m : g)
            if (!out.erase(m))
                out.insert(m);
    }
    return out;
}

bool singlePair(const HitResult& h, unsigned k, const Polynomial& g)
{
    return h.hit && h.certificate && h.certificate->pairs.size() == 1 && h.certificate->pairs[0].first == k &&
           h.certificate->pairs[0].second == g;
}

}  // namespace

int main()
{
    criterion(1, "adem-three", [] {
        std::vector<const char*> argv = {"jqforge", "--json", "adem", "--k", "3"};
        std::ostringstream out, err;
        int code = runCommand(static_cast<int>(argv.size()), argv.data(), out, err);
        Json j = Json::parse(out.str());
        bool ok = code == 0 && j["basis"] == Json::parse("[[3,-6,3,1]]") && j["multivariable"][0] == true;
        return Result{ok, "adem --k 3 basis " + j["basis"].dump() + " over " + j["words"].dump()};
    });

    criterion(2, "two-partition-expansions", [] {
        struct Case {
            unsigned k;
            QVector v;
            const char* label;
        };
        std::vector<Case> cases = {{4, {2, -3, 1, 1}, "A_4"},
                                   {5, {5, -5, 0, 1, -2}, "A_5"},
                                   {6, {9, -7, 0, 1, 0, 3}, "A_6"},
                                   {6, {9, -7, 0, 0, 1, 3}, "A_6 with the 1 on Jq2.Jq4"}};
        std::mt19937 rng(2026);
        bool ok = true;
        std::ostringstream os;
        for (const auto& c : cases) {
            OpElement e = combine(tPartitionWords(c.k, 2), c.v);
            bool onPowers = evaluateOnPower(e).isZero();
            int annihilated = 0;
            std::string firstBad;
            for (int i = 0; i < 50; ++i) {
                Polynomial f = randomPoly(rng, 1 + rng() % 3, 8);
                if (evalElement(e, f).isZero())
                    ++annihilated;
                else if (firstBad.empty())
                    firstBad = f.str();
            }
            bool caseOk = onPowers && annihilated == 50;
            if (c.k != 6 || c.v[3] == 1)
                ok = ok && caseOk;
            os << c.label << vecText(c.v) << ": on xi^m " << (onPowers ? "zero" : "nonzero") << ", annihilates "
               << annihilated << "/50" << (firstBad.empty() ? "" : " (first failure on " + firstBad + ")") << "; ";
        }
        os << "computed on xi^m: A_5 " << vecText(ademNullspace(5, tPartitionWords(5, 2)).basis.at(0))
           << "; operator nullspace over 2-partition words is 0 for k = 4..7";
        return Result{ok, os.str()};
    });

    criterion(3, "adem-seven-family", [] {
        std::vector<OpWord> words = tPartitionWords(7, 2);
        QVector a701 = {q(14, 3), q(-14, 3), q(7, 3), q(-7, 15), q(-1, 3), 0, 1};
        RelationBasis rb = ademNullspace(7, words);
        bool member = inSpan(rb.basis, a701);
        DyadicScalar spot = 0;
        std::ostringstream os;
        for (std::size_t i = 0; i < words.size(); ++i) {
            Polynomial img = evalElement(OpElement::word(words[i], a701[i]), poly("x1^4"));
            DyadicScalar c = img.coefficient(MultiIndex{11});
            if (!c.isZero())
                os << (os.tellp() ? " + " : "") << c.str();
            spot += c;
        }
        bool ok = member && rb.basis.size() >= 2 && spot.isZero();
        return Result{ok, "nullspace dimension " + std::to_string(rb.basis.size()) + ", A_7(0,1) " +
                              (member ? "in" : "not in") + " span; on x1^4: " + os.str() + " = " + spot.str()};
    });

    criterion(4, "jq3-identity", [] {
        EvalBounds b{3, 10};
        bool printed = equalByEvaluation(op("Jq3"), op("2*Jq1.Jq2 - Jq2.Jq1 - 1/3*Jq1.Jq1.Jq1"), b);
        bool swapped = equalByEvaluation(op("Jq3"), op("2*Jq2.Jq1 - Jq1.Jq2 - 1/3*Jq1.Jq1.Jq1"), b);
        Polynomial diff = evalElement(op("Jq3 - 2*Jq1.Jq2 + Jq2.Jq1 + 1/3*Jq1.Jq1.Jq1"), poly("x1"));
        return Result{printed, std::string("Jq3 = 2 Jq1.Jq2 - Jq2.Jq1 - 1/3 Jq1^3: ") + (printed ? "true" : "false") +
                                   " (difference on x1: " + diff.str() + "); Jq3 = 2 Jq2.Jq1 - Jq1.Jq2 - 1/3 Jq1^3: " +
                                   (swapped ? "true" : "false")};
    });

    criterion(5, "conjugation", [] {
        bool ok = true;
        for (unsigned k = 1; k <= 10; ++k) {
            OpElement p = chi(k, ChiMethod::partitions);
            ok = ok && chi(k, ChiMethod::recursion) == p && p.terms().size() == (std::size_t{1} << (k - 1));
        }
        return Result{ok, "recursion and partition formulas agree word for word, 2^(k-1) words, k = 1..10"};
    });

    criterion(6, "cartan-and-reduction", [] {
        std::mt19937 rng(6);
        int cartanBad = 0, phiBad = 0;
        for (int i = 0; i < 500; ++i) {
            unsigned k = rng() % 7;
            Polynomial f = randomPoly(rng, 3, 5), g = randomPoly(rng, 3, 5);
            Polynomial sum(3);
            for (unsigned a = 0; a <= k; ++a)
                sum += applyJq(a, f) * applyJq(k - a, g);
            cartanBad += applyJq(k, f * g) != sum;
        }
        for (int i = 0; i < 200; ++i) {
            Word w = randomWord(rng);
            Polynomial f = randomPoly(rng, 3, 4);
            phiBad += reduceMod2(applyWord(w, f)) != classicalApply(phiReduce(OpElement::word(w)), reduceMod2(f));
        }
        return Result{cartanBad == 0 && phiBad == 0, "Cartan 500 instances, " + std::to_string(cartanBad) +
                                                           " failures; reduction 200 instances, " +
                                                           std::to_string(phiBad) + " failures"};
    });

    criterion(7, "norms", [] {
        std::ostringstream os;
        bool ademOk = true;
        os << "ademValuation(Jq^k), k=1..6:";
        for (unsigned k = 1; k <= 6; ++k) {
            long v = ademValuation(OpElement::generator(k), false).value;
            os << " " << v;
            ademOk = ademOk && v == static_cast<long>(k) - 1;
        }
        os << " (expected k-1: " << (ademOk ? "yes" : "no") << ")";
        unsigned bad = 0, pairs = 0;
        for (unsigned d1 = 1; d1 <= 7; ++d1)
            for (unsigned d2 = 1; d1 + d2 <= 8; ++d2)
                for (const auto& a : compositions(d1))
                    for (const auto& b : compositions(d2)) {
                        OpWord ab = a;
                        ab.insert(ab.end(), b.begin(), b.end());
                        bad += ademValuation(OpElement::word(ab), false).value !=
                               ademValuation(OpElement::word(a), false).value +
                                   ademValuation(OpElement::word(b), false).value;
                        ++pairs;
                    }
        os << "; multiplicativity " << pairs << " pairs, " << bad << " violations";
        bool normOk = true;
        for (unsigned k = 1; k <= 8; ++k)
            normOk = normOk && operatorNormEstimate(OpElement::generator(k)).norm() == 1;
        DyadicScalar n11 = operatorNormEstimate(op("Jq1.Jq1")).norm();
        normOk = normOk && n11 == q(1, 2);
        os << "; operator norm of Jq^k (k <= 8) " << (normOk ? "1" : "not 1") << ", of Jq1.Jq1 " << n11.str();
        unsigned kerBad = 0, words = 0;
        for (unsigned d = 1; d <= 6; ++d)
            for (const auto& w : compositions(d)) {
                kerBad += kerPhiMembership(OpElement::word(w)) != phiReduce(OpElement::word(w)).isZero();
                ++words;
            }
        os << "; ker(phi) membership vs reduction on " << words << " words, " << kerBad << " mismatches";
        return Result{ademOk && bad == 0 && normOk && kerBad == 0, os.str()};
    });

    criterion(8, "nilpotency", [] {
        auto n1 = nilpotencyDegree(1, 8), n2 = nilpotencyDegree(2, 8);
        bool ok = n1 == 2u && n2 == 4u;
        return Result{ok, "phi(Jq1)^m = 0 first at m = " + (n1 ? std::to_string(*n1) : std::string("none")) +
                              ", phi(Jq2)^m = 0 first at m = " + (n2 ? std::to_string(*n2) : std::string("none"))};
    });

    criterion(9, "hit-problem", [] {
        auto x = [](long a, unsigned d) { return Polynomial::variable(1, 1, d, a); };
        std::ostringstream os;
        bool ok = singlePair(hitDecideGraded(x(1, 2)), 1, x(1, 1)) && !hitDecideGraded(x(1, 3)).hit &&
                  hitDecideGraded(x(2, 3)).hit && singlePair(hitDecideGraded(x(4, 7)), 3, x(1, 4)) &&
                  !hitDecideGraded(x(1, 7)).hit && !hitDecideGraded(x(3, 7)).hit;
        os << "low-degree examples " << (ok ? "ok" : "wrong");
        bool family = true;
        for (unsigned n = 1; n <= 5; ++n) {
            unsigned p = 1u << n;
            family = family && singlePair(hitDecideGraded(x(p, 2 * p - 1)), p - 1, x(1, p));
        }
        os << "; 2^n x^(2^(n+1)-1) family n <= 5 " << (family ? "ok" : "wrong");
        bool oracle = true, recon = true;
        for (unsigned d = 1; d <= 20; ++d) {
            long m = minHitValuation(d);
            for (long a : {1L, 2L, 3L, 4L, 8L, 12L}) {
                HitResult h = hitDecideGraded(x(a, d));
                oracle = oracle && h.hit == (m != kInfiniteValuation && DyadicScalar(a).valuation() >= m);
                recon = recon && (!h.hit || h.certificate->reconstruct(1) == x(a, d));
            }
        }
        bool powers = true;
        for (unsigned d = 2; d <= 63; ++d)
            powers = powers && (minHitValuation(d) > 0) == (((d + 1) & d) == 0);
        os << "; lattice vs oracle d <= 20 " << (oracle ? "agree" : "disagree") << "; certificates "
           << (recon ? "reconstruct" : "fail") << "; minHitValuation > 0 iff d+1 = 2^n (d <= 63) "
           << (powers ? "ok" : "wrong");
        HitResult h27 = hitDecideGraded(x(2, 7));
        bool diverges = singlePair(h27, 1, Polynomial::variable(1, 1, 6, q(1, 3)));
        os << "; DIVERGES 2*x1^7 is hit: Jq1(1/3*x1^6)";
        return Result{ok && family && oracle && recon && powers && diverges, os.str()};
    });

    criterion(10, "sode", [] {
        std::ostringstream os;
        Sode eq = Sode::parse("Jq1 - Jq0", "0");
        SodeSolution sol = sodeSolve(eq, 1, 1, 16);
        bool solved = sol.series && sodeResidual(eq, *sol.series, 16).verifiedThrough >= 15;
        bool recursion = true;
        if (sol.series)
            for (unsigned n = 1; n + 1 <= 15; ++n) {
                DyadicScalar lhs = DyadicScalar(long(n) - 1) * sol.series->coefficient(n - 1) +
                                   DyadicScalar(2 * long(n) - 1) * sol.series->coefficient(n) +
                                   DyadicScalar(long(n) + 1) * sol.series->coefficient(n + 1);
                recursion = recursion && lhs.isZero();
            }
        os << "Jq1(z) = z at x0 = 1: " << (solved ? "residual zero through 15" : "failed") << ", three-term recursion "
           << (recursion ? "holds" : "fails");
        bool none = !sodeSolve(eq, 0, 1, 16).series;
        os << "; at x0 = 0: " << (none ? "no solution" : "unexpected solution");
        TruncatedSeries g = geometricInverse(1, poly("x1"), 20);
        bool fact = true;
        for (unsigned k = 0; k <= 19; ++k)
            fact = fact && g.coefficient(k + 1) == DyadicScalar(factorial(k));
        os << "; (1 - Jq1)^-1(x) coefficients k! " << (fact ? "ok" : "wrong");
        auto logSeries = [](int sign) {
            TruncatedSeries s(1, 13, DyadicScalar(1));
            for (unsigned n = 1; n <= 13; ++n)
                s.setCoefficient(n, q(n % 2 ? -sign : sign, n));
            return s;
        };
        Sode logEq = Sode::parse("Jq1", "x1");
        ResidualReport shown = sodeResidual(logEq, logSeries(1), 12);
        ResidualReport flipped = sodeResidual(logEq, logSeries(-1), 12);
        os << "; sum (-1)^n/n (x-1)^n for Jq1(z) = x: "
           << (shown.ok ? "residual zero" : "residual " + shown.failCoefficient.str() + " at degree " +
                                                std::to_string(shown.failDegree.value_or(0)))
           << " (with (-1)^(n+1): " << (flipped.ok ? "residual zero through 12" : "fails") << ")";
        TruncatedSeries c(1, 12);
        for (unsigned n = 2; n <= 12; ++n)
            c.setCoefficient(n, DyadicScalar(factorial(n - 2), mpz_class(n) * (mpz_class(1) << (n - 2))));
        ResidualReport disp = sodeResidual(Sode::parse("Jq0 - Jq2", "x1"), c, 12);
        bool divergesOk = !disp.ok && disp.failDegree == 1u;
        os << "; DIVERGES (1 - Jq2)^-1 display: residual " << disp.failCoefficient.str() << " at degree "
           << disp.failDegree.value_or(0);
        return Result{solved && recursion && none && fact && shown.ok && divergesOk, os.str()};
    });

    criterion(11, "ore", [] {
        auto p = oreSolveDefault(op("Jq1"), op("Jq2"));
        bool ok = p && equalByEvaluation(op("Jq1") * p->x, op("Jq2") * p->y);
        OpElement lhs = op("Jq1") * op("Jq3 + Jq2.Jq1 - 1/6*Jq1.Jq1.Jq1"), rhs = op("Jq2.Jq2");
        Polynomial l = evalElement(lhs, poly("x1^2")), r = evalElement(rhs, poly("x1^2"));
        bool diverges = !equalByEvaluation(lhs, rhs);
        std::string detail = p ? "Jq1 (" + p->x.str() + ") = Jq2 (" + p->y.str() + ") verified" : "no pair found";
        detail += "; DIVERGES printed candidate on x1^2: " + l.str() + " vs " + r.str();
        return Result{ok && diverges, detail};
    });

    criterion(12, "ranks", [] {
        std::ostringstream os;
        bool ok = true;
        for (unsigned d = 1; d <= 6; ++d) {
            RankReport r = rankEstimate(d, 4, 16);
            if (d <= 3)
                ok = ok && r.rank == d;
            os << "d=" << d << " rank " << r.rank << " (nVars " << r.bounds.nVars << ", degBound " << r.bounds.degBound
               << ", " << (r.saturated ? "saturated" : "lower bound") << ", " << r.monomialsScanned
               << " monomials)" << (d < 6 ? "; " : "");
        }
        return Result{ok, os.str()};
    });

    criterion(13, "tate", [] {
        TruncatedSeries fact(1, 41), geo2(1, 40), geo1(1, 40);
        for (unsigned k = 0; k <= 40; ++k) {
            fact.setCoefficient(k + 1, DyadicScalar(factorial(k)));
            geo2.setCoefficient(k, DyadicScalar(mpz_class(mpz_class(1) << k)));
            geo1.setCoefficient(k, 1);
        }
        TateVerdict a = tateCheck(fact).verdict, b = tateCheck(geo2).verdict, c = tateCheck(geo1).verdict;
        bool affinoid = applyJq(1, poly("2*x2 - x1^2")) == poly("2*x2^2 - 2*x1^3");
        bool ok = a == TateVerdict::pass && b == TateVerdict::pass && c == TateVerdict::fail && affinoid;
        return Result{ok, "sum k! x^(k+1) " + verdictName(a) + ", sum 2^k x^k " + verdictName(b) + ", sum x^k " +
                              verdictName(c) + "; Jq1(2 x2 - x1^2) = 2 x2^2 - 2 x1^3 " + (affinoid ? "holds" : "fails")};
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
