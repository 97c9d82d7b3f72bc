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
#include "jqforge/series.hpp"

#include <algorithm>
#include <string>

#include "jqforge/action.hpp"
#include "jqforge/error.hpp"
#include "jqforge/linalg.hpp"

namespace jqforge {

namespace {

/* Jq^k on a polynomial in u = xi - xi_0. Exact; u-degree drops by at most k. */
Polynomial jqCentered(unsigned k, const Polynomial& q, const DyadicScalar& xi0)
{
    if (k == 0)
        return q;
    Polynomial xi = Polynomial::variable(1, 1) + Polynomial::constant(1, xi0);
    Polynomial lead = polyPow(xi, 2 * k);
    Polynomial r(1);
    for (const auto& [m, a] : q.terms()) {
        mpz_class b = binom(m[0], k);
        if (b == 0)
            continue;
        r += lead * Polynomial::variable(1, 1, m[0] - k, a * DyadicScalar(b));
    }
    return r;
}

Polynomial applyWordCentered(const OpWord& w, Polynomial q, const DyadicScalar& xi0)
{
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        q = jqCentered(*it, q, xi0);
    return q;
}

/* Generator stencil: coefficient of a_{r+s} is C(r+s,k) C(2k,k-s) xi0^{k+s}. */
std::map<int, SymbolicPoly> generatorStencil(unsigned k, const DyadicScalar& xi0)
{
    std::map<int, SymbolicPoly> st;
    int kk = static_cast<int>(k);
    for (int s = -kk; s <= kk; ++s) {
        DyadicScalar c = DyadicScalar(binom(2 * kk, kk - s)) * pow(xi0, static_cast<unsigned long>(kk + s));
        if (c.isZero())
            continue;
        st[s] = SymbolicPoly::binomial(s, k) * c;
    }
    return st;
}

std::map<int, SymbolicPoly> composeStencils(const std::map<int, SymbolicPoly>& outer,
                                            const std::map<int, SymbolicPoly>& inner)
{
    std::map<int, SymbolicPoly> out;
    for (const auto& [s, a] : outer)
        for (const auto& [t, b] : inner)
            out[s + t] += a * b.shifted(s);
    std::erase_if(out, [](const auto& kv) { return kv.second.isZero(); });
    return out;
}

/* Top-level split on + and - outside brackets. */
std::vector<std::string> splitTerms(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t')
            continue;
        if (ch == '[')
            ++depth;
        if (ch == ']')
            --depth;
        if (depth < 0)
            throw ParseError("unbalanced ']' in operator");
        if ((ch == '+' || ch == '-') && depth == 0 && !cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
        cur.push_back(ch);
    }
    if (depth != 0)
        throw ParseError("unbalanced '[' in operator");
    if (!cur.empty())
        out.push_back(cur);
    if (out.empty())
        throw ParseError("empty operator");
    return out;
}

}  // namespace

TruncatedSeries seriesApplyOp(const OpElement& e, const TruncatedSeries& s)
{
    unsigned N = s.order();
    if (!s.centered())
        return TruncatedSeries(evalElement(e, s.terms()), N);
    const DyadicScalar& xi0 = *s.center();
    if (e.isZero())
        return TruncatedSeries(1, N, xi0);
    unsigned g = e.maxDegree();
    if (g > N)
        throw DomainError("operator degree " + std::to_string(g) + " exceeds series order " + std::to_string(N));
    Polynomial sum(1);
    for (const auto& [w, c] : e.terms())
        sum += applyWordCentered(w, s.terms(), xi0) * c;
    return TruncatedSeries(sum, N - g, xi0);
}

std::string verdictName(TateVerdict v)
{
    switch (v) {
    case TateVerdict::pass:
        return "pass";
    case TateVerdict::fail:
        return "fail";
    case TateVerdict::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

TateReport tateCheck(const TruncatedSeries& s)
{
    if (s.centered())
        throw DomainError("tateCheck takes an uncentered series");
    TateReport rep;
    unsigned N = s.order();
    std::vector<long> minVal(N + 1, kInfiniteValuation);
    for (const auto& [m, c] : s.terms().terms()) {
        unsigned d = totalDegree(m);
        minVal[d] = std::min(minVal[d], c.valuation());
    }
    for (unsigned d = 0; d <= N; ++d)
        rep.profile.emplace_back(d, minVal[d]);
    unsigned len = N + 1;
    unsigned cut[4] = {0, len / 3, 2 * len / 3, len};
    for (int i = 0; i < 3; ++i) {
        rep.thirds[i] = kInfiniteValuation;
        for (unsigned d = cut[i]; d < cut[i + 1]; ++d)
            rep.thirds[i] = std::min(rep.thirds[i], minVal[d]);
    }
    long t1 = rep.thirds[0], t2 = rep.thirds[1], t3 = rep.thirds[2];
    if (len < 3)
        rep.verdict = TateVerdict::inconclusive;
    else if (t3 == kInfiniteValuation || (t1 < t2 && t2 < t3))
        rep.verdict = TateVerdict::pass;
    else if (t3 <= 0 && t3 <= t1)
        rep.verdict = TateVerdict::fail;
    else
        rep.verdict = TateVerdict::inconclusive;
    return rep;
}

TruncatedSeries geometricInverse(unsigned k, const Polynomial& f, unsigned N)
{
    if (k == 0)
        throw DomainError("geometricInverse needs k >= 1");
    if (f.arity() != 1)
        throw DomainError("geometricInverse takes a univariate polynomial");
    if (f.degree() > static_cast<int>(N))
        throw DomainError("order " + std::to_string(N) + " is below deg f");
    Polynomial sum = f;
    Polynomial term = f;
    while (!term.isZero()) {
        term = truncate(applyJq(k, term), N);
        sum += term;
    }
    Polynomial check = truncate(sum - applyJq(k, sum), N);
    if (!(check == truncate(f, N)))
        throw Error("geometricInverse postcondition failed");
    return TruncatedSeries(sum, N);
}

Sode Sode::fromOperator(const OpElement& op, const Polynomial& rhs)
{
    Sode s;
    for (const auto& [w, c] : op.terms())
        s.terms.push_back({Polynomial::constant(1, c), w});
    s.rhs = rhs;
    return s;
}

Sode Sode::parse(std::string_view op, std::string_view rhs)
{
    Sode s;
    s.rhs = Polynomial::parse(rhs, 1);
    for (const std::string& raw : splitTerms(op)) {
        std::string t = raw;
        bool negative = false;
        if (t[0] == '+' || t[0] == '-') {
            negative = t[0] == '-';
            t.erase(0, 1);
        }
        Polynomial coeff = Polynomial::constant(1, negative ? -1 : 1);
        if (!t.empty() && t[0] == '[') {
            auto close = t.find(']');
            coeff = coeff * Polynomial::parse(std::string_view(t).substr(1, close - 1), 1);
            t.erase(0, close + 1);
            if (!t.empty() && t[0] == '*')
                t.erase(0, 1);
            if (t.empty())
                t = "Jq0";
        }
        if (t.find('[') != std::string::npos || t.find(']') != std::string::npos)
            throw ParseError("misplaced bracket in operator term '" + raw + "'");
        OpElement parsed = OpElement::parse(t);
        for (const auto& [w, c] : parsed.terms())
            s.terms.push_back({coeff * c, w});
    }
    return s;
}

OpElement Sode::constantOperator() const
{
    OpElement op;
    for (const auto& term : terms) {
        if (term.coefficient.degree() > 0)
            throw UnsupportedCoefficientsError("non-constant coefficient " + term.coefficient.str() +
                                               " on " + formatWord(term.word) +
                                               "; only constant-coefficient equations are solved");
        op.addTerm(term.word, term.coefficient.coefficient(MultiIndex(term.coefficient.arity(), 0)));
    }
    if (op.isZero())
        throw DomainError("zero operator");
    return op;
}

std::map<int, SymbolicPoly> recurrenceStencil(const OpElement& op, const DyadicScalar& xi0)
{
    std::map<int, SymbolicPoly> total;
    for (const auto& [w, c] : op.terms()) {
        std::map<int, SymbolicPoly> st{{0, SymbolicPoly::constant(1)}};
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            st = composeStencils(generatorStencil(*it, xi0), st);
        for (const auto& [s, p] : st)
            total[s] += p * c;
    }
    std::erase_if(total, [](const auto& kv) { return kv.second.isZero(); });
    return total;
}

SodeSolution sodeSolve(const Sode& eq, const DyadicScalar& xi0, const DyadicScalar& a0, unsigned N)
{
    OpElement op = eq.constantOperator();
    if (eq.rhs.arity() != 1)
        throw DomainError("centered solving needs a univariate right-hand side");
    unsigned g = op.maxDegree();
    if (N < g)
        throw DomainError("order " + std::to_string(N) + " is below the operator degree");
    auto stencil = recurrenceStencil(op, xi0);
    Polynomial rhsU = shiftToCenter(eq.rhs, xi0);

    // Unknowns a_1..a_N; row r is the coefficient of u^r, r = 0..N-g.
    QMatrix m;
    QVector b;
    for (unsigned r = 0; r + g <= N; ++r) {
        QVector row(N);
        DyadicScalar rhs = rhsU.coefficient(MultiIndex{r});
        for (const auto& [s, p] : stencil) {
            long n = static_cast<long>(r) + s;
            if (n < 0)
                continue;
            DyadicScalar c = p.eval(DyadicScalar(static_cast<long>(r)));
            if (n == 0)
                rhs -= c * a0;
            else
                row[n - 1] += c;
        }
        m.push_back(std::move(row));
        b.push_back(rhs);
    }

    SodeSolution out;
    for (std::size_t r = 0; r < m.size(); ++r) {
        QMatrix sub(m.begin(), m.begin() + r + 1);
        QVector subB(b.begin(), b.begin() + r + 1);
        if (!solve(sub, N, subB)) {
            out.inconsistentIndex = static_cast<unsigned>(r);
            out.reason = "equation for the coefficient of (x1 - " + xi0.str() + ")^" + std::to_string(r) +
                         " cannot be satisfied";
            return out;
        }
    }
    auto a = solve(m, N, b);
    Polynomial p = Polynomial::constant(1, a0);
    for (unsigned n = 1; n <= N; ++n)
        p.addTerm(MultiIndex{n}, (*a)[n - 1]);
    TruncatedSeries series(p, N, xi0);
    ResidualReport check = sodeResidual(eq, series, N);
    if (!check.ok)
        throw Error("sodeSolve: solution fails its residual at degree " + std::to_string(*check.failDegree));
    out.series = std::move(series);
    return out;
}

ResidualReport sodeResidual(const Sode& eq, const TruncatedSeries& candidate, unsigned N)
{
    OpElement op = eq.constantOperator();
    TruncatedSeries image = seriesApplyOp(op, candidate);
    unsigned through = std::min(N, image.order());
    Polynomial rhs = candidate.centered() ? shiftToCenter(eq.rhs, *candidate.center()) : eq.rhs;
    Polynomial residual = truncate(image.terms() - rhs, through);
    ResidualReport rep{true, static_cast<long>(through), std::nullopt, DyadicScalar(0)};
    for (unsigned d = 0; d <= through; ++d) {
        Polynomial part = gradedPart(residual, d);
        if (!part.isZero()) {
            rep.ok = false;
            rep.failDegree = d;
            rep.failCoefficient = part.terms().begin()->second;
            rep.verifiedThrough = static_cast<long>(d) - 1;
            break;
        }
    }
    return rep;
}

}  // namespace jqforge
