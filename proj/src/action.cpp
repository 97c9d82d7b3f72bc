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
#include "jqforge/action.hpp"

#include "jqforge/error.hpp"

namespace jqforge {

Polynomial applyTotal(const Polynomial& f)
{
    const std::size_t n = f.arity();
    std::vector<Polynomial> images;
    for (std::size_t i = 1; i <= n; ++i)
        images.push_back(Polynomial::variable(n, i) + Polynomial::variable(n, i, 2));
    Polynomial r(n);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > 0)
                t = t * polyPow(images[i], m[i]);
        r += t;
    }
    return r;
}

namespace {

void spread(unsigned rem, std::size_t i, const MultiIndex& m, MultiIndex& cur, const DyadicScalar& coef,
            Polynomial& out)
{
    if (i == m.size()) {
        if (rem == 0)
            out.addTerm(cur, coef);
        return;
    }
    unsigned top = std::min(rem, m[i]);
    for (unsigned ki = 0; ki <= top; ++ki) {
        cur[i] = m[i] + ki;
        spread(rem - ki, i + 1, m, cur, ki == 0 ? coef : coef * DyadicScalar(binom(m[i], ki)), out);
    }
}

}  // namespace

Polynomial applyJq(unsigned k, const Polynomial& f)
{
    Polynomial r(f.arity());
    for (const auto& [m, c] : f.terms()) {
        if (totalDegree(m) < k)
            continue;
        MultiIndex cur(m.size());
        spread(k, 0, m, cur, c, r);
    }
    return r;
}

Polynomial applyWord(const OpWord& w, const Polynomial& f)
{
    Polynomial r = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r = applyJq(*it, r);
    return r;
}

Polynomial applyPsiQ(const DyadicScalar& q, const Polynomial& f)
{
    Polynomial r = f;
    DyadicScalar qk = 1;
    for (int k = 1; k <= f.degree(); ++k) {
        qk *= q;
        if (qk.isZero())
            break;
        r += applyJq(static_cast<unsigned>(k), f) * qk;
    }
    return r;
}

TruncatedSeries applyConjTotal(const Polynomial& f, unsigned N)
{
    if (f.degree() > static_cast<int>(N))
        throw DomainError("truncation order below the degree of the input");
    const std::size_t n = f.arity();
    // c(x) with c + c^2 = x, by fixed-point iteration in one variable.
    Polynomial x = Polynomial::variable(1, 1);
    Polynomial c = x;
    for (unsigned it = 0; it < N; ++it)
        c = truncate(x - c * c, N);
    Polynomial r(n);
    for (const auto& [m, a] : f.terms()) {
        Polynomial t = Polynomial::constant(n, a);
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0)
                continue;
            Polynomial ci(n);
            for (const auto& [e, b] : c.terms()) {
                MultiIndex mi(n, 0);
                mi[i] = e[0];
                ci.addTerm(mi, b);
            }
            Polynomial p = Polynomial::constant(n, 1);
            for (unsigned j = 0; j < m[i]; ++j)
                p = truncate(p * ci, N);
            t = truncate(t * p, N);
        }
        r += t;
    }
    return TruncatedSeries(r, N);
}

SignedPower jqOnInverseMonomial(unsigned k)
{
    return {k % 2 == 0 ? 1 : -1, static_cast<long>(k) - 1};
}

DyadicScalar applyJqNeg(unsigned k, unsigned m)
{
    if (k == 0 || m <= k)
        throw DomainError("Jq^-k(x^m) closed form needs m > k >= 1");
    mpz_class b = binom(static_cast<long>(m - k), k);
    if (b == 0)
        throw DomainError("undefined: C(" + std::to_string(m - k) + ", " + std::to_string(k) + ") = 0");
    return DyadicScalar(mpz_class(1), b);
}

}  // namespace jqforge
