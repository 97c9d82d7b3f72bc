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
#include "jqforge/hit.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "jqforge/action.hpp"
#include "jqforge/error.hpp"
#include "jqforge/evaluation.hpp"
#include "jqforge/linalg.hpp"

namespace jqforge {

namespace {

void monomialsRec(std::size_t n, unsigned deg, std::size_t pos, MultiIndex& cur, std::vector<MultiIndex>& out)
{
    if (pos + 1 == n) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (unsigned e = deg + 1; e-- > 0;) {
        cur[pos] = e;
        monomialsRec(n, deg - e, pos + 1, cur, out);
    }
}

std::vector<MultiIndex> monomialsOfDegree(std::size_t n, unsigned deg)
{
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    monomialsRec(n, deg, 0, cur, out);
    return out;
}

void checkInput(const Polynomial& f)
{
    if (!f.isHomogeneous())
        throw DomainError("hit decision needs a homogeneous polynomial: " + f.str());
    if (!f.isZero() && f.degree() == 0)
        throw DomainError("hit decision needs degree >= 1");
    if (!hasZ2Coefficients(f))
        throw NotInZ2Error("hit decision needs Z_2 coefficients: " + f.str());
}

/* Assigns row indices to monomials on first sight. */
class RowIndex {
public:
    std::size_t operator()(const MultiIndex& m)
    {
        return index_.try_emplace(m, index_.size()).first->second;
    }
    std::size_t size() const { return index_.size(); }

private:
    std::map<MultiIndex, std::size_t, GrlexLess> index_;
};

QVector toVector(const Polynomial& p, RowIndex& rows, std::size_t dim)
{
    QVector v(dim);
    for (const auto& [m, c] : p.terms())
        v[rows(m)] = c;
    return v;
}

struct Column {
    unsigned k;
    MultiIndex mu;
    Polynomial image;
};

HitCertificate certificateFrom(const std::vector<Column>& cols, const QVector& coeffs, std::size_t arity)
{
    std::map<unsigned, Polynomial> byK;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (coeffs[j].isZero())
            continue;
        auto it = byK.try_emplace(cols[j].k, Polynomial(arity)).first;
        it->second.addTerm(cols[j].mu, coeffs[j]);
    }
    HitCertificate cert;
    for (auto& [k, p] : byK)
        if (!p.isZero())
            cert.pairs.emplace_back(k, std::move(p));
    return cert;
}

/* c with target = c * column, or nullopt. */
std::optional<DyadicScalar> proportionality(const Polynomial& target, const Polynomial& column)
{
    if (target.terms().size() != column.terms().size())
        return std::nullopt;
    std::optional<DyadicScalar> c;
    auto it = column.terms().begin();
    for (const auto& [m, a] : target.terms()) {
        if (it->first != m)
            return std::nullopt;
        DyadicScalar r = a / it->second;
        if (c && *c != r)
            return std::nullopt;
        c = r;
        ++it;
    }
    return c;
}

}  // namespace

Polynomial HitCertificate::reconstruct(std::size_t arity) const
{
    Polynomial sum(arity);
    for (const auto& [k, g] : pairs)
        sum += applyJq(k, g);
    return sum;
}

long minHitValuation(unsigned d)
{
    if (d == 0)
        throw DomainError("minHitValuation needs d >= 1");
    long best = kInfiniteValuation;
    for (unsigned i = 1; 2 * i <= d; ++i)
        best = std::min(best, v2(binom(d - i, i)));
    return best;
}

std::optional<mpz_class> cohitOrder(unsigned d)
{
    long m = minHitValuation(d);
    if (m == kInfiniteValuation)
        return std::nullopt;
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(m));
    return r;
}

HitResult hitDecideGraded(const Polynomial& f, unsigned precisionJ)
{
    checkInput(f);
    HitResult res;
    std::size_t n = f.arity();
    if (f.isZero()) {
        res.hit = true;
        res.certificate = HitCertificate{};
        return res;
    }
    unsigned d = static_cast<unsigned>(f.degree());
    unsigned maxK = precisionJ ? std::min(precisionJ, d / 2) : d / 2;

    std::vector<Column> cols;
    for (unsigned k = 1; k <= maxK; ++k)
        for (const auto& mu : monomialsOfDegree(n, d - k)) {
            Polynomial img = applyJq(k, Polynomial::monomial(mu));
            if (!img.isZero())
                cols.push_back({k, mu, std::move(img)});
        }

    // Single-column certificates first: they are the readable ones.
    std::optional<std::tuple<mpz_class, mpz_class, std::size_t>> best;
    DyadicScalar bestC;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto c = proportionality(f, cols[j].image);
        if (!c || !c->inZ2())
            continue;
        auto key = std::make_tuple(mpz_class(abs(c->den())), mpz_class(abs(c->num())), j);
        if (!best || key < *best) {
            best = key;
            bestC = *c;
        }
    }
    HitCertificate cert;
    if (best) {
        const Column& col = cols[std::get<2>(*best)];
        cert.pairs.emplace_back(col.k, Polynomial::monomial(col.mu, bestC));
    } else {
        RowIndex rows;
        for (const auto& [m, c] : f.terms())
            rows(m);
        for (const auto& col : cols)
            for (const auto& [m, c] : col.image.terms())
                rows(m);
        std::vector<QVector> gens;
        for (const auto& col : cols)
            gens.push_back(toVector(col.image, rows, rows.size()));
        auto coeffs = Lattice2(gens, rows.size()).represent(toVector(f, rows, rows.size()));
        if (!coeffs)
            return res;
        cert = certificateFrom(cols, *coeffs, n);
    }
    Polynomial back = cert.reconstruct(n);
    for (const auto& [k, g] : cert.pairs)
        if (!hasZ2Coefficients(g))
            throw Error("hit certificate has a cofactor outside Z_2");
    if (!(back == f))
        throw Error("hit certificate does not reconstruct " + f.str());
    res.hit = true;
    res.certificate = std::move(cert);
    return res;
}

std::optional<HitCertificate> classicallyHit(const Polynomial& f)
{
    checkInput(f);
    F2Poly target = reduceMod2(f);
    std::size_t n = f.arity();
    if (target.empty())
        return HitCertificate{};
    unsigned d = static_cast<unsigned>(f.degree());

    std::vector<Column> cols;
    std::vector<F2Poly> images;
    for (unsigned k = 1; 2 * k <= d; ++k)
        for (const auto& mu : monomialsOfDegree(n, d - k)) {
            F2Poly img = classicalSq(k, F2Poly{mu});
            if (img.empty())
                continue;
            cols.push_back({k, mu, Polynomial(n)});
            images.push_back(std::move(img));
        }
    RowIndex rows;
    for (const auto& m : target)
        rows(m);
    for (const auto& img : images)
        for (const auto& m : img)
            rows(m);
    std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& mono : images[j])
            m[rows(mono)][j] = 1;
    std::vector<int> b(rows.size(), 0);
    for (const auto& mono : target)
        b[rows(mono)] = 1;
    auto x = solveF2(m, cols.size(), b);
    if (!x)
        return std::nullopt;
    QVector coeffs(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        coeffs[j] = (*x)[j];
    HitCertificate cert = certificateFrom(cols, coeffs, n);
    if (reduceMod2(cert.reconstruct(n) - f) != F2Poly{})
        throw Error("classical hit certificate does not reconstruct");
    return cert;
}

unsigned moduleAdemFiltration(const Polynomial& f, unsigned maxJ)
{
    checkInput(f);
    if (f.isZero())
        return maxJ;
    std::size_t n = f.arity();
    unsigned d = static_cast<unsigned>(f.degree());
    unsigned level = 0;
    for (unsigned j = 1; j <= maxJ && j < d; ++j) {
        std::vector<Polynomial> images;
        for (unsigned t = j; t < d; ++t) {
            std::vector<OpWord> words = compositionsOfLength(t, j);
            for (const auto& mu : monomialsOfDegree(n, d - t)) {
                WordImages wi(mu);
                for (const auto& w : words) {
                    Polynomial p = evaluateOn(OpElement::word(w), wi);
                    if (!p.isZero())
                        images.push_back(std::move(p));
                }
            }
        }
        RowIndex rows;
        for (const auto& [m, c] : f.terms())
            rows(m);
        for (const auto& p : images)
            for (const auto& [m, c] : p.terms())
                rows(m);
        std::vector<QVector> gens;
        for (const auto& p : images)
            gens.push_back(toVector(p, rows, rows.size()));
        if (!Lattice2(gens, rows.size()).contains(toVector(f, rows, rows.size())))
            break;
        level = j;
    }
    return level;
}

}  // namespace jqforge
