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
#include "jqforge/evaluation.hpp"

#include <mutex>
#include <tuple>

#include "jqforge/error.hpp"

namespace jqforge {

PackedMonomial pack(const MultiIndex& m)
{
    if (m.size() > kMaxPackedVars)
        throw DomainError("evaluation supports at most " + std::to_string(kMaxPackedVars) + " variables");
    PackedMonomial p = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > kMaxPackedExponent)
            throw DomainError("exponent " + std::to_string(m[i]) + " exceeds the evaluation limit");
        p |= static_cast<PackedMonomial>(m[i]) << (8 * i);
    }
    return p;
}

MultiIndex unpack(PackedMonomial p, std::size_t n)
{
    MultiIndex m(n);
    for (std::size_t i = 0; i < n; ++i)
        m[i] = static_cast<std::uint32_t>((p >> (8 * i)) & 0xff);
    return m;
}

namespace {

const mpz_class& smallBinom(unsigned n, unsigned k)
{
    static const std::vector<std::vector<mpz_class>> table = [] {
        std::vector<std::vector<mpz_class>> t(kMaxPackedExponent + 1);
        for (unsigned i = 0; i <= kMaxPackedExponent; ++i) {
            t[i].resize(i + 1);
            t[i][0] = t[i][i] = 1;
            for (unsigned j = 1; j < i; ++j)
                t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    return table[n][k];
}

void spread(unsigned rem, std::size_t i, std::size_t n, const unsigned* e, PackedMonomial key, const mpz_class& coef,
            IntPoly& out)
{
    if (i == n) {
        if (rem == 0)
            out[key] += coef;
        return;
    }
    unsigned top = std::min(rem, e[i]);
    for (unsigned ki = 0; ki <= top; ++ki) {
        if (e[i] + ki > kMaxPackedExponent)
            throw DomainError("exponent exceeds the evaluation limit");
        PackedMonomial next = key + (static_cast<PackedMonomial>(ki) << (8 * i));
        if (ki == 0)
            spread(rem, i + 1, n, e, next, coef, out);
        else
            spread(rem - ki, i + 1, n, e, next, coef * smallBinom(e[i], ki), out);
    }
}

}  // namespace

void applyJqInt(unsigned k, const IntPoly& f, std::size_t n, IntPoly& out)
{
    unsigned e[kMaxPackedVars];
    for (const auto& [key, c] : f) {
        unsigned deg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = static_cast<unsigned>((key >> (8 * i)) & 0xff);
            deg += e[i];
        }
        if (k > deg)
            continue;
        spread(k, 0, n, e, key, c, out);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (sgn(it->second) == 0)
            it = out.erase(it);
        else
            ++it;
    }
}

unsigned long partitionCount(unsigned d)
{
    std::vector<unsigned long> p(d + 1, 0);
    p[0] = 1;
    for (unsigned part = 1; part <= d; ++part)
        for (unsigned s = part; s <= d; ++s)
            p[s] += p[s - part];
    return p[d];
}

namespace {

void partitionsInto(unsigned rest, unsigned maxPart, std::size_t slots, MultiIndex& cur, std::size_t pos,
                    std::vector<MultiIndex>& out)
{
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    if (pos == slots)
        return;
    for (unsigned a = std::min(rest, maxPart); a >= 1; --a) {
        cur[pos] = a;
        partitionsInto(rest - a, a, slots, cur, pos + 1, out);
        cur[pos] = 0;
    }
}

}  // namespace

std::vector<MultiIndex> testMonomials(const EvalBounds& b, unsigned minDegree)
{
    if (b.nVars == 0)
        throw DomainError("nVars must be positive");
    std::vector<MultiIndex> out;
    for (unsigned e = minDegree; e <= b.degBound; ++e) {
        MultiIndex cur(b.nVars, 0);
        partitionsInto(e, e, b.nVars, cur, 0, out);
    }
    return out;
}

WordImages::WordImages(const MultiIndex& mu) : n_(mu.size())
{
    memo_[{}] = IntPoly{{pack(mu), mpz_class(1)}};
}

const IntPoly& WordImages::operator()(const OpWord& w)
{
    auto it = memo_.find(w);
    if (it != memo_.end())
        return it->second;
    OpWord rest(w.begin() + 1, w.end());
    const IntPoly& inner = (*this)(rest);
    IntPoly out;
    applyJqInt(w.front(), inner, n_, out);
    return memo_.emplace(w, std::move(out)).first->second;
}

Polynomial evaluateOn(const OpElement& e, WordImages& images)
{
    Polynomial r(images.arity());
    for (const auto& [w, c] : e.terms())
        for (const auto& [key, v] : images(w))
            r.addTerm(unpack(key, images.arity()), c * DyadicScalar(v));
    return r;
}

DegreeSpace::DegreeSpace(unsigned d, const EvalBounds& bounds, bool exhaustive) : d_(d), bounds_(bounds)
{
    words_ = compositions(d);
    for (std::size_t j = 0; j < words_.size(); ++j)
        index_.emplace(words_[j], j);
    if (d == 0) {
        basis_ = {QVector{DyadicScalar(1)}};
        saturated_ = true;
        return;
    }
    const std::size_t W = words_.size();
    const std::size_t cap = partitionCount(d);
    RowBasis rb(W);
    for (const MultiIndex& mu : testMonomials(bounds, 1)) {
        WordImages images(mu);
        ++scanned_;
        std::map<PackedMonomial, std::vector<mpz_class>> rows;
        for (std::size_t j = 0; j < W; ++j) {
            for (const auto& [key, c] : images(words_[j])) {
                auto& row = rows[key];
                if (row.empty())
                    row.resize(W);
                row[j] = c;
            }
        }
        for (const auto& [key, row] : rows) {
            rb.insert(row);
            if (!exhaustive && rb.rank() == cap)
                break;
        }
        if (rb.rank() == cap) {
            saturated_ = true;
            if (!exhaustive)
                break;
        }
    }
    basis_ = rb.rows();
}

std::size_t DegreeSpace::wordIndex(const OpWord& w) const
{
    auto it = index_.find(w);
    if (it == index_.end())
        throw DomainError("word " + formatWord(w) + " is not of degree " + std::to_string(d_));
    return it->second;
}

QVector DegreeSpace::coordinates(const OpElement& e) const
{
    QVector x(words_.size());
    for (const auto& [w, c] : e.terms())
        x[wordIndex(w)] += c;
    return matVec(basis_, x);
}

QVector DegreeSpace::wordCoordinates(const OpWord& w) const
{
    std::size_t j = wordIndex(w);
    QVector out(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        out[i] = basis_[i][j];
    return out;
}

const DegreeSpace& degreeSpace(unsigned d, const EvalBounds& bounds)
{
    static std::mutex mu;
    static std::map<std::tuple<unsigned, std::size_t, unsigned>, std::unique_ptr<DegreeSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(d, bounds.nVars, bounds.degBound);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<DegreeSpace>(d, bounds)).first;
    return *it->second;
}

std::map<unsigned, OpElement> gradedParts(const OpElement& e)
{
    std::map<unsigned, OpElement> parts;
    for (const auto& [w, c] : e.terms())
        parts[wordDegree(w)].addTerm(w, c);
    return parts;
}

}  // namespace jqforge
