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
#include "jqforge/relations.hpp"

#include "jqforge/error.hpp"
#include "jqforge/evaluation.hpp"

namespace jqforge {

namespace {

QMatrix columnsToMatrix(const std::vector<QVector>& cols, std::size_t nrows)
{
    QMatrix m(nrows, QVector(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < nrows; ++i)
            m[i][j] = cols[j][i];
    return m;
}

bool isPowerOfTwo(unsigned k)
{
    return k != 0 && (k & (k - 1)) == 0;
}

void checkDegrees(unsigned k, const std::vector<OpWord>& words)
{
    if (words.empty())
        throw DomainError("empty word set");
    for (const auto& w : words)
        if (wordDegree(w) != k)
            throw DomainError("word " + formatWord(w) + " does not have degree " + std::to_string(k));
}

std::string boundsText(const EvalBounds& b)
{
    return "nVars=" + std::to_string(b.nVars) + ", degBound=" + std::to_string(b.degBound);
}

/* Greedy subset of words whose evaluations are linearly independent. */
std::vector<OpWord> independentSubset(const std::vector<OpWord>& words, unsigned d, const EvalBounds& b)
{
    const DegreeSpace& ds = degreeSpace(d, b);
    std::vector<OpWord> out;
    QMatrix rows;
    for (const auto& w : words) {
        rows.push_back(ds.wordCoordinates(w));
        if (rank(rows, ds.rank()) == rows.size())
            out.push_back(w);
        else
            rows.pop_back();
    }
    return out;
}

std::vector<OpWord> wordsUpToLength(unsigned d, unsigned maxLen)
{
    if (d == 0)
        return {OpWord{}};
    std::vector<OpWord> out;
    for (const auto& w : compositions(d))
        if (w.size() <= maxLen)
            out.push_back(w);
    return out;
}

}  // namespace

std::vector<OpWord> tPartitionWords(unsigned k, unsigned t)
{
    std::vector<OpWord> out{OpWord{k}};
    if (t >= 2)
        for (const auto& w : compositionsOfLength(k, t))
            out.push_back(w);
    return out;
}

std::vector<OpWord> binaryWords(unsigned k)
{
    std::vector<OpWord> out;
    for (const auto& w : compositions(k)) {
        bool ok = true;
        for (auto a : w)
            ok = ok && isPowerOfTwo(a);
        if (ok)
            out.push_back(w);
    }
    return out;
}

std::vector<OpWord> oneTwoWords(unsigned k)
{
    std::vector<OpWord> out;
    for (const auto& w : compositions(k)) {
        bool ok = true;
        for (auto a : w)
            ok = ok && a <= 2;
        if (ok)
            out.push_back(w);
    }
    return out;
}

RelationBasis ademNullspace(unsigned k, const std::vector<OpWord>& words, std::optional<EvalBounds> check)
{
    checkDegrees(k, words);
    QMatrix m(k + 1, QVector(words.size()));
    for (std::size_t j = 0; j < words.size(); ++j) {
        SymbolicPoly p = evaluateOnPower(words[j]);
        const auto& c = p.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i)
            m[i][j] = c[i];
    }
    RelationBasis rb;
    rb.degree = k;
    rb.words = words;
    rb.method = "symbolic";
    rb.bounds = check ? *check : defaultEvalBounds(k);
    for (const auto& v : nullspace(m, words.size())) {
        rb.basis.push_back(primitiveIntegerVector(v));
        rb.multivariable.push_back(equalByEvaluation(rb.element(rb.basis.size() - 1), OpElement(), rb.bounds));
    }
    return rb;
}

RelationBasis relationNullspace(unsigned k, const std::vector<OpWord>& words, std::optional<EvalBounds> bounds)
{
    checkDegrees(k, words);
    EvalBounds b = bounds ? *bounds : defaultEvalBounds(k);
    const DegreeSpace& ds = degreeSpace(k, b);
    std::vector<QVector> cols;
    for (const auto& w : words)
        cols.push_back(ds.wordCoordinates(w));
    RelationBasis rb;
    rb.degree = k;
    rb.words = words;
    rb.method = "evaluation";
    rb.bounds = b;
    for (const auto& v : nullspace(columnsToMatrix(cols, ds.rank()), words.size())) {
        rb.basis.push_back(primitiveIntegerVector(v));
        rb.multivariable.push_back(true);
    }
    return rb;
}

OpElement binaryDecompose(unsigned k, std::optional<EvalBounds> bounds)
{
    if (k == 0)
        throw DomainError("binaryDecompose needs k >= 1");
    EvalBounds b = bounds ? *bounds : defaultEvalBounds(k);
    const DegreeSpace& ds = degreeSpace(k, b);
    // Products of lower binary generators only; Jq^k itself is excluded.
    std::vector<OpWord> words;
    for (const auto& w : binaryWords(k))
        if (w.size() > 1)
            words.push_back(w);
    std::vector<QVector> gens;
    for (const auto& w : words)
        gens.push_back(ds.wordCoordinates(w));
    Lattice2 lattice(gens, ds.rank());
    auto x = lattice.represent(ds.wordCoordinates({k}));
    if (!x) {
        if (isPowerOfTwo(k))
            throw IndecomposableError("Jq^" + std::to_string(k) +
                                      " is not in the Z_2-span of products of lower Jq^(2^i) (" + boundsText(b) + ")");
        throw NotFoundError("resolution failed: Jq^" + std::to_string(k) +
                            " is not in the Z_2-span of binary words (" + boundsText(b) + ")");
    }
    return combine(words, *x);
}

OpElement q12Decompose(unsigned k, std::optional<EvalBounds> bounds)
{
    if (k == 0)
        throw DomainError("q12Decompose needs k >= 1");
    EvalBounds b = bounds ? *bounds : defaultEvalBounds(k);
    const DegreeSpace& ds = degreeSpace(k, b);
    std::vector<OpWord> words = oneTwoWords(k);
    std::vector<QVector> cols;
    for (const auto& w : words)
        cols.push_back(ds.wordCoordinates(w));
    auto x = solve(columnsToMatrix(cols, ds.rank()), words.size(), ds.wordCoordinates({k}));
    if (!x)
        throw NotFoundError("Jq^" + std::to_string(k) + " is not in the span of {Jq1, Jq2}-words (" +
                            boundsText(b) + ")");
    return combine(words, *x);
}

std::optional<OrePair> oreSolve(const OpElement& theta, const OpElement& eta, const std::vector<OpWord>& setX,
                                const std::vector<OpWord>& setY, std::optional<EvalBounds> bounds)
{
    unsigned dt = theta.degree(), de = eta.degree();
    if (setX.empty() || setY.empty())
        throw DomainError("oreSolve: empty word set");
    unsigned dx = wordDegree(setX.front()), dy = wordDegree(setY.front());
    checkDegrees(dx, setX);
    checkDegrees(dy, setY);
    if (dt + dx != de + dy)
        throw DomainError("oreSolve: degree-incompatible word sets");
    const unsigned D = dt + dx;
    EvalBounds b = bounds ? *bounds : defaultEvalBounds(D);

    std::vector<OpWord> xs = independentSubset(setX, dx, b);
    std::vector<OpWord> ys = independentSubset(setY, dy, b);
    const DegreeSpace& ds = degreeSpace(D, b);
    std::vector<QVector> cols;
    for (const auto& w : xs)
        cols.push_back(ds.coordinates(theta * OpElement::word(w)));
    for (const auto& w : ys)
        cols.push_back(ds.coordinates(-(eta * OpElement::word(w))));
    auto ns = nullspace(columnsToMatrix(cols, ds.rank()), cols.size());
    if (ns.empty())
        return std::nullopt;
    QVector v = primitiveIntegerVector(ns.front());
    OrePair r;
    for (std::size_t i = 0; i < xs.size(); ++i)
        r.x.addTerm(xs[i], v[i]);
    for (std::size_t i = 0; i < ys.size(); ++i)
        r.y.addTerm(ys[i], v[xs.size() + i]);
    r.degX = dx;
    r.degY = dy;
    r.bounds = b;
    if (r.x.isZero() || r.y.isZero() || !equalByEvaluation(theta * r.x, eta * r.y, b))
        throw Error("oreSolve: internal verification failed");
    return r;
}

std::optional<OrePair> oreSolveDefault(const OpElement& theta, const OpElement& eta, unsigned maxExtraDegree,
                                       std::optional<EvalBounds> bounds)
{
    unsigned dt = theta.degree(), de = eta.degree();
    unsigned dx0 = de > dt ? de - dt : 0;
    std::vector<std::string> log;
    for (unsigned step = 0; step <= maxExtraDegree; ++step) {
        unsigned dx = dx0 + step;
        unsigned dy = dx + dt - de;
        unsigned top = std::max({dx, dy, 1u});
        for (unsigned len = std::min(3u, top); len <= top; ++len) {
            auto setX = wordsUpToLength(dx, len);
            auto setY = wordsUpToLength(dy, len);
            auto r = oreSolve(theta, eta, setX, setY, bounds);
            log.push_back("deg x=" + std::to_string(dx) + ", deg y=" + std::to_string(dy) +
                          ", max length=" + std::to_string(len) + ": " + (r ? "found" : "none"));
            if (r) {
                r->log = std::move(log);
                return r;
            }
        }
    }
    return std::nullopt;
}

std::optional<Fraction> fractionAdd(const OpElement& a, const OpElement& b, const OpElement& c, const OpElement& d,
                                    std::optional<EvalBounds> bounds)
{
    if (b.isZero() || d.isZero())
        throw DomainError("fractionAdd: zero denominator");
    if (b.isHomogeneous() && d.isHomogeneous() && b.degree() == d.degree() && equalByEvaluation(b, d, bounds))
        return Fraction{a + c, b, std::nullopt};
    auto ore = oreSolveDefault(b, d, 4, bounds);
    if (!ore)
        return std::nullopt;
    Fraction f{a * ore->x + c * ore->y, b * ore->x, ore};
    return f;
}

RankReport rankEstimate(unsigned d, std::size_t nVars, unsigned degBound)
{
    EvalBounds b{nVars, degBound};
    const DegreeSpace& ds = degreeSpace(d, b);
    return {ds.rank(), b, ds.saturated(), ds.monomialsScanned()};
}

}  // namespace jqforge
