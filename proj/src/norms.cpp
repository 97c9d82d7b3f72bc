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
#include "jqforge/norms.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "jqforge/error.hpp"
#include "jqforge/evaluation.hpp"
#include "jqforge/linalg.hpp"

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

const DegreeSpace& spaceFor(unsigned d)
{
    return degreeSpace(d, defaultEvalBounds(d));
}

/* Scales a rational vector to an integer vector with the same span. */
std::vector<mpz_class> integerRow(const QVector& v)
{
    mpz_class l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    std::vector<mpz_class> row;
    row.reserve(v.size());
    for (const auto& x : v)
        row.push_back(x.num() * (l / x.den()));
    return row;
}

/*
 * chain[j] spans the coordinates of the degree-d words of length >= j,
 * j = 1..d. Built once per degree.
 */
const std::vector<RowBasis>& lengthChain(unsigned d)
{
    static std::mutex mu;
    static std::map<unsigned, std::vector<RowBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end())
        return it->second;
    const DegreeSpace& ds = spaceFor(d);
    std::vector<RowBasis> chain(d + 1, RowBasis(ds.rank()));
    RowBasis cur(ds.rank());
    for (unsigned j = d; j >= 1; --j) {
        for (const auto& w : ds.words())
            if (w.size() == j)
                cur.insert(integerRow(ds.wordCoordinates(w)));
        chain[j] = cur;
    }
    return cache.emplace(d, std::move(chain)).first->second;
}

NormBounds boundsOf(const EvalBounds& b, unsigned maxJ = 0)
{
    return NormBounds{b.nVars, b.degBound, maxJ};
}

/* Lifts of the F_2 kernel of phi in degree t, plus 2*w for every word. */
std::vector<OpElement> kernelGenerators(unsigned t)
{
    std::vector<OpWord> words = compositions(t);
    std::map<Word, std::size_t, WordLess> rowOf;
    std::vector<ClassicalElement> images;
    for (const auto& w : words) {
        images.push_back(phiReduce(OpElement::word(w)));
        for (const auto& a : images.back().terms())
            rowOf.emplace(a, 0);
    }
    std::size_t r = 0;
    for (auto& [a, idx] : rowOf)
        idx = r++;
    std::vector<std::vector<int>> m(rowOf.size(), std::vector<int>(words.size(), 0));
    for (std::size_t j = 0; j < words.size(); ++j)
        for (const auto& a : images[j].terms())
            m[rowOf.at(a)][j] = 1;

    std::vector<OpElement> gens;
    for (const auto& w : words)
        gens.push_back(OpElement::word(w, 2));
    for (const auto& v : nullspaceF2(m, words.size())) {
        OpElement e;
        for (std::size_t j = 0; j < words.size(); ++j)
            if (v[j])
                e.addTerm(words[j], 1);
        gens.push_back(e);
    }
    return gens;
}

/* Reduces generators of a degree-t lattice to an echelon set of representatives. */
std::vector<OpElement> reduceLattice(const std::vector<OpElement>& gens, unsigned t)
{
    const DegreeSpace& ds = spaceFor(t);
    std::vector<QVector> coords;
    coords.reserve(gens.size());
    for (const auto& g : gens)
        coords.push_back(ds.coordinates(g));
    Lattice2 lat(coords, ds.rank());
    std::vector<OpElement> reps;
    for (const auto& combo : lat.combinations()) {
        OpElement rep;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (!combo[g].isZero())
                rep += combo[g] * gens[g];
        reps.push_back(rep);
    }
    return reps;
}

class KernelPowers {
public:
    /* Generators of ker(phi)^j in degree t. */
    const std::vector<OpElement>& get(unsigned j, unsigned t)
    {
        auto key = std::make_pair(j, t);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        std::vector<OpElement> out;
        if (t == 0) {
            out.push_back(OpElement::scalar(pow2(j)));
        } else if (j == 1) {
            out = reduceLattice(kernelGenerators(t), t);
        } else {
            std::vector<OpElement> gens;
            for (unsigned s = 0; s <= t; ++s) {
                const auto& left = get(1, s);
                const auto& right = get(j - 1, t - s);
                for (const auto& a : left)
                    for (const auto& b : right)
                        gens.push_back(a * b);
            }
            out = reduceLattice(gens, t);
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::map<std::pair<unsigned, unsigned>, std::vector<OpElement>> memo_;
};

}  // namespace

std::string methodName(NormMethod m)
{
    switch (m) {
    case NormMethod::ademWordLength:
        return "ademWordLength";
    case NormMethod::kerAdicLattice:
        return "kerAdicLattice";
    case NormMethod::monomialSup:
        return "monomialSup";
    }
    return "unknown";
}

DyadicScalar ValuationReport::norm() const
{
    return infinite() ? DyadicScalar(0) : pow2(-value);
}

ValuationReport ademValuation(const OpElement& e, bool withWitness)
{
    ValuationReport rep;
    rep.method = NormMethod::ademWordLength;
    if (e.isZero()) {
        rep.value = kInfiniteValuation;
        return rep;
    }
    unsigned d = e.degree();
    const DegreeSpace& ds = spaceFor(d);
    rep.bounds = boundsOf(ds.bounds(), d);
    if (d == 0) {
        rep.value = 0;
        rep.witnessElement = e;
        return rep;
    }
    QVector target = ds.coordinates(e);
    bool allZero = true;
    for (const auto& x : target)
        allZero = allZero && x.isZero();
    if (allZero) {
        rep.value = kInfiniteValuation;
        return rep;
    }
    const auto& chain = lengthChain(d);
    std::vector<mpz_class> row = integerRow(target);
    unsigned j = d;
    while (j > 1 && !chain[j].contains(row))
        --j;
    rep.value = j;
    if (withWitness) {
        std::vector<OpWord> words;
        std::vector<QVector> cols;
        for (const auto& w : ds.words())
            if (w.size() >= j) {
                words.push_back(w);
                cols.push_back(ds.wordCoordinates(w));
            }
        auto x = solve(columnsToMatrix(cols, ds.rank()), words.size(), target);
        if (!x)
            throw Error("ademValuation: witness solve failed");
        rep.witnessElement = combine(words, *x);
    }
    return rep;
}

bool kerPhiMembership(const OpElement& e)
{
    return phiReduce(e).isZero();
}

ValuationReport kerAdicValuation(const OpElement& e, unsigned maxJ)
{
    if (!e.hasZ2Coefficients())
        throw NotInZ2Error("kerAdicValuation needs Z_2 coefficients: " + e.str());
    ValuationReport rep;
    rep.method = NormMethod::kerAdicLattice;
    if (e.isZero()) {
        rep.value = kInfiniteValuation;
        rep.bounds.maxJ = maxJ;
        return rep;
    }
    unsigned d = e.degree();
    if (d > kKerAdicMaxDegree)
        throw DomainError("kerAdicValuation supports degree <= " + std::to_string(kKerAdicMaxDegree) + ", got " +
                          std::to_string(d));
    const DegreeSpace& ds = spaceFor(d);
    rep.bounds = boundsOf(ds.bounds(), maxJ);
    QVector target = ds.coordinates(e);
    KernelPowers powers;
    rep.value = 0;
    for (unsigned j = 1; j <= maxJ; ++j) {
        std::vector<QVector> coords;
        for (const auto& g : powers.get(j, d))
            coords.push_back(ds.coordinates(g));
        if (!Lattice2(coords, ds.rank()).contains(target))
            break;
        rep.value = j;
    }
    return rep;
}

ValuationReport operatorNormEstimate(const OpElement& e, std::size_t nVars, unsigned degBound)
{
    if (!e.hasZ2Coefficients())
        throw NotInZ2Error("operatorNormEstimate needs Z_2 coefficients: " + e.str());
    ValuationReport rep;
    rep.method = NormMethod::monomialSup;
    rep.bounds = NormBounds{nVars, degBound, 0};
    rep.value = kInfiniteValuation;
    long floor = kInfiniteValuation;
    for (const auto& [w, c] : e.terms())
        floor = std::min(floor, c.valuation());
    if (floor == kInfiniteValuation)
        return rep;
    for (const MultiIndex& mu : testMonomials(EvalBounds{nVars, degBound}, 0)) {
        WordImages images(mu);
        long v = gaussValuation(evaluateOn(e, images));
        if (v < rep.value) {
            rep.value = v;
            rep.witnessMonomial = mu;
        }
        // Images are integer combinations of the coefficients, so this is optimal.
        if (rep.value == floor)
            break;
    }
    return rep;
}

DyadicScalar degreeNorm(const OpElement& e, const DyadicScalar& rho)
{
    if (rho.sign() <= 0 || rho >= DyadicScalar(1))
        throw DomainError("rho must lie in (0, 1), got " + rho.str());
    if (e.isZero())
        return 0;
    return pow(rho, e.degree());
}

SandwichReport sandwichCheck(const OpElement& e)
{
    DyadicScalar half(1, 2);
    SandwichReport r;
    r.upper = degreeNorm(e, half);
    r.lower = half * r.upper;
    r.adem = ademValuation(e).norm();
    r.holds = r.lower <= r.adem && r.adem <= r.upper;
    return r;
}

}  // namespace jqforge
