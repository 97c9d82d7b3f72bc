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
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <vector>

#include "jqforge/linalg.hpp"
#include "jqforge/opalg.hpp"
#include "jqforge/poly.hpp"

namespace jqforge {

/* Exponent vector packed 8 bits per variable; at most 16 variables, exponents < 256. */
using PackedMonomial = unsigned __int128;
using IntPoly = std::map<PackedMonomial, mpz_class>;

inline constexpr std::size_t kMaxPackedVars = 16;
inline constexpr unsigned kMaxPackedExponent = 255;

PackedMonomial pack(const MultiIndex& m);
MultiIndex unpack(PackedMonomial p, std::size_t n);

/* Jq^k on an integer polynomial in n packed variables; result added into out. */
void applyJqInt(unsigned k, const IntPoly& f, std::size_t n, IntPoly& out);

/* Number of partitions of d. */
unsigned long partitionCount(unsigned d);

/*
 * Monomials whose exponent vector is a partition (weakly decreasing) with at
 * most nVars parts and degree in [minDegree, degBound], in increasing degree.
 * Operators commute with permutations of the variables, so these suffice to
 * test an operator on every monomial within the bounds.
 */
std::vector<MultiIndex> testMonomials(const EvalBounds& b, unsigned minDegree = 0);

/* Images of operator words on one monomial, memoized on word suffixes. */
class WordImages {
public:
    explicit WordImages(const MultiIndex& mu);
    const IntPoly& operator()(const OpWord& w);
    std::size_t arity() const { return n_; }

private:
    std::size_t n_;
    std::map<OpWord, IntPoly> memo_;
};

/* e(mu) exactly, for rational e. */
Polynomial evaluateOn(const OpElement& e, WordImages& images);

/*
 * The degree-d part of the operator algebra as seen by evaluation on the test
 * monomials of the given bounds: an exact row basis of the evaluation matrix
 * whose columns are all words of degree d. Two degree-d elements agree on all
 * test monomials iff their coordinates agree.
 *
 * Scanning stops early once the rank reaches p(d), the number of partitions
 * of d: over Q every composite of the Jq^k lies in the enveloping algebra of
 * the derivations L_i = sum_v xi_v^{i+1} d/dxi_v (i >= 1), whose degree-d part
 * has dimension p(d), so no further row can add rank.
 */
class DegreeSpace {
public:
    DegreeSpace(unsigned d, const EvalBounds& bounds, bool exhaustive = false);

    unsigned degree() const { return d_; }
    const EvalBounds& bounds() const { return bounds_; }
    const std::vector<OpWord>& words() const { return words_; }
    std::size_t wordIndex(const OpWord& w) const;
    std::size_t rank() const { return basis_.size(); }
    /* Rank reached p(d) before the test monomials ran out. */
    bool saturated() const { return saturated_; }
    std::size_t monomialsScanned() const { return scanned_; }

    /* Coordinates of a degree-d element (length rank()). */
    QVector coordinates(const OpElement& e) const;
    QVector wordCoordinates(const OpWord& w) const;

private:
    unsigned d_;
    EvalBounds bounds_;
    bool saturated_ = false;
    std::size_t scanned_ = 0;
    std::vector<OpWord> words_;
    std::map<OpWord, std::size_t, WordLess> index_;
    QMatrix basis_;
};

/* Shared, immutable DegreeSpace per (d, bounds). Thread-safe. */
const DegreeSpace& degreeSpace(unsigned d, const EvalBounds& bounds);

/* Splits an element into homogeneous parts keyed by degree. */
std::map<unsigned, OpElement> gradedParts(const OpElement& e);

}  // namespace jqforge
