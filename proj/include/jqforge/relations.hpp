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

#include <optional>
#include <string>
#include <vector>

#include "jqforge/linalg.hpp"
#include "jqforge/opalg.hpp"

namespace jqforge {

struct RelationBasis {
    unsigned degree = 0;
    std::vector<OpWord> words;
    /* Primitive integer vectors, positive first nonzero entry. */
    std::vector<QVector> basis;
    /* "symbolic": equations from evaluateOnPower; "evaluation": multivariable evaluation. */
    std::string method;
    EvalBounds bounds{0, 0};
    /* Per basis vector: the relation vanishes under equalByEvaluation with `bounds`. */
    std::vector<bool> multivariable;

    OpElement element(std::size_t i) const { return combine(words, basis.at(i)); }
};

/* (k) followed by all words of degree k and length t. */
std::vector<OpWord> tPartitionWords(unsigned k, unsigned t);
/* Words of degree k whose factors are powers of two. */
std::vector<OpWord> binaryWords(unsigned k);
/* Words of degree k with factors in {1, 2}. */
std::vector<OpWord> oneTwoWords(unsigned k);

/*
 * Nullspace of the coefficient-in-m matrix of evaluateOnPower over the word
 * set. Each vector is additionally tested under multivariable evaluation with
 * `check` (default bounds of degree k) and flagged in `multivariable`.
 */
RelationBasis ademNullspace(unsigned k, const std::vector<OpWord>& words, std::optional<EvalBounds> check = std::nullopt);

/* Nullspace of the multivariable evaluation matrix; every vector is a relation. */
RelationBasis relationNullspace(unsigned k, const std::vector<OpWord>& words,
                                std::optional<EvalBounds> bounds = std::nullopt);

/* Jq^k over words with power-of-two factors and Z_2 coefficients. */
OpElement binaryDecompose(unsigned k, std::optional<EvalBounds> bounds = std::nullopt);

/* Jq^k over words with factors in {1, 2}, rational coefficients. */
OpElement q12Decompose(unsigned k, std::optional<EvalBounds> bounds = std::nullopt);

struct OrePair {
    OpElement x, y;
    unsigned degX = 0, degY = 0;
    EvalBounds bounds{0, 0};
    /* One line per word-set attempt. */
    std::vector<std::string> log;
};

/* Nonzero x, y over the word sets with theta*x = eta*y, or nullopt. */
std::optional<OrePair> oreSolve(const OpElement& theta, const OpElement& eta, const std::vector<OpWord>& setX,
                                const std::vector<OpWord>& setY, std::optional<EvalBounds> bounds = std::nullopt);

/*
 * Default search: degrees from the smallest compatible pair upward (at most
 * maxExtraDegree steps), word lengths 1..3 first, then one more length per
 * retry up to the degree.
 */
std::optional<OrePair> oreSolveDefault(const OpElement& theta, const OpElement& eta, unsigned maxExtraDegree = 4,
                                       std::optional<EvalBounds> bounds = std::nullopt);

struct Fraction {
    OpElement numerator, denominator;
    std::optional<OrePair> ore;
};

/* a b^{-1} + c d^{-1} in the classical ring of fractions. */
std::optional<Fraction> fractionAdd(const OpElement& a, const OpElement& b, const OpElement& c, const OpElement& d,
                                    std::optional<EvalBounds> bounds = std::nullopt);

struct RankReport {
    std::size_t rank;
    EvalBounds bounds;
    bool saturated;
    std::size_t monomialsScanned;
};

RankReport rankEstimate(unsigned d, std::size_t nVars, unsigned degBound);

}  // namespace jqforge
