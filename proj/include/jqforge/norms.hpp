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

#include "jqforge/opalg.hpp"
#include "jqforge/poly.hpp"
#include "jqforge/scalar.hpp"

namespace jqforge {

struct NormBounds {
    std::size_t nVars = 4;
    unsigned degBound = 16;
    unsigned maxJ = 6;
};

enum class NormMethod { ademWordLength, kerAdicLattice, monomialSup };
std::string methodName(NormMethod m);

struct ValuationReport {
    /* kInfiniteValuation stands for infinity (the zero element). */
    long value = 0;
    NormMethod method = NormMethod::ademWordLength;
    NormBounds bounds;
    /* ademWordLength: the rewriting into words of length >= value. */
    std::optional<OpElement> witnessElement;
    /* monomialSup: a monomial whose image attains the minimum valuation. */
    std::optional<MultiIndex> witnessMonomial;

    bool infinite() const { return value == kInfiniteValuation; }
    /* 2^-value, or 0 for infinite valuation. */
    DyadicScalar norm() const;
};

/*
 * Largest j such that e equals (by evaluation) a combination of words of
 * length >= j, found by descending j. Scalars have valuation 0; the zero
 * element has infinite valuation. Throws DomainError for non-homogeneous e.
 * The witness is the rewriting into words of length >= j.
 */
ValuationReport ademValuation(const OpElement& e, bool withWitness = true);

/* phi(e) == 0. Throws NotInZ2Error when a coefficient has an even denominator. */
bool kerPhiMembership(const OpElement& e);

/* Degrees above this are rejected by kerAdicValuation. */
inline constexpr unsigned kKerAdicMaxDegree = 8;

/*
 * Largest j <= maxJ with e in ker(phi)^j, by Z_(2)-lattice membership in the
 * evaluation coordinates of its degree. ker(phi) in degree t is generated by
 * 2*w for all words and lifts of the F_2 kernel of phi; ker(phi)^j is
 * spanned by products K_s * ker(phi)^{j-1} with K_0 = {2}.
 */
ValuationReport kerAdicValuation(const OpElement& e, unsigned maxJ = NormBounds{}.maxJ);

/*
 * min over test monomials mu (at most nVars variables, degree <= degBound) of
 * the minimum coefficient valuation of e(mu). 2^-value is a lower bound for
 * the operator norm; the witness monomial attains it.
 */
ValuationReport operatorNormEstimate(const OpElement& e, std::size_t nVars = NormBounds{}.nVars,
                                     unsigned degBound = NormBounds{}.degBound);

/* rho^deg(e); throws DomainError for non-homogeneous e or rho outside (0, 1). */
DyadicScalar degreeNorm(const OpElement& e, const DyadicScalar& rho);

/* The inequality (1/2)|e|_rho <= |e|_A <= |e|_rho at rho = 1/2. */
struct SandwichReport {
    DyadicScalar lower, adem, upper;
    bool holds;
};
SandwichReport sandwichCheck(const OpElement& e);

}  // namespace jqforge
