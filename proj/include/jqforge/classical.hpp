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

#include <set>
#include <string>

#include "jqforge/poly.hpp"
#include "jqforge/word.hpp"

namespace jqforge {

/* Element of the mod-2 Steenrod algebra; a set of admissible words (F_2 coefficients). */
class ClassicalElement {
public:
    using Terms = std::set<Word, WordLess>;

    ClassicalElement() = default;
    static ClassicalElement identity();
    /* Admissible form of an arbitrary Sq-word. */
    static ClassicalElement fromWord(const Word& w);

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    /* F_2 addition of an admissible word (toggles membership). */
    void toggle(const Word& admissibleWord);
    ClassicalElement& operator+=(const ClassicalElement& o);
    friend ClassicalElement operator+(ClassicalElement a, const ClassicalElement& b) { return a += b; }
    friend ClassicalElement operator*(const ClassicalElement& a, const ClassicalElement& b);
    friend bool operator==(const ClassicalElement& a, const ClassicalElement& b) = default;

    /* `Sq3.Sq1 + Sq4`; `0` and `1` for zero and identity. */
    std::string str() const;

private:
    Terms terms_;
};

bool isAdmissible(const Word& w);

/* Rewrites w with the Adem relations, leftmost inadmissible pair first. */
ClassicalElement admissibleForm(const Word& w);

/* Polynomials over F_2: the set of monomials with coefficient 1. */
using F2Poly = std::set<MultiIndex, GrlexLess>;

/* Coefficientwise mod-2 reduction; throws NotInZ2Error on even denominators. */
F2Poly reduceMod2(const Polynomial& f);

/* Classical Sq^k on F_2[x_1..x_n], via Lucas' theorem and the Cartan formula. */
F2Poly classicalSq(unsigned k, const F2Poly& f);

}  // namespace jqforge
