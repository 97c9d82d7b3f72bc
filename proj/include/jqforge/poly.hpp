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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jqforge/scalar.hpp"

namespace jqforge {

using MultiIndex = std::vector<std::uint32_t>;

unsigned totalDegree(const MultiIndex& m);

/* Graded-lexicographic order: total degree first, then lexicographic. */
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

class Polynomial {
public:
    using Terms = std::map<MultiIndex, DyadicScalar, GrlexLess>;

    explicit Polynomial(std::size_t arity = 1);

    static Polynomial constant(std::size_t arity, const DyadicScalar& c);
    static Polynomial monomial(const MultiIndex& m, const DyadicScalar& c = 1);
    /* c * x_i^e with 1-based variable index i. */
    static Polynomial variable(std::size_t arity, std::size_t i, unsigned e = 1, const DyadicScalar& c = 1);

    /* Grammar: `3*x1^2*x2 - 1/3*x2^4`. arity 0 infers it from the largest index used. */
    static Polynomial parse(std::string_view text, std::size_t arity = 0);

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    /* Largest total degree; -1 for the zero polynomial. */
    int degree() const;
    int lowDegree() const;
    bool isHomogeneous() const;
    DyadicScalar coefficient(const MultiIndex& m) const;

    void addTerm(const MultiIndex& m, const DyadicScalar& c);

    /* Canonical text, terms in descending graded-lex order. */
    std::string str() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const DyadicScalar& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const DyadicScalar& c) { return a *= c; }
    friend Polynomial operator*(const DyadicScalar& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    std::size_t arity_;
    Terms terms_;
};

Polynomial polyMul(const Polynomial& f, const Polynomial& g);
Polynomial polyPow(const Polynomial& f, unsigned e);

/* max |a_J|_2 over the coefficients; 0 for the zero polynomial. */
DyadicScalar gaussNorm(const Polynomial& f);
/* min v2(a_J); kInfiniteValuation for the zero polynomial. */
long gaussValuation(const Polynomial& f);

Polynomial gradedPart(const Polynomial& f, unsigned d);
/* Terms of total degree <= d. */
Polynomial truncate(const Polynomial& f, unsigned d);

bool hasZ2Coefficients(const Polynomial& f);

/* `x1^2*x3`; `1` for the constant monomial. */
std::string formatMonomial(const MultiIndex& m);

}  // namespace jqforge
