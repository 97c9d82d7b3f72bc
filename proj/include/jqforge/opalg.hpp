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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jqforge/classical.hpp"
#include "jqforge/poly.hpp"
#include "jqforge/scalar.hpp"
#include "jqforge/word.hpp"

namespace jqforge {

using OpWord = Word;

/* Finite linear combination of operator words over Q. */
class OpElement {
public:
    using Terms = std::map<OpWord, DyadicScalar, WordLess>;

    OpElement() = default;
    static OpElement word(const OpWord& w, const DyadicScalar& c = 1);
    static OpElement generator(unsigned k);
    static OpElement identity() { return word({}); }
    static OpElement scalar(const DyadicScalar& c) { return word({}, c); }

    /* Grammar: `3*Jq3 - 6*Jq2.Jq1 + Jq1.Jq1.Jq1`; `0` is the zero element. */
    static OpElement parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    DyadicScalar coefficient(const OpWord& w) const;
    void addTerm(const OpWord& w, const DyadicScalar& c);

    bool isHomogeneous() const;
    /* Degree of the words; throws DomainError when not homogeneous or zero. */
    unsigned degree() const;
    unsigned maxDegree() const;
    bool hasZ2Coefficients() const;

    std::string str() const;

    OpElement operator-() const;
    OpElement& operator+=(const OpElement& o);
    OpElement& operator-=(const OpElement& o);
    OpElement& operator*=(const DyadicScalar& c);
    friend OpElement operator+(OpElement a, const OpElement& b) { return a += b; }
    friend OpElement operator-(OpElement a, const OpElement& b) { return a -= b; }
    friend OpElement operator*(OpElement a, const DyadicScalar& c) { return a *= c; }
    friend OpElement operator*(const DyadicScalar& c, OpElement a) { return a *= c; }
    friend OpElement operator*(const OpElement& a, const OpElement& b);
    friend bool operator==(const OpElement& a, const OpElement& b) = default;

private:
    Terms terms_;
};

OpElement opMul(const OpElement& a, const OpElement& b);
OpElement opPow(const OpElement& a, unsigned e);

/* Linear combination with coefficients c[i] over words[i]. */
OpElement combine(const std::vector<OpWord>& words, const std::vector<DyadicScalar>& c);

struct WordPairLess {
    bool operator()(const std::pair<OpWord, OpWord>& a, const std::pair<OpWord, OpWord>& b) const;
};
using OpTensor = std::map<std::pair<OpWord, OpWord>, DyadicScalar, WordPairLess>;

/* psi(Jq^k) = sum_{i+j=k} Jq^i (x) Jq^j, extended multiplicatively. */
OpTensor coproduct(const OpElement& e);
/* Coefficient of the empty word. */
DyadicScalar counit(const OpElement& e);

enum class ChiMethod { recursion, partitions };
OpElement chi(unsigned k, ChiMethod method);

/* Mod-2 reduction to admissible form. Throws NotInZ2Error. */
ClassicalElement phiReduce(const OpElement& e);

/* Smallest m <= maxPow with phi((Jq^k)^m) = 0. */
std::optional<unsigned> nilpotencyDegree(unsigned k, unsigned maxPow);

/* Univariate polynomial in a formal integer symbol, exact rational coefficients. */
class SymbolicPoly {
public:
    SymbolicPoly() = default;
    explicit SymbolicPoly(std::vector<DyadicScalar> coeffs);
    static SymbolicPoly constant(const DyadicScalar& c);
    /* The symbol itself. */
    static SymbolicPoly symbol();
    /* C(m + shift, k) as a polynomial in m. */
    static SymbolicPoly binomial(long shift, unsigned k);

    const std::vector<DyadicScalar>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    DyadicScalar eval(const DyadicScalar& m) const;
    /* p(m + s) */
    SymbolicPoly shifted(long s) const;

    std::string str(const char* var = "m") const;

    SymbolicPoly& operator+=(const SymbolicPoly& o);
    SymbolicPoly& operator*=(const DyadicScalar& c);
    friend SymbolicPoly operator+(SymbolicPoly a, const SymbolicPoly& b) { return a += b; }
    friend SymbolicPoly operator*(SymbolicPoly a, const DyadicScalar& c) { return a *= c; }
    friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b);
    friend bool operator==(const SymbolicPoly& a, const SymbolicPoly& b) = default;

private:
    void trim();
    std::vector<DyadicScalar> c_;
};

/* Coefficient of xi^{m+deg w} in w(xi^m) as a polynomial in m. */
SymbolicPoly evaluateOnPower(const OpWord& w);
SymbolicPoly evaluateOnPower(const OpElement& e);

Polynomial evalElement(const OpElement& e, const Polynomial& f);

/* Test-monomial bounds for operator equality. */
struct EvalBounds {
    std::size_t nVars;
    unsigned degBound;
};

/* nVars = max(deg, 2), degBound = 2 deg + 4. */
EvalBounds defaultEvalBounds(unsigned degree);

/* a - b annihilates every monomial of arity <= nVars and degree <= degBound. */
bool equalByEvaluation(const OpElement& a, const OpElement& b, std::optional<EvalBounds> bounds = std::nullopt);

}  // namespace jqforge
