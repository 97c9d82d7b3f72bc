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

#include "jqforge/opalg.hpp"
#include "jqforge/poly.hpp"
#include "jqforge/truncated_series.hpp"

namespace jqforge {

/* The ring endomorphism x_i -> x_i + x_i^2. */
Polynomial applyTotal(const Polynomial& f);

/* Degree-k piece of applyTotal, computed monomialwise by the Cartan formula. */
Polynomial applyJq(unsigned k, const Polynomial& f);

/* Rightmost factor first. */
Polynomial applyWord(const OpWord& w, const Polynomial& f);

/* sum_k q^k Jq^k(f) */
Polynomial applyPsiQ(const DyadicScalar& q, const Polynomial& f);

/* Inverse of the total square, through total degree N. Requires N >= deg f. */
TruncatedSeries applyConjTotal(const Polynomial& f, unsigned N);

struct SignedPower {
    int sign;
    long exponent;
};

/* Jq^k(1/x) = (-1)^k x^{k-1}. */
SignedPower jqOnInverseMonomial(unsigned k);

/* Coefficient 1/C(m-k, k) of x^{m-k} in Jq^{-k}(x^m). Throws DomainError when undefined. */
DyadicScalar applyJqNeg(unsigned k, unsigned m);

}  // namespace jqforge
