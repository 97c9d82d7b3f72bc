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

#include <optional>
#include <utility>
#include <vector>

#include "jqforge/classical.hpp"
#include "jqforge/poly.hpp"

namespace jqforge {

/* f = sum over pairs of Jq^k(cofactor), all k >= 1, cofactors over Z_2. */
struct HitCertificate {
    std::vector<std::pair<unsigned, Polynomial>> pairs;
    Polynomial reconstruct(std::size_t arity) const;
};

struct HitResult {
    bool hit = false;
    std::optional<HitCertificate> certificate;
};

/* min v2(C(d-i, i)) over 1 <= i <= d/2; kInfiniteValuation for d = 1. */
long minHitValuation(unsigned d);

/* |Q^d(1)| = 2^m(d); nullopt stands for the infinite quotient Z_2 (d = 1). */
std::optional<mpz_class> cohitOrder(unsigned d);

/*
 * Decides whether homogeneous f of degree >= 1 lies in the Z_(2)-span of
 * Jq^i(mu), 1 <= i, over monomials mu of degree d - i. precisionJ > 0 caps i.
 * A single-column certificate c*Jq^i(mu) is preferred when one exists
 * (smallest denominator, then numerator, then i); otherwise the lattice
 * solution is returned. Certificates are verified before returning.
 */
HitResult hitDecideGraded(const Polynomial& f, unsigned precisionJ = 0);

/* The same decision over F_2 with the classical squares; returns a certificate. */
std::optional<HitCertificate> classicallyHit(const Polynomial& f);

/*
 * Largest j <= maxJ such that f is a Z_(2)-combination of w(mu) over words w
 * of length j. j >= 1 iff f is hit.
 */
unsigned moduleAdemFiltration(const Polynomial& f, unsigned maxJ);

}  // namespace jqforge
