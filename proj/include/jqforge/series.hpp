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

#include "jqforge/opalg.hpp"
#include "jqforge/poly.hpp"
#include "jqforge/truncated_series.hpp"

namespace jqforge {

/*
 * e applied term by term. Uncentered: output order equals the input order
 * (operators raise degree). Centered at xi_0: Jq^k(u^n) = C(n,k) xi^{2k}
 * u^{n-k} with xi = u + xi_0, which lowers u-degree, so the output order is
 * N - maxDegree(e).
 */
TruncatedSeries seriesApplyOp(const OpElement& e, const TruncatedSeries& s);

enum class TateVerdict { pass, fail, inconclusive };
std::string verdictName(TateVerdict v);

struct TateReport {
    TateVerdict verdict;
    /* (degree, min coefficient valuation) for degrees 0..N; kInfiniteValuation for empty degrees. */
    std::vector<std::pair<unsigned, long>> profile;
    /* Minimum valuation over each third of the window [0, N]. */
    long thirds[3];
};

/*
 * Truncation-relative convergence test. With T1, T2, T3 the minimum
 * valuations over the three thirds of [0, N]: pass when T3 is infinite or
 * T1 < T2 < T3; fail when T3 <= 0 and T3 <= T1 (unit coefficients persist);
 * inconclusive otherwise.
 */
TateReport tateCheck(const TruncatedSeries& s);

/* sum_n (Jq^k)^n (f) through degree N; checks (1 - Jq^k) of the result equals f through N. */
TruncatedSeries geometricInverse(unsigned k, const Polynomial& f, unsigned N);

struct SodeTerm {
    Polynomial coefficient;
    OpWord word;
};

/* theta(zeta) = rhs with theta = sum coefficient_i * word_i. */
struct Sode {
    std::vector<SodeTerm> terms;
    Polynomial rhs{1};

    static Sode fromOperator(const OpElement& op, const Polynomial& rhs);
    /*
     * Operator grammar of OpElement, where a term may carry a polynomial
     * coefficient in brackets: `[x1^2]*Jq1 - Jq0`.
     */
    static Sode parse(std::string_view op, std::string_view rhs);

    /* The operator when every coefficient is constant; UnsupportedCoefficientsError otherwise. */
    OpElement constantOperator() const;
};

/*
 * Recurrence stencil of a constant-coefficient operator at center xi_0:
 * coefficient r of theta(sum a_n u^n) equals sum_s stencil[s](r) * a_{r+s}.
 */
std::map<int, SymbolicPoly> recurrenceStencil(const OpElement& op, const DyadicScalar& xi0);

struct SodeSolution {
    std::optional<TruncatedSeries> series;
    /* Index of the first equation that cannot be satisfied when series is empty. */
    std::optional<unsigned> inconsistentIndex;
    std::string reason;
};

/*
 * Power-series solution centered at xi_0 with a_0 given, from the linear
 * system assembled from recurrenceStencil. Free unknowns are set to zero.
 * The returned series passes sodeResidual through N - deg.
 */
SodeSolution sodeSolve(const Sode& eq, const DyadicScalar& xi0, const DyadicScalar& a0, unsigned N);

struct ResidualReport {
    bool ok;
    /* Residual vanishes in degrees 0..verifiedThrough (meaningful when ok or failDegree > 0). */
    long verifiedThrough;
    std::optional<unsigned> failDegree;
    DyadicScalar failCoefficient;
};

/* theta(candidate) - rhs, checked through min(N, order available). */
ResidualReport sodeResidual(const Sode& eq, const TruncatedSeries& candidate, unsigned N);

}  // namespace jqforge
