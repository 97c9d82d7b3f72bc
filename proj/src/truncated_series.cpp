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
#include "jqforge/truncated_series.hpp"

#include "jqforge/error.hpp"

namespace jqforge {

TruncatedSeries::TruncatedSeries(std::size_t arity, unsigned order, std::optional<DyadicScalar> center)
    : order_(order), center_(std::move(center)), terms_(arity)
{
    if (center_ && arity != 1)
        throw DomainError("centered series must have arity 1");
}

TruncatedSeries::TruncatedSeries(const Polynomial& p, unsigned order, std::optional<DyadicScalar> center)
    : TruncatedSeries(p.arity(), order, std::move(center))
{
    terms_ = truncate(p, order);
}

DyadicScalar TruncatedSeries::coefficient(unsigned n) const
{
    if (arity() != 1)
        throw DomainError("univariate coefficient access on a multivariate series");
    return terms_.coefficient(MultiIndex{n});
}

void TruncatedSeries::setCoefficient(unsigned n, const DyadicScalar& c)
{
    if (arity() != 1)
        throw DomainError("univariate coefficient access on a multivariate series");
    if (n > order_)
        throw DomainError("coefficient beyond the truncation order");
    MultiIndex m{n};
    terms_.addTerm(m, c - terms_.coefficient(m));
}

Polynomial TruncatedSeries::expanded() const
{
    return center_ ? shiftFromCenter(terms_, *center_) : terms_;
}

std::string TruncatedSeries::str() const
{
    std::string base;
    if (center_) {
        if (center_->isZero())
            base = "x1";
        else if (center_->sign() < 0)
            base = "(x1 + " + (-*center_).str() + ")";
        else
            base = "(x1 - " + center_->str() + ")";
    }
    std::string s;
    for (const auto& [m, c] : terms_.terms()) {
        DyadicScalar a = c;
        if (s.empty())
            s += a.sign() < 0 ? "-" : "";
        else
            s += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0)
            a = -a;
        unsigned deg = totalDegree(m);
        if (deg == 0) {
            s += a.str();
            continue;
        }
        if (!a.isOne())
            s += a.str() + "*";
        if (center_)
            s += base + (m[0] > 1 ? "^" + std::to_string(m[0]) : "");
        else
            s += formatMonomial(m);
    }
    std::string tail = "O(" + std::to_string(order_ + 1) + ")";
    return s.empty() ? tail : s + " + " + tail;
}

Polynomial shiftToCenter(const Polynomial& p, const DyadicScalar& c)
{
    // x = u + c
    if (p.arity() != 1)
        throw DomainError("centering needs a univariate polynomial");
    Polynomial lin = Polynomial::variable(1, 1) + Polynomial::constant(1, c);
    Polynomial r(1);
    for (const auto& [m, a] : p.terms())
        r += polyPow(lin, m[0]) * a;
    return r;
}

Polynomial shiftFromCenter(const Polynomial& pu, const DyadicScalar& c)
{
    return shiftToCenter(pu, -c);
}

}  // namespace jqforge
