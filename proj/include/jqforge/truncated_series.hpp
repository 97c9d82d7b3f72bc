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

#include "jqforge/poly.hpp"

namespace jqforge {

/*
 * Power series known through total degree `order`. A centered series has
 * arity 1 and stores the coefficients of powers of u = x1 - center.
 */
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t arity, unsigned order, std::optional<DyadicScalar> center = std::nullopt);
    /* Terms of p above the order are dropped. For centered series p is in powers of u. */
    TruncatedSeries(const Polynomial& p, unsigned order, std::optional<DyadicScalar> center = std::nullopt);

    std::size_t arity() const { return terms_.arity(); }
    unsigned order() const { return order_; }
    const std::optional<DyadicScalar>& center() const { return center_; }
    bool centered() const { return center_.has_value(); }

    /* Stored terms (powers of u when centered). */
    const Polynomial& terms() const { return terms_; }
    /* Univariate coefficient of x1^n, or of u^n when centered. */
    DyadicScalar coefficient(unsigned n) const;
    void setCoefficient(unsigned n, const DyadicScalar& c);

    /* Expanded in powers of x1 (identity for uncentered series). */
    Polynomial expanded() const;

    /* `1 + (x1 - 1) - 1/2*(x1 - 1)^2 + O(3)` style display. */
    std::string str() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.order_ == b.order_ && a.center_ == b.center_ && a.terms_ == b.terms_;
    }

private:
    unsigned order_;
    std::optional<DyadicScalar> center_;
    Polynomial terms_;
};

/* Re-expands a univariate polynomial in powers of u = x1 - c. */
Polynomial shiftToCenter(const Polynomial& p, const DyadicScalar& c);
/* Inverse of shiftToCenter. */
Polynomial shiftFromCenter(const Polynomial& pu, const DyadicScalar& c);

}  // namespace jqforge
