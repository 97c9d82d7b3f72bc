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

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace jqforge {

/* Valuation of zero. */
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/* 2-adic valuation of a nonzero integer; kInfiniteValuation for 0. */
long v2(const mpz_class& n);

/*
 * An element of Q viewed inside Q_2. Always stored in lowest terms with a
 * positive denominator.
 */
class DyadicScalar {
public:
    DyadicScalar() = default;
    DyadicScalar(long n) : q_(n) {}  // NOLINT(implicit)
    DyadicScalar(const mpz_class& n) : q_(n) {}  // NOLINT(implicit)
    DyadicScalar(const mpz_class& num, const mpz_class& den);
    explicit DyadicScalar(const mpq_class& q);

    static DyadicScalar parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    bool isZero() const { return sgn(q_) == 0; }
    bool isOne() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool isInteger() const { return q_.get_den() == 1; }
    bool inZ2() const { return mpz_odd_p(q_.get_den_mpz_t()) != 0; }

    /* v2(num) - v2(den), or kInfiniteValuation for zero. */
    long valuation() const;

    std::string str() const;

    DyadicScalar operator-() const { return DyadicScalar(mpq_class(-q_)); }
    DyadicScalar& operator+=(const DyadicScalar& o) { q_ += o.q_; return *this; }
    DyadicScalar& operator-=(const DyadicScalar& o) { q_ -= o.q_; return *this; }
    DyadicScalar& operator*=(const DyadicScalar& o) { q_ *= o.q_; return *this; }
    DyadicScalar& operator/=(const DyadicScalar& o);

    friend DyadicScalar operator+(DyadicScalar a, const DyadicScalar& b) { return a += b; }
    friend DyadicScalar operator-(DyadicScalar a, const DyadicScalar& b) { return a -= b; }
    friend DyadicScalar operator*(DyadicScalar a, const DyadicScalar& b) { return a *= b; }
    friend DyadicScalar operator/(DyadicScalar a, const DyadicScalar& b) { return a /= b; }

    friend bool operator==(const DyadicScalar& a, const DyadicScalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const DyadicScalar& a, const DyadicScalar& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

struct ValuationAndAbs {
    long valuation;
    DyadicScalar abs;
};

ValuationAndAbs valuationAndAbs(const DyadicScalar& r);

/* |r|_2 */
DyadicScalar abs2(const DyadicScalar& r);

/* 2^e for any integer e. */
DyadicScalar pow2(long e);

DyadicScalar pow(const DyadicScalar& r, unsigned long e);

/* C(n, k); zero outside 0 <= k <= n. Throws DomainError for n < 0. */
mpz_class binom(long n, long k);

/* num * den^{-1} mod 2. Throws NotInZ2Error for even denominators. */
int mod2Reduce(const DyadicScalar& r);

}  // namespace jqforge
