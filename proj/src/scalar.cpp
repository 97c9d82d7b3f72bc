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
#include "jqforge/scalar.hpp"

#include <cctype>

#include "jqforge/error.hpp"

namespace jqforge {

long v2(const mpz_class& n)
{
    if (sgn(n) == 0)
        return kInfiniteValuation;
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

DyadicScalar::DyadicScalar(const mpz_class& num, const mpz_class& den) : q_(num, den)
{
    if (sgn(den) == 0)
        throw DomainError("zero denominator");
    q_.canonicalize();
}

DyadicScalar::DyadicScalar(const mpq_class& q) : q_(q)
{
    q_.canonicalize();
}

namespace {

bool parseInteger(std::string_view s, mpz_class& out)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            return false;
    out.set_str(std::string(s.substr(i)), 10);
    if (neg)
        out = -out;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

DyadicScalar DyadicScalar::parse(std::string_view text)
{
    std::string_view s = trim(text);
    mpz_class num, den = 1;
    auto slash = s.find('/');
    bool ok;
    if (slash == std::string_view::npos) {
        ok = parseInteger(s, num);
    }
    else {
        ok = parseInteger(trim(s.substr(0, slash)), num);
        std::string_view d = trim(s.substr(slash + 1));
        ok = ok && !d.empty() && d[0] != '-' && d[0] != '+' && parseInteger(d, den);
        if (ok && sgn(den) == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (!ok)
        throw ParseError("malformed rational '" + std::string(text) + "'");
    return DyadicScalar(num, den);
}

long DyadicScalar::valuation() const
{
    if (isZero())
        return kInfiniteValuation;
    return v2(q_.get_num()) - v2(q_.get_den());
}

std::string DyadicScalar::str() const
{
    return q_.get_str(10);
}

DyadicScalar& DyadicScalar::operator/=(const DyadicScalar& o)
{
    if (o.isZero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

ValuationAndAbs valuationAndAbs(const DyadicScalar& r)
{
    if (r.isZero())
        return {kInfiniteValuation, DyadicScalar(0)};
    long v = r.valuation();
    return {v, pow2(-v)};
}

DyadicScalar abs2(const DyadicScalar& r)
{
    return valuationAndAbs(r).abs;
}

DyadicScalar pow2(long e)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? DyadicScalar(p) : DyadicScalar(mpz_class(1), p);
}

DyadicScalar pow(const DyadicScalar& r, unsigned long e)
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.value().get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), r.value().get_den_mpz_t(), e);
    return DyadicScalar(n, d);
}

mpz_class binom(long n, long k)
{
    if (n < 0)
        throw DomainError("binomial with negative upper index " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int mod2Reduce(const DyadicScalar& r)
{
    if (!r.inZ2())
        throw NotInZ2Error("scalar " + r.str() + " is not in Z_2");
    return mpz_odd_p(r.value().get_num_mpz_t()) ? 1 : 0;
}

}  // namespace jqforge
