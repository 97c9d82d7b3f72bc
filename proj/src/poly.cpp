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
#include "jqforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "jqforge/error.hpp"

namespace jqforge {

unsigned totalDegree(const MultiIndex& m)
{
    return std::accumulate(m.begin(), m.end(), 0u);
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const
{
    unsigned da = totalDegree(a), db = totalDegree(b);
    if (da != db)
        return da < db;
    return a < b;
}

Polynomial::Polynomial(std::size_t arity) : arity_(arity)
{
    if (arity == 0)
        throw DomainError("polynomial arity must be positive");
}

Polynomial Polynomial::constant(std::size_t arity, const DyadicScalar& c)
{
    Polynomial p(arity);
    p.addTerm(MultiIndex(arity, 0), c);
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& m, const DyadicScalar& c)
{
    Polynomial p(m.size());
    p.addTerm(m, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t i, unsigned e, const DyadicScalar& c)
{
    if (i < 1 || i > arity)
        throw DomainError("variable index out of range");
    MultiIndex m(arity, 0);
    m[i - 1] = e;
    return monomial(m, c);
}

int Polynomial::degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(totalDegree(terms_.rbegin()->first));
}

int Polynomial::lowDegree() const
{
    return terms_.empty() ? -1 : static_cast<int>(totalDegree(terms_.begin()->first));
}

bool Polynomial::isHomogeneous() const
{
    return degree() == lowDegree();
}

DyadicScalar Polynomial::coefficient(const MultiIndex& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? DyadicScalar(0) : it->second;
}

void Polynomial::addTerm(const MultiIndex& m, const DyadicScalar& c)
{
    if (m.size() != arity_)
        throw DomainError("arity mismatch: monomial of length " + std::to_string(m.size()) + " in arity " +
                          std::to_string(arity_));
    if (c.isZero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero())
            terms_.erase(it);
    }
}

std::string formatMonomial(const MultiIndex& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(i + 1);
        if (m[i] > 1)
            s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        DyadicScalar a = c;
        if (first) {
            if (a.sign() < 0)
                s += '-';
        }
        else {
            s += a.sign() < 0 ? " - " : " + ";
        }
        if (a.sign() < 0)
            a = -a;
        bool constant = totalDegree(m) == 0;
        if (constant)
            s += a.str();
        else if (a.isOne())
            s += formatMonomial(m);
        else
            s += a.str() + '*' + formatMonomial(m);
        first = false;
    }
    return s;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.arity_ != arity_)
        throw DomainError("arity mismatch in polynomial sum");
    for (const auto& [m, c] : o.terms_)
        addTerm(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.arity_ != arity_)
        throw DomainError("arity mismatch in polynomial difference");
    for (const auto& [m, c] : o.terms_)
        addTerm(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const DyadicScalar& c)
{
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, a] : terms_)
        a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.arity_ != b.arity_)
        throw DomainError("arity mismatch in polynomial product");
    Polynomial r(a.arity_);
    MultiIndex m(a.arity_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.addTerm(m, ca * cb);
        }
    }
    return r;
}

Polynomial polyMul(const Polynomial& f, const Polynomial& g)
{
    return f * g;
}

Polynomial polyPow(const Polynomial& f, unsigned e)
{
    Polynomial r = Polynomial::constant(f.arity(), 1);
    for (unsigned i = 0; i < e; ++i)
        r = r * f;
    return r;
}

long gaussValuation(const Polynomial& f)
{
    long v = kInfiniteValuation;
    for (const auto& [m, c] : f.terms())
        v = std::min(v, c.valuation());
    return v;
}

DyadicScalar gaussNorm(const Polynomial& f)
{
    long v = gaussValuation(f);
    return v == kInfiniteValuation ? DyadicScalar(0) : pow2(-v);
}

Polynomial gradedPart(const Polynomial& f, unsigned d)
{
    Polynomial r(f.arity());
    for (const auto& [m, c] : f.terms())
        if (totalDegree(m) == d)
            r.addTerm(m, c);
    return r;
}

Polynomial truncate(const Polynomial& f, unsigned d)
{
    Polynomial r(f.arity());
    for (const auto& [m, c] : f.terms())
        if (totalDegree(m) <= d)
            r.addTerm(m, c);
    return r;
}

bool hasZ2Coefficients(const Polynomial& f)
{
    return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second.inZ2(); });
}

/* ---- parsing ---- */

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    std::vector<std::pair<std::vector<std::pair<std::size_t, unsigned>>, DyadicScalar>> run()
    {
        std::vector<std::pair<std::vector<std::pair<std::size_t, unsigned>>, DyadicScalar>> out;
        skip();
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip();
            }
            else if (!first) {
                break;
            }
            first = false;
            auto term = parseTerm();
            term.second *= DyadicScalar(sign);
            out.push_back(std::move(term));
            skip();
            if (pos_ == s_.size())
                break;
            if (peek() != '+' && peek() != '-')
                fail("expected '+' or '-'");
        }
        skip();
        if (pos_ != s_.size())
            fail("trailing input");
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial: " + what + " at position " + std::to_string(pos_) + " in '" +
                         std::string(s_) + "'");
    }
    std::string digits()
    {
        std::size_t b = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (b == pos_)
            fail("expected digits");
        return std::string(s_.substr(b, pos_ - b));
    }

    std::pair<std::vector<std::pair<std::size_t, unsigned>>, DyadicScalar> parseTerm()
    {
        DyadicScalar coef = 1;
        std::vector<std::pair<std::size_t, unsigned>> factors;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            skip();
            std::string den = "1";
            if (peek() == '/') {
                ++pos_;
                skip();
                den = digits();
                skip();
            }
            coef = DyadicScalar::parse(num + "/" + den);
            if (peek() != '*')
                return {factors, coef};
            ++pos_;
            skip();
        }
        while (true) {
            if (peek() != 'x')
                fail("expected variable");
            ++pos_;
            std::size_t idx = std::stoul(digits());
            if (idx == 0)
                fail("variables are numbered from 1");
            unsigned e = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                skip();
                e = static_cast<unsigned>(std::stoul(digits()));
                skip();
            }
            factors.emplace_back(idx, e);
            if (peek() != '*')
                break;
            ++pos_;
            skip();
        }
        return {factors, coef};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t arity)
{
    auto terms = PolyParser(text).run();
    std::size_t need = 1;
    for (const auto& [factors, c] : terms)
        for (const auto& [i, e] : factors)
            need = std::max(need, i);
    if (arity == 0)
        arity = need;
    else if (need > arity)
        throw ParseError("variable x" + std::to_string(need) + " exceeds arity " + std::to_string(arity));
    Polynomial p(arity);
    for (const auto& [factors, c] : terms) {
        MultiIndex m(arity, 0);
        for (const auto& [i, e] : factors)
            m[i - 1] += e;
        p.addTerm(m, c);
    }
    return p;
}

}  // namespace jqforge
