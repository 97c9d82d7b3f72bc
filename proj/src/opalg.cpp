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
#include "jqforge/opalg.hpp"

#include <algorithm>
#include <cctype>

#include "jqforge/action.hpp"
#include "jqforge/error.hpp"
#include "jqforge/evaluation.hpp"

namespace jqforge {

OpElement OpElement::word(const OpWord& w, const DyadicScalar& c)
{
    OpElement e;
    e.addTerm(w, c);
    return e;
}

OpElement OpElement::generator(unsigned k)
{
    return k == 0 ? identity() : word({k});
}

DyadicScalar OpElement::coefficient(const OpWord& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? DyadicScalar(0) : it->second;
}

void OpElement::addTerm(const OpWord& w, const DyadicScalar& c)
{
    if (c.isZero())
        return;
    OpWord clean;
    for (auto k : w)
        if (k != 0)
            clean.push_back(k);
    auto [it, inserted] = terms_.try_emplace(clean, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero())
            terms_.erase(it);
    }
}

bool OpElement::isHomogeneous() const
{
    if (terms_.empty())
        return true;
    return wordDegree(terms_.begin()->first) == wordDegree(terms_.rbegin()->first);
}

unsigned OpElement::degree() const
{
    if (terms_.empty())
        throw DomainError("the zero element has no degree");
    if (!isHomogeneous())
        throw DomainError("element " + str() + " is not homogeneous");
    return wordDegree(terms_.begin()->first);
}

unsigned OpElement::maxDegree() const
{
    return terms_.empty() ? 0 : wordDegree(terms_.rbegin()->first);
}

bool OpElement::hasZ2Coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.inZ2(); });
}

std::string OpElement::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        DyadicScalar a = c;
        if (s.empty())
            s += a.sign() < 0 ? "-" : "";
        else
            s += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0)
            a = -a;
        if (!a.isOne())
            s += a.str() + "*";
        s += formatWord(w);
    }
    return s;
}

OpElement OpElement::operator-() const
{
    OpElement r(*this);
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

OpElement& OpElement::operator+=(const OpElement& o)
{
    for (const auto& [w, c] : o.terms_)
        addTerm(w, c);
    return *this;
}

OpElement& OpElement::operator-=(const OpElement& o)
{
    for (const auto& [w, c] : o.terms_)
        addTerm(w, -c);
    return *this;
}

OpElement& OpElement::operator*=(const DyadicScalar& c)
{
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, a] : terms_)
        a *= c;
    return *this;
}

OpElement operator*(const OpElement& a, const OpElement& b)
{
    OpElement r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            OpWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.addTerm(w, ca * cb);
        }
    }
    return r;
}

OpElement opMul(const OpElement& a, const OpElement& b)
{
    return a * b;
}

OpElement opPow(const OpElement& a, unsigned e)
{
    OpElement r = OpElement::identity();
    for (unsigned i = 0; i < e; ++i)
        r = r * a;
    return r;
}

OpElement combine(const std::vector<OpWord>& words, const std::vector<DyadicScalar>& c)
{
    if (words.size() != c.size())
        throw DomainError("combine: length mismatch");
    OpElement e;
    for (std::size_t i = 0; i < words.size(); ++i)
        e.addTerm(words[i], c[i]);
    return e;
}

/* ---- parsing ---- */

namespace {

class OpParser {
public:
    explicit OpParser(std::string_view s) : s_(s) {}

    OpElement run()
    {
        OpElement e;
        skip();
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = s_[pos_++] == '-' ? -1 : 1;
                skip();
            }
            else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [w, c] = term();
            e.addTerm(w, c * DyadicScalar(sign));
            skip();
            if (pos_ == s_.size())
                break;
        }
        return e;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("operator: " + what + " at position " + std::to_string(pos_) + " in '" +
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

    std::pair<OpWord, DyadicScalar> term()
    {
        DyadicScalar c = 1;
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
            c = DyadicScalar::parse(num + "/" + den);
            if (peek() != '*')
                return {{}, c};
            ++pos_;
            skip();
        }
        OpWord w;
        while (true) {
            if (s_.substr(pos_, 2) != "Jq")
                fail("expected 'Jq<k>'");
            pos_ += 2;
            w.push_back(static_cast<std::uint32_t>(std::stoul(digits())));
            skip();
            if (peek() != '.')
                break;
            ++pos_;
            skip();
        }
        return {w, c};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

OpElement OpElement::parse(std::string_view text)
{
    std::size_t b = text.find_first_not_of(" \t\n");
    if (b == std::string_view::npos)
        throw ParseError("operator: empty input");
    return OpParser(text).run();
}

/* ---- Hopf structure ---- */

bool WordPairLess::operator()(const std::pair<OpWord, OpWord>& a, const std::pair<OpWord, OpWord>& b) const
{
    WordLess less;
    if (less(a.first, b.first))
        return true;
    if (less(b.first, a.first))
        return false;
    return less(a.second, b.second);
}

OpTensor coproduct(const OpElement& e)
{
    OpTensor out;
    for (const auto& [w, c] : e.terms()) {
        OpTensor cur;
        cur[{OpWord{}, OpWord{}}] = c;
        for (auto k : w) {
            OpTensor next;
            for (const auto& [ab, v] : cur) {
                for (unsigned i = 0; i <= k; ++i) {
                    OpWord a = ab.first, b = ab.second;
                    if (i > 0)
                        a.push_back(i);
                    if (k - i > 0)
                        b.push_back(k - i);
                    next[{a, b}] += v;
                }
            }
            cur = std::move(next);
        }
        for (const auto& [ab, v] : cur) {
            auto& slot = out[ab];
            slot += v;
            if (slot.isZero())
                out.erase(ab);
        }
    }
    return out;
}

DyadicScalar counit(const OpElement& e)
{
    return e.coefficient({});
}

OpElement chi(unsigned k, ChiMethod method)
{
    if (method == ChiMethod::partitions) {
        OpElement r;
        if (k == 0)
            return OpElement::identity();
        for (const OpWord& w : compositions(k))
            r.addTerm(w, DyadicScalar(w.size() % 2 == 0 ? 1 : -1));
        return r;
    }
    std::vector<OpElement> c(k + 1);
    c[0] = OpElement::identity();
    for (unsigned n = 1; n <= k; ++n) {
        OpElement s;
        for (unsigned i = 1; i <= n; ++i)
            s += OpElement::generator(i) * c[n - i];
        c[n] = -s;
    }
    return c[k];
}

ClassicalElement phiReduce(const OpElement& e)
{
    ClassicalElement r;
    for (const auto& [w, c] : e.terms())
        if (mod2Reduce(c))
            r += admissibleForm(w);
    return r;
}

std::optional<unsigned> nilpotencyDegree(unsigned k, unsigned maxPow)
{
    if (k == 0)
        throw DomainError("nilpotency degree needs k >= 1");
    for (unsigned m = 1; m <= maxPow; ++m)
        if (admissibleForm(OpWord(m, k)).isZero())
            return m;
    return std::nullopt;
}

/* ---- SymbolicPoly ---- */

SymbolicPoly::SymbolicPoly(std::vector<DyadicScalar> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void SymbolicPoly::trim()
{
    while (!c_.empty() && c_.back().isZero())
        c_.pop_back();
}

SymbolicPoly SymbolicPoly::constant(const DyadicScalar& c)
{
    return SymbolicPoly({c});
}

SymbolicPoly SymbolicPoly::symbol()
{
    return SymbolicPoly({DyadicScalar(0), DyadicScalar(1)});
}

SymbolicPoly SymbolicPoly::binomial(long shift, unsigned k)
{
    SymbolicPoly r = constant(1);
    mpz_class fact = 1;
    for (unsigned i = 0; i < k; ++i) {
        r = r * SymbolicPoly({DyadicScalar(shift - static_cast<long>(i)), DyadicScalar(1)});
        fact *= i + 1;
    }
    return r * DyadicScalar(mpz_class(1), fact);
}

DyadicScalar SymbolicPoly::eval(const DyadicScalar& m) const
{
    DyadicScalar r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * m + *it;
    return r;
}

SymbolicPoly SymbolicPoly::shifted(long s) const
{
    SymbolicPoly r;
    SymbolicPoly lin({DyadicScalar(s), DyadicScalar(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * lin + constant(*it);
    return r;
}

std::string SymbolicPoly::str(const char* var) const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        DyadicScalar a = c_[i];
        if (a.isZero())
            continue;
        if (s.empty())
            s += a.sign() < 0 ? "-" : "";
        else
            s += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0)
            a = -a;
        if (i == 0) {
            s += a.str();
            continue;
        }
        if (!a.isOne())
            s += a.str() + "*";
        s += var;
        if (i > 1)
            s += "^" + std::to_string(i);
    }
    return s;
}

SymbolicPoly& SymbolicPoly::operator+=(const SymbolicPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

SymbolicPoly& SymbolicPoly::operator*=(const DyadicScalar& c)
{
    for (auto& a : c_)
        a *= c;
    trim();
    return *this;
}

SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b)
{
    if (a.c_.empty() || b.c_.empty())
        return SymbolicPoly();
    std::vector<DyadicScalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return SymbolicPoly(std::move(c));
}

SymbolicPoly evaluateOnPower(const OpWord& w)
{
    SymbolicPoly r = SymbolicPoly::constant(1);
    long shift = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        r = r * SymbolicPoly::binomial(shift, *it);
        shift += *it;
    }
    return r;
}

SymbolicPoly evaluateOnPower(const OpElement& e)
{
    if (!e.isHomogeneous())
        throw DomainError("evaluateOnPower needs a homogeneous element");
    SymbolicPoly r;
    for (const auto& [w, c] : e.terms())
        r += evaluateOnPower(w) * c;
    return r;
}

Polynomial evalElement(const OpElement& e, const Polynomial& f)
{
    Polynomial r(f.arity());
    for (const auto& [w, c] : e.terms())
        r += applyWord(w, f) * c;
    return r;
}

EvalBounds defaultEvalBounds(unsigned degree)
{
    return {std::max<std::size_t>(degree, 2), 2 * degree + 4};
}

bool equalByEvaluation(const OpElement& a, const OpElement& b, std::optional<EvalBounds> bounds)
{
    OpElement diff = a - b;
    if (diff.isZero())
        return true;
    EvalBounds bnd = bounds ? *bounds : defaultEvalBounds(std::max(a.maxDegree(), b.maxDegree()));
    for (const auto& [d, part] : gradedParts(diff)) {
        const DegreeSpace& space = degreeSpace(d, bnd);
        for (const auto& x : space.coordinates(part))
            if (!x.isZero())
                return false;
    }
    return true;
}

}  // namespace jqforge
