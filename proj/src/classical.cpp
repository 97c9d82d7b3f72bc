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
#include "jqforge/classical.hpp"

#include <map>

#include "jqforge/scalar.hpp"

namespace jqforge {

bool isAdmissible(const Word& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < 2 * w[i + 1])
            return false;
    return true;
}

namespace {

bool binomOdd(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return false;
    return (static_cast<unsigned long>(n) & static_cast<unsigned long>(k)) == static_cast<unsigned long>(k);
}

using Memo = std::map<Word, ClassicalElement::Terms>;

const ClassicalElement::Terms& normalize(const Word& w, Memo& memo)
{
    auto it = memo.find(w);
    if (it != memo.end())
        return it->second;
    ClassicalElement::Terms result;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] >= 2 * w[i + 1])
        ++i;
    if (i + 1 >= w.size()) {
        result.insert(w);
    }
    else {
        long a = w[i], b = w[i + 1];
        for (long j = 0; 2 * j <= a; ++j) {
            if (!binomOdd(b - 1 - j, a - 2 * j))
                continue;
            Word next(w.begin(), w.begin() + static_cast<long>(i));
            next.push_back(static_cast<std::uint32_t>(a + b - j));
            if (j > 0)
                next.push_back(static_cast<std::uint32_t>(j));
            next.insert(next.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            for (const Word& t : normalize(next, memo)) {
                auto [pos, inserted] = result.insert(t);
                if (!inserted)
                    result.erase(pos);
            }
        }
    }
    return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

ClassicalElement admissibleForm(const Word& w)
{
    Word clean;
    for (auto a : w)
        if (a != 0)
            clean.push_back(a);
    Memo memo;
    ClassicalElement e;
    for (const Word& t : normalize(clean, memo))
        e.toggle(t);
    return e;
}

ClassicalElement ClassicalElement::identity()
{
    ClassicalElement e;
    e.terms_.insert(Word{});
    return e;
}

ClassicalElement ClassicalElement::fromWord(const Word& w)
{
    return admissibleForm(w);
}

void ClassicalElement::toggle(const Word& w)
{
    auto [pos, inserted] = terms_.insert(w);
    if (!inserted)
        terms_.erase(pos);
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& o)
{
    for (const Word& w : o.terms_)
        toggle(w);
    return *this;
}

ClassicalElement operator*(const ClassicalElement& a, const ClassicalElement& b)
{
    ClassicalElement r;
    for (const Word& x : a.terms_) {
        for (const Word& y : b.terms_) {
            Word w = x;
            w.insert(w.end(), y.begin(), y.end());
            r += admissibleForm(w);
        }
    }
    return r;
}

std::string ClassicalElement::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const Word& w : terms_) {
        if (!s.empty())
            s += " + ";
        s += w.empty() ? "1" : formatWord(w, "Sq");
    }
    return s;
}

F2Poly reduceMod2(const Polynomial& f)
{
    F2Poly r;
    for (const auto& [m, c] : f.terms())
        if (mod2Reduce(c))
            r.insert(m);
    return r;
}

namespace {

void sqMonomial(unsigned k, const MultiIndex& m, std::size_t i, MultiIndex& cur, F2Poly& out)
{
    if (i == m.size()) {
        if (k == 0) {
            auto [pos, inserted] = out.insert(cur);
            if (!inserted)
                out.erase(pos);
        }
        return;
    }
    for (unsigned ki = 0; ki <= std::min(k, m[i]); ++ki) {
        if ((m[i] & ki) != ki)
            continue;
        cur[i] = m[i] + ki;
        sqMonomial(k - ki, m, i + 1, cur, out);
    }
}

}  // namespace

F2Poly classicalSq(unsigned k, const F2Poly& f)
{
    F2Poly out;
    for (const MultiIndex& m : f) {
        MultiIndex cur(m.size());
        sqMonomial(k, m, 0, cur, out);
    }
    return out;
}

}  // namespace jqforge
