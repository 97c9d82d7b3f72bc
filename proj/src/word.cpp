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
#include "jqforge/word.hpp"

#include <algorithm>
#include <numeric>

namespace jqforge {

unsigned wordDegree(const Word& w)
{
    return std::accumulate(w.begin(), w.end(), 0u);
}

bool WordLess::operator()(const Word& a, const Word& b) const
{
    unsigned da = wordDegree(a), db = wordDegree(b);
    if (da != db)
        return da < db;
    if (a.size() != b.size())
        return a.size() < b.size();
    return b < a;
}

namespace {

void compose(unsigned rest, unsigned len, Word& cur, std::vector<Word>& out)
{
    if (rest == 0) {
        if (len == 0 || cur.size() == len)
            out.push_back(cur);
        return;
    }
    if (len != 0 && cur.size() >= len)
        return;
    for (unsigned k = 1; k <= rest; ++k) {
        cur.push_back(k);
        compose(rest - k, len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> compositions(unsigned d)
{
    std::vector<Word> out;
    Word cur;
    compose(d, 0, cur, out);
    std::sort(out.begin(), out.end(), WordLess{});
    return out;
}

std::vector<Word> compositionsOfLength(unsigned d, unsigned len)
{
    std::vector<Word> out;
    if (len == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    Word cur;
    compose(d, len, cur, out);
    std::sort(out.begin(), out.end(), WordLess{});
    return out;
}

std::string formatWord(const Word& w, const char* prefix)
{
    if (w.empty())
        return std::string(prefix) + "0";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += '.';
        s += prefix + std::to_string(w[i]);
    }
    return s;
}

}  // namespace jqforge
