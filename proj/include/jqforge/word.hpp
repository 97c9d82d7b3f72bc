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

#include <cstdint>
#include <string>
#include <vector>

namespace jqforge {

/* Sequence of positive exponents (k_1, ..., k_s); the empty word is the identity. */
using Word = std::vector<std::uint32_t>;

unsigned wordDegree(const Word& w);

/* Degree ascending, then length ascending, then lexicographically descending. */
struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

/* All words of degree d (ordered compositions of d), in WordLess order. */
std::vector<Word> compositions(unsigned d);
/* Words of degree d and length exactly len. */
std::vector<Word> compositionsOfLength(unsigned d, unsigned len);

/* `Jq2.Jq1`, `Jq0` for the empty word; prefix selects `Sq` for classical words. */
std::string formatWord(const Word& w, const char* prefix = "Jq");

}  // namespace jqforge
