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

#include <string>
#include <vector>

namespace jqforge {

/*
 * pass: the published statement is reproduced.
 * diverges: a known misprint or false claim; the detail carries the value
 *           the engine computes and verifies instead.
 * fail: an unexpected disagreement.
 */
enum class CheckStatus { pass, fail, diverges };
std::string statusName(CheckStatus s);

struct ReferenceCheck {
    std::string id;
    std::string claim;
    CheckStatus status;
    std::string detail;
};

/* Every worked example and stated identity, in a fixed order. */
std::vector<ReferenceCheck> runReferenceChecks();

}  // namespace jqforge
