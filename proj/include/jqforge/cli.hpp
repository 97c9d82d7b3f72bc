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

#include <iosfwd>
#include <string>

namespace jqforge {

/* Effective bounds shared by all subcommands; embedded in every JSON report. */
struct CliConfig {
    std::size_t nVars = 4;
    unsigned degBound = 16;
    unsigned maxJ = 6;
    unsigned order = 12;
    unsigned digits = 0;
};

/*
 * `key = value` lines (keys nVars, degBound, maxJ, order, digits); `#` starts
 * a comment. Keys not present keep the values of `base`. Throws ParseError.
 */
CliConfig parseConfig(const std::string& text, CliConfig base = {});

/*
 * Runs one jqforge invocation. Exit codes: 0 success, 1 verify-paper FAIL rows
 * or an internal error, 2 usage or parse error, 3 domain error, 4 not found or
 * no solution. The config file named by JQFORGE_CONFIG is read first.
 */
int runCommand(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jqforge
