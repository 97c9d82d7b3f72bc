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
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "jqforge/cli.hpp"
#include "jqforge/error.hpp"
#include "jqforge/serialize.hpp"

using namespace jqforge;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "jqforge");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = runCommand(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path tempFile(const std::string& name, const std::string& content)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override { unsetenv("JQFORGE_CONFIG"); }
    void TearDown() override { unsetenv("JQFORGE_CONFIG"); }
};

}  // namespace

TEST_F(Cli, AdemText)
{
    Outcome r = run({"adem", "--k", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("basis [[3,-6,3,1]] over [Jq3, Jq2.Jq1, Jq1.Jq2, Jq1.Jq1.Jq1]"), std::string::npos) << r.out;
}

TEST_F(Cli, AdemJsonWithWordList)
{
    Outcome r = run({"--json", "adem", "--k", "4", "--words", "Jq4,Jq3.Jq1,Jq2.Jq2,Jq1.Jq3"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["command"], "adem");
    EXPECT_EQ(j["basis"], Json::parse("[[2,-3,1,1]]"));
    EXPECT_EQ(j["multivariable"], Json::parse("[false]"));
    EXPECT_TRUE(j.contains("config"));
    Outcome bad = run({"adem", "--k", "4", "--words", "Jq3,Jq1"});
    EXPECT_EQ(bad.code, 3);
}

TEST_F(Cli, HitJsonFlagAfterSubcommand)
{
    Outcome r = run({"hit", "--poly", "4*x1^7", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["hit"], true);
    EXPECT_EQ(j["witness"][0]["k"], 3);
    EXPECT_EQ(j["witness"][0]["cofactor"], "x1^4");
    EXPECT_EQ(j["config"]["nVars"], 4);

    Json no = Json::parse(run({"--json", "hit", "--poly", "x1^7"}).out);
    EXPECT_EQ(no["hit"], false);
}

TEST_F(Cli, JsonIsDeterministic)
{
    auto a = run({"--json", "act", "--op", "Jq2.Jq1 - 1/3*Jq3", "--poly", "x1*x2 + x3"});
    auto b = run({"--json", "act", "--op", "Jq2.Jq1 - 1/3*Jq3", "--poly", "x1*x2 + x3"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, ActAndDigits)
{
    Outcome r = run({"act", "--op", "Jq1", "--poly", "2*x2 - x1^2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-2*x1^3 + 2*x2^2\n");
    Outcome d = run({"--digits", "8", "act", "--op", "Jq1", "--poly", "1/3*x1"});
    EXPECT_NE(d.out.find("...10101011"), std::string::npos) << d.out;
}

TEST_F(Cli, ExitCodes)
{
    EXPECT_EQ(run({"act", "--op", "Jq", "--poly", "x1"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"adem"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"decompose", "--k", "4", "--mode", "binary"}).code, 3);
    EXPECT_EQ(run({"phi", "--op", "1/2*Jq1"}).code, 3);
    Outcome s = run({"sode", "--op", "Jq1 - Jq0", "--center", "0"});
    EXPECT_EQ(s.code, 4);
    EXPECT_FALSE(s.err.empty());
    EXPECT_EQ(run({"tate", "--series", "/nonexistent/series.json"}).code, 2);
}

TEST_F(Cli, Commands)
{
    EXPECT_NE(run({"decompose", "--k", "3", "--mode", "binary"}).out.find("Jq3 = "), std::string::npos);
    EXPECT_EQ(run({"decompose", "--k", "5", "--mode", "q12"}).code, 0);
    EXPECT_NE(run({"chi", "--k", "2"}).out.find("Jq1.Jq1"), std::string::npos);
    EXPECT_EQ(run({"phi", "--op", "Jq1.Jq2"}).out, "Sq3\n");
    EXPECT_NE(run({"norm", "--which", "estimate", "--op", "Jq1.Jq1"}).out.find("valuation 1"), std::string::npos);
    EXPECT_NE(run({"norm", "--which", "degree", "--op", "Jq3"}).out.find("1/8"), std::string::npos);
    EXPECT_NE(run({"cohit", "--d", "7"}).out.find("order 2"), std::string::npos);
    EXPECT_EQ(run({"ore", "--theta", "Jq1", "--eta", "Jq2"}).code, 0);
    Outcome sode = run({"--json", "sode", "--op", "Jq1 - Jq0", "--center", "1", "--order", "8"});
    ASSERT_EQ(sode.code, 0) << sode.err;
    EXPECT_EQ(Json::parse(sode.out)["residual"]["ok"], true);
    Outcome geom = run({"--json", "geom", "--k", "1", "--poly", "x1", "--order", "6"});
    EXPECT_EQ(Json::parse(geom.out)["series"]["terms"]["6"], "120");
}

TEST_F(Cli, TateFromFile)
{
    Json s = {{"order", 30}, {"terms", Json::object()}};
    for (int k = 0; k <= 30; ++k)
        s["terms"][std::to_string(k)] = "1";
    auto p = tempFile("jqforge_cli_tate.json", s.dump());
    Outcome r = run({"--json", "tate", "--series", p.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["verdict"], "fail");
    std::filesystem::remove(p);
}

TEST_F(Cli, ConfigFileAndOverrides)
{
    auto p = tempFile("jqforge_cli.cfg", "# bounds\nnVars = 2\ndegBound = 9  # small\n");
    setenv("JQFORGE_CONFIG", p.c_str(), 1);
    Json j = Json::parse(run({"--json", "rank", "--d", "3"}).out);
    EXPECT_EQ(j["config"]["nVars"], 2);
    EXPECT_EQ(j["config"]["degBound"], 9);
    EXPECT_EQ(j["rank"], 3);
    Json o = Json::parse(run({"--json", "--nvars", "3", "rank", "--d", "3"}).out);
    EXPECT_EQ(o["config"]["nVars"], 3);
    std::filesystem::remove(p);
    setenv("JQFORGE_CONFIG", "/nonexistent/jqforge.cfg", 1);
    EXPECT_EQ(run({"rank", "--d", "2"}).code, 2);
}

TEST(CliConfig, Parse)
{
    CliConfig c = parseConfig("maxJ = 3\n\n# comment\norder=20\n");
    EXPECT_EQ(c.maxJ, 3u);
    EXPECT_EQ(c.order, 20u);
    EXPECT_EQ(c.nVars, 4u);
    EXPECT_THROW(parseConfig("colour = 3"), ParseError);
    EXPECT_THROW(parseConfig("maxJ = -1"), ParseError);
    EXPECT_THROW(parseConfig("maxJ 3"), ParseError);
}

TEST_F(Cli, ReferenceRunHasNoFailures)
{
    Outcome r = run({"--json", "verify-paper"});
    EXPECT_EQ(r.code, 0) << r.out;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_GE(j["summary"]["diverges"], 3);
    std::set<std::string> diverges;
    for (const auto& row : j["rows"])
        if (row["status"] == "DIVERGES")
            diverges.insert(row["id"].get<std::string>());
    EXPECT_TRUE(diverges.count("ore-y-zero-example"));
    EXPECT_TRUE(diverges.count("hit-degree-seven"));
    EXPECT_TRUE(diverges.count("geometric-jq2-display"));
}
