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
#include "jqforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "jqforge/action.hpp"
#include "jqforge/error.hpp"
#include "jqforge/hit.hpp"
#include "jqforge/norms.hpp"
#include "jqforge/opalg.hpp"
#include "jqforge/reference_checks.hpp"
#include "jqforge/relations.hpp"
#include "jqforge/serialize.hpp"
#include "jqforge/series.hpp"

namespace jqforge {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

unsigned long parseCount(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        unsigned long n = std::stoul(v, &used);
        if (used == v.size() && v.find('-') == std::string::npos)
            return n;
    } catch (const std::exception&) {
    }
    throw ParseError("config: " + key + " needs a non-negative integer, got '" + v + "'");
}

Json configJson(const CliConfig& c)
{
    return Json{{"nVars", c.nVars}, {"degBound", c.degBound}, {"maxJ", c.maxJ}, {"order", c.order}, {"digits", c.digits}};
}

/* Word list `Jq3,Jq2.Jq1`; each entry must be a single word with coefficient 1. */
std::vector<OpWord> parseWordList(const std::string& text)
{
    std::vector<OpWord> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        OpElement e = OpElement::parse(trim(item));
        if (e.terms().size() != 1 || !e.terms().begin()->second.isOne())
            throw ParseError("word list entry '" + trim(item) + "' is not a single word");
        out.push_back(e.terms().begin()->first);
    }
    if (out.empty())
        throw ParseError("empty word list");
    return out;
}

std::string vectorText(const QVector& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s + "]";
}

std::string wordsText(const std::vector<OpWord>& words)
{
    std::string s = "[";
    for (std::size_t i = 0; i < words.size(); ++i)
        s += (i ? ", " : "") + formatWord(words[i]);
    return s + "]";
}

std::string valuationText(long v) { return v == kInfiniteValuation ? "inf" : std::to_string(v); }

/* Coefficient digits keyed like the JSON terms of the object they belong to. */
std::vector<std::pair<std::string, DyadicScalar>> coefficientList(const Polynomial& p, bool byExponent)
{
    std::vector<std::pair<std::string, DyadicScalar>> out;
    for (const auto& [m, c] : p.terms())
        out.emplace_back(byExponent ? std::to_string(m[0]) : formatMonomial(m), c);
    return out;
}

struct Report {
    Json json = Json::object();
    std::string text;
    int code = 0;
};

void attachDigits(Report& r, const std::vector<std::pair<std::string, DyadicScalar>>& coeffs, unsigned K)
{
    if (K == 0)
        return;
    Json d = Json::object();
    std::string text = "2-adic digits (" + std::to_string(K) + "):\n";
    for (const auto& [key, c] : coeffs) {
        std::string digits = twoAdicDigits(c, K);
        d[key] = digits;
        text += "  " + key + ": " + digits + "\n";
    }
    r.json["digits"] = d;
    r.text += text;
}

std::string seriesText(const TruncatedSeries& s) { return s.str() + "\n"; }

}  // namespace

CliConfig parseConfig(const std::string& text, CliConfig c)
{
    std::stringstream ss(text);
    std::string line;
    unsigned lineNo = 0;
    while (std::getline(ss, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineNo) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        unsigned long n = parseCount(key, value);
        if (key == "nVars")
            c.nVars = n;
        else if (key == "degBound")
            c.degBound = static_cast<unsigned>(n);
        else if (key == "maxJ")
            c.maxJ = static_cast<unsigned>(n);
        else if (key == "order")
            c.order = static_cast<unsigned>(n);
        else if (key == "digits")
            c.digits = static_cast<unsigned>(n);
        else
            throw ParseError("config line " + std::to_string(lineNo) + ": unknown key '" + key + "'");
    }
    return c;
}

int runCommand(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations in the dyadic Steenrod algebra", "jqforge"};
    app.require_subcommand(1);

    bool json = false;
    std::optional<std::size_t> nVarsFlag;
    std::optional<unsigned> degBoundFlag, maxJFlag, digitsFlag;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--digits", digitsFlag, "Show K 2-adic digits of each coefficient");
    app.add_option("--nvars", nVarsFlag, "Variables in test monomials");
    app.add_option("--deg-bound", degBoundFlag, "Degree bound of test monomials");
    app.add_option("--max-j", maxJFlag, "Largest filtration index searched");

    std::string opText, polyText, rhsText = "0", thetaText, etaText, wordsText_, seriesPath, centerText, a0Text = "1",
                                   rhoText = "1/2";
    std::string method, which, mode;
    unsigned k = 0, t = 0, d = 0, precision = 0, maxExtra = 4;
    std::size_t vars = 0;
    std::optional<unsigned> orderFlag;
    bool filtration = false;

    auto* act = app.add_subcommand("act", "Apply an operator to a polynomial");
    act->add_option("--op", opText, "Operator expression")->required();
    act->add_option("--poly", polyText, "Polynomial expression")->required();
    act->add_option("--vars", vars, "Number of variables (default: inferred)");

    auto* adem = app.add_subcommand("adem", "Relations among operator words of one degree");
    adem->add_option("--k", k, "Degree")->required()->check(CLI::Range(1u, 12u));
    auto* partOpt = adem->add_option("--partitions", t, "Use Jq^k and the words of length t")->check(CLI::Range(1u, 12u));
    adem->add_option("--words", wordsText_, "Comma-separated word list")->excludes(partOpt);
    method = "symbolic";
    adem->add_option("--method", method, "symbolic (powers of one variable) or evaluation (operator identity)")
        ->check(CLI::IsMember({"symbolic", "evaluation"}));

    auto* chiCmd = app.add_subcommand("chi", "Conjugation of Jq^k");
    chiCmd->add_option("--k", k, "Degree")->required()->check(CLI::Range(0u, 16u));
    std::string chiMethod = "partitions";
    chiCmd->add_option("--method", chiMethod, "recursion or partitions")->check(CLI::IsMember({"recursion", "partitions"}));

    auto* phiCmd = app.add_subcommand("phi", "Reduction to the classical algebra");
    phiCmd->add_option("--op", opText, "Operator expression")->required();

    auto* normCmd = app.add_subcommand("norm", "Valuations and norms of an operator");
    normCmd->add_option("--which", which, "adem, ker, estimate or degree")
        ->required()
        ->check(CLI::IsMember({"adem", "ker", "estimate", "degree"}));
    normCmd->add_option("--op", opText, "Operator expression")->required();
    normCmd->add_option("--rho", rhoText, "Base of the degree norm");

    auto* hitCmd = app.add_subcommand("hit", "Decide whether a homogeneous polynomial is hit");
    hitCmd->add_option("--poly", polyText, "Polynomial expression")->required();
    hitCmd->add_option("--vars", vars, "Number of variables (default: inferred)");
    hitCmd->add_option("--precision", precision, "Largest operator degree used (0: no cap)");
    hitCmd->add_flag("--filtration", filtration, "Also report the module Adem filtration");

    auto* cohitCmd = app.add_subcommand("cohit", "Order of the one-variable cohit group in degree d");
    cohitCmd->add_option("--d", d, "Degree")->required()->check(CLI::Range(1u, 100000u));

    auto* oreCmd = app.add_subcommand("ore", "Common right multiple theta x = eta y");
    oreCmd->add_option("--theta", thetaText, "Operator expression")->required();
    oreCmd->add_option("--eta", etaText, "Operator expression")->required();
    oreCmd->add_option("--max-extra", maxExtra, "Degree steps beyond the smallest compatible pair");

    auto* decCmd = app.add_subcommand("decompose", "Express Jq^k through binary words or Jq1, Jq2");
    decCmd->add_option("--k", k, "Degree")->required()->check(CLI::Range(1u, 10u));
    decCmd->add_option("--mode", mode, "binary or q12")->required()->check(CLI::IsMember({"binary", "q12"}));

    auto* rankCmd = app.add_subcommand("rank", "Rank of the degree-d operators on test monomials");
    rankCmd->add_option("--d", d, "Degree")->required()->check(CLI::Range(0u, 10u));

    auto* sodeCmd = app.add_subcommand("sode", "Power-series solution of theta(z) = rhs at a center");
    sodeCmd->add_option("--op", opText, "Operator; terms may carry [polynomial] coefficients")->required();
    sodeCmd->add_option("--rhs", rhsText, "Right-hand side polynomial");
    sodeCmd->add_option("--center", centerText, "Center x0")->required();
    sodeCmd->add_option("--a0", a0Text, "Constant coefficient a_0");
    sodeCmd->add_option("--order", orderFlag, "Truncation order N");

    auto* geomCmd = app.add_subcommand("geom", "sum_n (Jq^k)^n applied to a polynomial");
    geomCmd->add_option("--k", k, "Operator degree")->required()->check(CLI::Range(1u, 64u));
    geomCmd->add_option("--poly", polyText, "Polynomial expression")->required();
    geomCmd->add_option("--order", orderFlag, "Truncation order N");

    auto* tateCmd = app.add_subcommand("tate", "Truncation-relative convergence test for a series");
    tateCmd->add_option("--series", seriesPath, "JSON series file")->required();

    auto* verifyCmd = app.add_subcommand("verify-paper", "Re-check the published worked examples");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        CliConfig cfg;
        if (const char* path = std::getenv("JQFORGE_CONFIG"); path && *path) {
            std::ifstream in(path);
            if (!in)
                throw ParseError(std::string("cannot read config file ") + path);
            std::stringstream buf;
            buf << in.rdbuf();
            cfg = parseConfig(buf.str(), cfg);
        }
        if (nVarsFlag)
            cfg.nVars = *nVarsFlag;
        if (degBoundFlag)
            cfg.degBound = *degBoundFlag;
        if (maxJFlag)
            cfg.maxJ = *maxJFlag;
        if (digitsFlag)
            cfg.digits = *digitsFlag;
        if (orderFlag)
            cfg.order = *orderFlag;

        std::string command;
        Report r;

        if (act->parsed()) {
            command = "act";
            OpElement e = OpElement::parse(opText);
            Polynomial f = Polynomial::parse(polyText, vars);
            Polynomial g = evalElement(e, f);
            r.json["result"] = g.str();
            r.text = g.str() + "\n";
            attachDigits(r, coefficientList(g, false), cfg.digits);
        } else if (adem->parsed()) {
            command = "adem";
            std::vector<OpWord> words = !wordsText_.empty() ? parseWordList(wordsText_)
                                        : t > 0            ? tPartitionWords(k, t)
                                                           : compositions(k);
            for (const auto& w : words)
                if (wordDegree(w) != k)
                    throw DomainError("word " + formatWord(w) + " does not have degree " + std::to_string(k));
            RelationBasis rb = method == "symbolic" ? ademNullspace(k, words) : relationNullspace(k, words);
            r.json = toJson(rb);
            std::string basis = "[";
            for (std::size_t i = 0; i < rb.basis.size(); ++i)
                basis += (i ? "," : "") + vectorText(rb.basis[i]);
            basis += "]";
            r.text = "basis " + basis + " over " + wordsText(rb.words) + "\n";
            r.text += "method " + rb.method + ", test bounds nVars=" + std::to_string(rb.bounds.nVars) +
                      " degBound=" + std::to_string(rb.bounds.degBound) + "\n";
            if (method == "symbolic")
                for (std::size_t i = 0; i < rb.basis.size(); ++i)
                    r.text += "  relation " + std::to_string(i + 1) + " on all polynomials: " +
                              (rb.multivariable[i] ? "yes" : "no") + "\n";
        } else if (chiCmd->parsed()) {
            command = "chi";
            OpElement c = chi(k, chiMethod == "recursion" ? ChiMethod::recursion : ChiMethod::partitions);
            r.json["result"] = c.str();
            r.json["words"] = c.terms().size();
            r.text = c.str() + "\n";
        } else if (phiCmd->parsed()) {
            command = "phi";
            ClassicalElement c = phiReduce(OpElement::parse(opText));
            r.json["result"] = c.str();
            r.text = c.str() + "\n";
        } else if (normCmd->parsed()) {
            command = "norm";
            OpElement e = OpElement::parse(opText);
            if (which == "degree") {
                DyadicScalar n = degreeNorm(e, DyadicScalar::parse(rhoText));
                r.json["rho"] = DyadicScalar::parse(rhoText).str();
                r.json["norm"] = n.str();
                r.text = "degree norm " + n.str() + "\n";
            } else {
                ValuationReport v = which == "adem"  ? ademValuation(e)
                                    : which == "ker" ? kerAdicValuation(e, cfg.maxJ)
                                                     : operatorNormEstimate(e, cfg.nVars, cfg.degBound);
                r.json = toJson(v);
                r.text = methodName(v.method) + ": valuation " + valuationText(v.value) + ", norm " + v.norm().str();
                if (which == "ker" && v.value == static_cast<long>(cfg.maxJ))
                    r.text += " (search capped at maxJ)";
                if (which == "estimate")
                    r.text += " (lower bound from monomials in " + std::to_string(cfg.nVars) +
                              " variables, degree <= " + std::to_string(cfg.degBound) + ")";
                r.text += "\n";
                if (v.witnessElement)
                    r.text += "witness " + v.witnessElement->str() + "\n";
                if (v.witnessMonomial)
                    r.text += "witness " + formatMonomial(*v.witnessMonomial) + "\n";
            }
        } else if (hitCmd->parsed()) {
            command = "hit";
            Polynomial f = Polynomial::parse(polyText, vars);
            HitResult h = hitDecideGraded(f, precision);
            r.json = toJson(h);
            if (!h.hit) {
                r.text = "not hit\n";
            } else {
                r.text = "hit:";
                std::vector<std::pair<std::string, DyadicScalar>> coeffs;
                for (const auto& [kk, g] : h.certificate->pairs) {
                    r.text += " Jq" + std::to_string(kk) + "(" + g.str() + ")";
                    for (const auto& [key, c] : coefficientList(g, false))
                        coeffs.emplace_back("Jq" + std::to_string(kk) + " " + key, c);
                }
                r.text += "\n";
                attachDigits(r, coeffs, cfg.digits);
            }
            if (filtration) {
                unsigned j = moduleAdemFiltration(f, cfg.maxJ);
                r.json["ademFiltration"] = j;
                r.text += "module Adem filtration " + std::to_string(j) + "\n";
            }
        } else if (cohitCmd->parsed()) {
            command = "cohit";
            auto order = cohitOrder(d);
            long m = minHitValuation(d);
            r.json["degree"] = d;
            r.json["order"] = order ? Json(order->get_str()) : Json("inf");
            r.json["minHitValuation"] = valuationJson(m);
            r.text = "Q^" + std::to_string(d) + "(1) " +
                     (order ? "has order " + order->get_str() : std::string("is Z_2 (infinite)")) + "\n";
        } else if (oreCmd->parsed()) {
            command = "ore";
            auto pair = oreSolveDefault(OpElement::parse(thetaText), OpElement::parse(etaText), maxExtra);
            if (!pair)
                throw NotFoundError("no nonzero x, y found within " + std::to_string(maxExtra) + " extra degrees");
            r.json = toJson(*pair);
            r.text = "x = " + pair->x.str() + "\ny = " + pair->y.str() + "\n";
        } else if (decCmd->parsed()) {
            command = "decompose";
            OpElement e = mode == "binary" ? binaryDecompose(k) : q12Decompose(k);
            r.json["mode"] = mode;
            r.json["result"] = e.str();
            r.text = "Jq" + std::to_string(k) + " = " + e.str() + "\n";
        } else if (rankCmd->parsed()) {
            command = "rank";
            RankReport rr = rankEstimate(d, cfg.nVars, cfg.degBound);
            r.json = Json{{"degree", d},
                          {"rank", rr.rank},
                          {"bounds", toJson(rr.bounds)},
                          {"saturated", rr.saturated},
                          {"monomialsScanned", rr.monomialsScanned}};
            r.text = "rank " + std::to_string(rr.rank) + " in degree " + std::to_string(d) + " (nVars=" +
                     std::to_string(rr.bounds.nVars) + ", degBound=" + std::to_string(rr.bounds.degBound) + ", " +
                     (rr.saturated ? "saturated" : "lower bound") + ")\n";
        } else if (sodeCmd->parsed()) {
            command = "sode";
            Sode eq = Sode::parse(opText, rhsText);
            SodeSolution sol = sodeSolve(eq, DyadicScalar::parse(centerText), DyadicScalar::parse(a0Text), cfg.order);
            if (!sol.series)
                throw NotFoundError("no solution: " + sol.reason);
            ResidualReport res = sodeResidual(eq, *sol.series, cfg.order);
            r.json["series"] = toJson(*sol.series);
            r.json["residual"] = toJson(res);
            r.text = seriesText(*sol.series) + "residual vanishes through degree " +
                     std::to_string(res.verifiedThrough) + "\n";
            attachDigits(r, coefficientList(sol.series->terms(), true), cfg.digits);
        } else if (geomCmd->parsed()) {
            command = "geom";
            TruncatedSeries s = geometricInverse(k, Polynomial::parse(polyText), cfg.order);
            r.json["series"] = toJson(s);
            r.text = seriesText(s);
            attachDigits(r, coefficientList(s.terms(), s.arity() == 1), cfg.digits);
        } else if (tateCmd->parsed()) {
            command = "tate";
            std::ifstream in(seriesPath);
            if (!in)
                throw ParseError("cannot read series file " + seriesPath);
            Json j;
            try {
                j = Json::parse(in);
            } catch (const nlohmann::json::exception& ex) {
                throw ParseError(std::string("series file: ") + ex.what());
            }
            TateReport tr = tateCheck(seriesFromJson(j));
            r.json = toJson(tr);
            r.text = verdictName(tr.verdict) + " (window minima " + valuationText(tr.thirds[0]) + ", " +
                     valuationText(tr.thirds[1]) + ", " + valuationText(tr.thirds[2]) + ")\n";
        } else if (verifyCmd->parsed()) {
            command = "verify-paper";
            auto rows = runReferenceChecks();
            Json arr = Json::array();
            std::size_t counts[3] = {0, 0, 0};
            std::ostringstream os;
            for (const auto& row : rows) {
                ++counts[static_cast<int>(row.status)];
                arr.push_back(Json{{"id", row.id}, {"status", statusName(row.status)}, {"claim", row.claim},
                                   {"detail", row.detail}});
                os << statusName(row.status) << std::string(9 - statusName(row.status).size(), ' ') << row.id << ": "
                   << row.claim << "\n         " << row.detail << "\n";
            }
            os << counts[0] << " PASS, " << counts[1] << " FAIL, " << counts[2] << " DIVERGES\n";
            r.json["rows"] = arr;
            r.json["summary"] = Json{{"pass", counts[0]}, {"fail", counts[1]}, {"diverges", counts[2]}};
            r.text = os.str();
            r.code = counts[1] > 0 ? 1 : 0;
        }

        if (json) {
            Json j;
            j["command"] = command;
            for (auto& [key, value] : r.json.items())
                j[key] = value;
            j["config"] = configJson(cfg);
            out << j.dump(2) << "\n";
        } else {
            out << r.text;
        }
        return r.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const NotFoundError& e) {
        err << "not found: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace jqforge
