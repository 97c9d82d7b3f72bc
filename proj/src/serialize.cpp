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
#include "jqforge/serialize.hpp"

#include <algorithm>

#include "jqforge/error.hpp"

namespace jqforge {

Json valuationJson(long v)
{
    if (v == kInfiniteValuation)
        return "inf";
    return v;
}

Json toJson(const TruncatedSeries& s)
{
    Json j;
    j["center"] = s.center() ? Json(s.center()->str()) : Json(nullptr);
    j["order"] = s.order();
    if (s.arity() != 1)
        j["arity"] = s.arity();
    Json terms = Json::object();
    for (const auto& [m, c] : s.terms().terms())
        terms[s.arity() == 1 ? std::to_string(m[0]) : formatMonomial(m)] = c.str();
    j["terms"] = terms;
    return j;
}

TruncatedSeries seriesFromJson(const Json& j)
{
    try {
        std::size_t arity = j.value("arity", std::size_t{1});
        unsigned order = j.at("order").get<unsigned>();
        std::optional<DyadicScalar> center;
        if (j.contains("center") && !j.at("center").is_null())
            center = DyadicScalar::parse(j.at("center").get<std::string>());
        Polynomial p(arity);
        for (const auto& [key, val] : j.at("terms").items()) {
            DyadicScalar c = val.is_string() ? DyadicScalar::parse(val.get<std::string>())
                                             : DyadicScalar(val.get<long>());
            if (arity == 1 && !key.empty() && std::all_of(key.begin(), key.end(), ::isdigit))
                p.addTerm(MultiIndex{static_cast<std::uint32_t>(std::stoul(key))}, c);
            else
                p += Polynomial::parse(key, arity) * c;
        }
        for (const auto& [m, c] : p.terms())
            if (totalDegree(m) > order)
                throw ParseError("series term above the order: " + formatMonomial(m));
        return TruncatedSeries(p, order, center);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad series JSON: ") + e.what());
    }
}

Json toJson(const NormBounds& b)
{
    return Json{{"nVars", b.nVars}, {"degBound", b.degBound}, {"maxJ", b.maxJ}};
}

Json toJson(const EvalBounds& b)
{
    return Json{{"nVars", b.nVars}, {"degBound", b.degBound}};
}

Json toJson(const ValuationReport& r)
{
    Json j;
    j["value"] = valuationJson(r.value);
    j["norm"] = r.norm().str();
    j["method"] = methodName(r.method);
    j["bounds"] = toJson(r.bounds);
    if (r.witnessElement)
        j["witness"] = r.witnessElement->str();
    else if (r.witnessMonomial)
        j["witness"] = formatMonomial(*r.witnessMonomial);
    return j;
}

Json toJson(const HitResult& r)
{
    Json j;
    j["hit"] = r.hit;
    if (r.certificate) {
        Json w = Json::array();
        for (const auto& [k, g] : r.certificate->pairs)
            w.push_back(Json{{"k", k}, {"cofactor", g.str()}});
        j["witness"] = w;
    }
    return j;
}

Json toJson(const RelationBasis& rb)
{
    Json j;
    j["degree"] = rb.degree;
    Json words = Json::array();
    for (const auto& w : rb.words)
        words.push_back(formatWord(w));
    j["words"] = words;
    Json basis = Json::array();
    for (const auto& v : rb.basis) {
        Json row = Json::array();
        for (const auto& c : v) {
            if (c.isInteger() && c.num().fits_slong_p())
                row.push_back(c.num().get_si());
            else
                row.push_back(c.str());
        }
        basis.push_back(row);
    }
    j["basis"] = basis;
    j["method"] = rb.method;
    j["bounds"] = toJson(rb.bounds);
    j["multivariable"] = rb.multivariable;
    return j;
}

Json toJson(const OrePair& p)
{
    return Json{{"x", p.x.str()}, {"y", p.y.str()}, {"degX", p.degX}, {"degY", p.degY},
                {"bounds", toJson(p.bounds)}, {"log", p.log}};
}

Json toJson(const TateReport& r)
{
    Json profile = Json::array();
    for (const auto& [d, v] : r.profile)
        profile.push_back(Json::array({d, valuationJson(v)}));
    return Json{{"verdict", verdictName(r.verdict)},
                {"thirds", Json::array({valuationJson(r.thirds[0]), valuationJson(r.thirds[1]),
                                        valuationJson(r.thirds[2])})},
                {"profile", profile}};
}

Json toJson(const ResidualReport& r)
{
    Json j{{"ok", r.ok}, {"verifiedThrough", r.verifiedThrough}};
    if (r.failDegree) {
        j["failDegree"] = *r.failDegree;
        j["failCoefficient"] = r.failCoefficient.str();
    }
    return j;
}

std::string twoAdicDigits(const DyadicScalar& r, unsigned K)
{
    if (K == 0)
        throw DomainError("digit count must be positive");
    if (r.isZero())
        return "..." + std::string(K, '0');
    long v = r.valuation();
    // unit part u = r / 2^v, reduced mod 2^K
    DyadicScalar u = r * pow2(-v);
    mpz_class mod = mpz_class(1) << K;
    mpz_class inv;
    mpz_class den = u.den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class x = u.num() * inv;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());

    long lo = std::min(v, 0L);
    long hi = std::max(v + static_cast<long>(K) - 1, 0L);
    std::string out = "...";
    for (long pos = hi; pos >= lo; --pos) {
        long bit = pos - v;
        char ch = (bit >= 0 && bit < static_cast<long>(K) && mpz_tstbit(x.get_mpz_t(), bit)) ? '1' : '0';
        out.push_back(ch);
        if (pos == 0 && lo < 0)
            out.push_back('.');
    }
    return out;
}

}  // namespace jqforge
