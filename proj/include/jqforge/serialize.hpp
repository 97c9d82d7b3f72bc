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

#include <json.hpp>

#include <string>

#include "jqforge/hit.hpp"
#include "jqforge/norms.hpp"
#include "jqforge/relations.hpp"
#include "jqforge/series.hpp"
#include "jqforge/truncated_series.hpp"

namespace jqforge {

using Json = nlohmann::ordered_json;

/*
 * `{"center": "1", "order": 12, "terms": {"0": "1", "1": "1", ...}}`. Univariate
 * terms are keyed by exponent; multivariate ones by monomial text. "arity"
 * is written for multivariate series.
 */
Json toJson(const TruncatedSeries& s);
TruncatedSeries seriesFromJson(const Json& j);

Json toJson(const NormBounds& b);
Json toJson(const EvalBounds& b);
Json toJson(const ValuationReport& r);
/* `{"hit": true, "witness": [{"k": 3, "cofactor": "x1^4"}]}` */
Json toJson(const HitResult& r);
Json toJson(const RelationBasis& rb);
Json toJson(const OrePair& p);
Json toJson(const TateReport& r);
Json toJson(const ResidualReport& r);

/* Integer or "inf". */
Json valuationJson(long v);

/*
 * The first K 2-adic digits of r starting at its valuation, most significant
 * on the left, with a radix point when the valuation is negative. With
 * K = 8: 1/3 is `...10101011` and 3/4 is `...000000.11`.
 */
std::string twoAdicDigits(const DyadicScalar& r, unsigned K);

}  // namespace jqforge
