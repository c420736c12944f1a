#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hwdirac/classify.hpp"
#include "hwdirac/verify.hpp"

namespace hwdirac {

using Json = nlohmann::ordered_json;

/// "l1,...,l6" (E6) or "l1,...,l7" (E7); entries "p" or "p/q". Throws ParseError on
/// malformed text and InvalidWeightError naming the violated condition.
Weight parse_reduced_weight(AlgebraKind alg, std::string_view text);
/// All eight coordinates, checked for the reduced shape.
Weight parse_full_weight(AlgebraKind alg, std::string_view text);
std::string format_reduced_weight(AlgebraKind alg, const Weight& w);

/// "l1=lo..hi:step;l6=v;q=0..3" with unspecified coordinates fixed at 0. Step defaults to 1.
/// Variables: l1..l6 (E6), l1..l7 and q (E7).
GridSpec parse_grid(AlgebraKind alg, std::string_view text);

Json to_json(const Weight& w);
Json to_json(AlgebraKind alg, const SchmidModule& s);
Json to_json(const CaseLabel& label);
Json to_json(AlgebraKind alg, const Classification& c);
Json to_json(const Counterexample& c);
Json to_json(const SuiteReport& r);

}  // namespace hwdirac
