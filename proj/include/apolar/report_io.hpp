#pragma once

#include "apolar/apolarity.hpp"
#include "apolar/bounds.hpp"

#include <json.hpp>

#include <string>

namespace apolar {

using Json = nlohmann::ordered_json;

// Wire format. Rationals are {"num": "<int>", "den": "<int>"}; inapplicable bounds are null.
//   analyze: input{multidegree, groups, terms}, dimA, delta, rs_value, rs_floor, rs_scope,
//            flattening, ccg_rank, lt_border_upper, conjectured_border, binary_rank, verdicts[]
//   verdict: k, target, certified_by_flattening, flattening_of_power
Json to_json(const BoundReport& report);
BoundReport report_from_json(const Json& j);

Json to_json(const StarVerdict& v);
StarVerdict verdict_from_json(const Json& j);

Json to_json(const HilbertTable& table);
Json to_json(const GeneratorProfile& profile);
Json to_json(const AsymptoticSequence& seq, const std::vector<StarVerdict>& verdicts);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// "key: value" lines carrying the same numbers as the JSON form.
std::string to_text(const BoundReport& report);
std::string to_text(const HilbertTable& table);
std::string to_text(const GeneratorProfile& profile);
std::string to_text(const AsymptoticSequence& seq, const std::vector<StarVerdict>& verdicts);

} // namespace apolar
