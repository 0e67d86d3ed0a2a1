#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subfan/braid.hpp"
#include "subfan/counting.hpp"
#include "subfan/fan.hpp"
#include "subfan/rational.hpp"
#include "subfan/regularity.hpp"

namespace subfan {

using Json = nlohmann::ordered_json;

// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);
std::string matrix_to_csv(const RationalMatrix& m);
RationalMatrix matrix_from_csv(const std::string& text);
// Right-aligned columns separated by single spaces.
std::string matrix_to_printed(const RationalMatrix& m);

Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json graph_to_json(const BraidGraph& g);

std::string fvector_to_csv(const std::vector<std::uint64_t>& f);

Json to_json(const SignatureReport& r);
Json to_json(const FanCheckReport& r);
Json to_json(const RegularityResult& r);
RegularityResult regularity_from_json(const Json& j);

Json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

}  // namespace subfan
