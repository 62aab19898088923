#pragma once

#include <json.hpp>

#include "rdnorm/rdtheory.hpp"
#include "rdnorm/reduce.hpp"
#include "rdnorm/solve.hpp"

// JSON forms. Big integers are always decimal strings.
namespace rdnorm {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);  // accepts a decimal string or a JSON integer

Json to_json(const QuadInt& x);  // {"a", "b", "m"}
QuadInt quadint_from_json(const Json& j);

Json to_json(const SolutionSet& s);  // {"m", "n", "reps": [{"a", "b"}], "count"}
Json to_json(const ReductionResult& r);
Json to_json(const VerificationReport& r);  // {"prop", "t_range", "checked", "exceptions"}
Json to_json(const Witness& w);

}  // namespace rdnorm
