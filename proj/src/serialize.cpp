#include "rdnorm/serialize.hpp"

namespace rdnorm {

Json int_to_json(const Int& v) { return to_decimal(v); }

Int int_from_json(const Json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()), 10);
    throw Error(Errc::invalid_argument, "expected a decimal string or integer");
}

Json to_json(const QuadInt& x) {
    return {{"a", int_to_json(x.a())}, {"b", int_to_json(x.b())}, {"m", int_to_json(x.m())}};
}

QuadInt quadint_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("m")) {
        throw Error(Errc::invalid_argument, "expected an object with a, b and m");
    }
    return QuadInt(int_from_json(j.at("a")), int_from_json(j.at("b")), int_from_json(j.at("m")));
}

Json to_json(const SolutionSet& s) {
    Json reps = Json::array();
    for (const QuadInt& r : s.reps) reps.push_back({{"a", int_to_json(r.a())}, {"b", int_to_json(r.b())}});
    return {{"m", int_to_json(s.m)}, {"n", int_to_json(s.n)}, {"reps", reps}, {"count", s.reps.size()}};
}

Json to_json(const ReductionResult& r) {
    return {{"m", int_to_json(r.alpha.m())},
            {"a", int_to_json(r.alpha.a())},
            {"b", int_to_json(r.alpha.b())},
            {"j", r.j},
            {"n", int_to_json(r.n)}};
}

Json to_json(const VerificationReport& r) {
    Json ex = Json::array();
    for (const ClaimException& e : r.exceptions) {
        ex.push_back({{"t", e.t.get_si()}, {"n", int_to_json(e.n)}, {"x", int_to_json(e.x)}, {"y", int_to_json(e.y)}});
    }
    return {{"prop", std::string(claim_id(r.claim))},
            {"t_range", {r.t_min, r.t_max}},
            {"checked", r.checked},
            {"exceptions", ex}};
}

Json to_json(const Witness& w) {
    Json checks = Json::array();
    for (const WitnessCheck& c : w.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
    return {{"l", int_to_json(w.l)}, {"q", int_to_json(w.q)}, {"t", int_to_json(w.t)},
            {"m", int_to_json(w.m)}, {"checks", checks}, {"valid", w.valid()}};
}

}  // namespace rdnorm
