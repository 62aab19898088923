#include "rdnorm/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rdnorm/pell.hpp"
#include "rdnorm/serialize.hpp"

namespace rdnorm::cli {

namespace {

struct Outcome {
    Json result;
    std::string text;  // human-readable form
    int code = exit_ok;
};

Json envelope_ok(const std::string& command, Json result) {
    return {{"command", command}, {"ok", true}, {"result", std::move(result)}};
}

Json envelope_error(const std::string& command, std::string_view code, const std::string& message) {
    return {{"command", command}, {"ok", false}, {"error", {{"code", code}, {"message", message}}}};
}

Outcome cmd_unit(const std::string& m_text) {
    const Int m = parse_int(m_text);
    const CFExpansion cf = cf_sqrt(m);
    const QuadInt eps = period_end_convergent(cf);
    const Int n = norm(eps);
    Outcome o;
    o.result = {{"m", int_to_json(m)},
                {"a", int_to_json(eps.a())},
                {"b", int_to_json(eps.b())},
                {"norm", n.get_si()},
                {"period_length", cf.period.size()}};
    std::ostringstream s;
    s << "m = " << m << "\neps = " << eps << "\nnorm = " << n << "\nperiod_length = " << cf.period.size() << '\n';
    o.text = s.str();
    return o;
}

Outcome cmd_solve(const std::string& m_text, const std::string& n_text, bool primitive) {
    const Int m = parse_int(m_text);
    const Int n = parse_int(n_text);
    check_radicand(m);
    const SolutionSet set = solve_norm(m, n, {primitive, false});
    Outcome o;
    o.result = to_json(set);
    std::ostringstream s;
    s << "m = " << m << ", n = " << n << ": " << set.reps.size() << " orbit(s)\n";
    for (const QuadInt& r : set.reps) s << "  " << r << "  (norm " << norm(r) << ")\n";
    o.text = s.str();
    return o;
}

Outcome cmd_reduce(const std::string& m_text, const std::string& a_text, const std::string& b_text) {
    const QuadInt xi(parse_int(a_text), parse_int(b_text), parse_int(m_text));
    const ReductionResult r = reduce_window(xi, fundamental_unit(xi.m()));
    Outcome o;
    o.result = to_json(r);
    std::ostringstream s;
    s << "alpha = " << r.alpha << "\nj = " << r.j << "\nn = " << r.n << '\n';
    o.text = s.str();
    return o;
}

Outcome cmd_verify(const std::string& prop, long t_min, long t_max) {
    const Claim claim = parse_claim(prop);
    const VerificationReport rep = verify_prop(claim, t_min, t_max);
    Outcome o;
    o.result = to_json(rep);
    o.code = rep.clean() ? exit_ok : exit_exceptions;
    std::ostringstream s;
    s << "prop " << claim_id(claim) << ", t in [" << t_min << ", " << t_max << "]: checked " << rep.checked
      << ", exceptions " << rep.exceptions.size() << '\n';
    for (const ClaimException& e : rep.exceptions) {
        s << "  t=" << e.t << " n=" << e.n << " (x, y) = (" << e.x << ", " << e.y << ")\n";
    }
    o.text = s.str();
    return o;
}

Outcome cmd_witness(const std::string& l_text, const std::string& q_text) {
    const Witness w = class_number_witness(parse_int(l_text), parse_int(q_text));
    Outcome o;
    o.result = to_json(w);
    std::ostringstream s;
    s << "l = " << w.l << ", q = " << w.q << ", t = " << w.t << ", m = " << w.m << '\n';
    for (const WitnessCheck& c : w.checks) s << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << '\n';
    s << (w.valid() ? "valid" : "invalid") << '\n';
    o.text = s.str();
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const bool json = std::find(args.begin(), args.end(), "--json") != args.end();
    std::string command = args.empty() ? std::string() : args.front();

    CLI::App app{"Norm equations and unit reduction in real quadratic orders", "rdnorm"};
    app.require_subcommand(1);

    std::string m, n, a, b, prop, l, q;
    bool primitive = false;
    bool json_flag = false;
    long t_min = 0, t_max = 0;
    std::function<Outcome()> action;

    auto* unit = app.add_subcommand("unit", "fundamental unit of Z[sqrt(m)]");
    unit->add_option("m", m, "radicand")->required();
    unit->add_flag("--json", json_flag, "emit one JSON document");
    unit->callback([&] { action = [&] { return cmd_unit(m); }; });

    auto* solve = app.add_subcommand("solve", "orbit representatives of |x^2 - m y^2| = n");
    solve->add_option("m", m, "radicand")->required();
    solve->add_option("n", n, "norm")->required();
    solve->add_flag("--primitive", primitive, "only gcd(x, y) = 1");
    solve->add_flag("--json", json_flag, "emit one JSON document");
    solve->callback([&] { action = [&] { return cmd_solve(m, n, primitive); }; });

    auto* reduce = app.add_subcommand("reduce", "canonical associate of a + b sqrt(m)");
    reduce->add_option("m", m, "radicand")->required();
    reduce->add_option("a", a, "rational part")->required();
    reduce->add_option("b", b, "coefficient of sqrt(m)")->required();
    reduce->add_flag("--json", json_flag, "emit one JSON document");
    reduce->callback([&] { action = [&] { return cmd_reduce(m, a, b); }; });

    auto* verify = app.add_subcommand("verify", "exhaustive check of an exclusion statement");
    verify->add_option("prop", prop, "2.3, 2.4, 2.5 or 2.6")->required();
    verify->add_option("--t-min", t_min, "smallest t")->required();
    verify->add_option("--t-max", t_max, "largest t")->required();
    verify->add_flag("--json", json_flag, "emit one JSON document");
    verify->callback([&] { action = [&] { return cmd_verify(prop, t_min, t_max); }; });

    auto* witness = app.add_subcommand("witness", "class-number certificate for m = (2lq)^2 + 1");
    witness->add_option("l", l, "multiplier, > 1")->required();
    witness->add_option("q", q, "prime")->required();
    witness->add_flag("--json", json_flag, "emit one JSON document");
    witness->callback([&] { action = [&] { return cmd_witness(l, q); }; });

    auto fail = [&](std::string_view code, const std::string& message) {
        err << "error: " << message << '\n';
        if (json) out << envelope_error(command, code, message).dump() << std::endl;
        return exit_usage;
    };

    try {
        // CLI11 consumes the vector form back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    try {
        const Outcome o = action();
        if (json) {
            out << envelope_ok(command, o.result).dump() << std::endl;
        } else {
            out << o.text << std::flush;
        }
        return o.code;
    } catch (const Error& e) {
        return fail(to_string(e.code()), e.what());
    }
}

}  // namespace rdnorm::cli
