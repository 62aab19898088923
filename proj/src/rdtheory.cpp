#include "rdnorm/rdtheory.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "rdnorm/pell.hpp"
#include "rdnorm/solve.hpp"

namespace rdnorm {

RDForm make_rd_form(const Int& t, const Int& r) {
    if (t < 1 || sgn(r) == 0 || abs(r) > t) {
        throw Error(Errc::invalid_rd_form, "need t >= 1, r != 0, |r| <= t");
    }
    const Int four_t = 4 * t;
    if (!mpz_divisible_p(four_t.get_mpz_t(), r.get_mpz_t())) {
        throw Error(Errc::invalid_rd_form, "r must divide 4t");
    }
    Int m = t * t + r;
    if (m < 2 || is_square(m)) throw Error(Errc::invalid_rd_form, "t^2 + r must be a non-square >= 2");
    return {t, r, std::move(m)};
}

std::optional<RDForm> rd_classify(const Int& m) {
    check_radicand(m);
    Int t = isqrt(m);
    // round(sqrt m) = s + 1 exactly when m > s^2 + s.
    if (m - t * t > t) ++t;
    const Int r = m - t * t;
    if (abs(r) > t) return std::nullopt;
    const Int four_t = 4 * t;
    if (!mpz_divisible_p(four_t.get_mpz_t(), r.get_mpz_t())) return std::nullopt;
    return RDForm{t, r, m};
}

std::string_view claim_id(Claim c) noexcept {
    switch (c) {
        case Claim::plus_one_narrow: return "2.3";
        case Claim::plus_one_wide: return "2.4";
        case Claim::plus_two: return "2.5";
        case Claim::minus_two: return "2.6";
    }
    return "?";
}

Claim parse_claim(std::string_view id) {
    for (Claim c : {Claim::plus_one_narrow, Claim::plus_one_wide, Claim::plus_two, Claim::minus_two}) {
        if (claim_id(c) == id) return c;
    }
    throw Error(Errc::unknown_claim, "unknown proposition '" + std::string(id) + "' (expected 2.3, 2.4, 2.5 or 2.6)");
}

Int claim_radicand(Claim c, const Int& t) {
    switch (c) {
        case Claim::plus_one_narrow:
        case Claim::plus_one_wide: return t * t + 1;
        case Claim::plus_two: return t * t + 2;
        case Claim::minus_two: return t * t - 2;
    }
    return 0;
}

long claim_min_t(Claim c) noexcept {
    switch (c) {
        case Claim::plus_one_narrow: return 2;
        case Claim::plus_one_wide: return 1;
        case Claim::plus_two:
        case Claim::minus_two: return 12;
    }
    return 1;
}

bool NormClassifier::allows(const Int& n) const {
    if (n >= threshold) return true;
    if (std::find(listed.begin(), listed.end(), n) != listed.end()) return true;
    switch (escape) {
        case Escape::squares:
        case Escape::integer_times_unit: return is_square(n);
        case Escape::squares_or_doubled: return is_square(n) || is_square(Int(2 * n));
    }
    return false;
}

NormClassifier allowed_set(Claim c, const Int& t) {
    NormClassifier k{c, t, 0, {}, Escape::squares};
    switch (c) {
        case Claim::plus_one_narrow:
            k.threshold = 2 * t;
            break;
        case Claim::plus_one_wide:
            k.threshold = 4 * t + 3;
            k.listed = {Int(4 * t - 3), Int(2 * t)};
            break;
        case Claim::plus_two:
            k.threshold = 4 * t + 2;
            k.listed = {Int(2 * t - 1), Int(2 * t + 1), Int(4 * t - 7), Int(4 * t - 2)};
            k.escape = Escape::squares_or_doubled;
            break;
        case Claim::minus_two:
            k.threshold = 4 * t + 6;
            k.listed = {Int(2 * t - 3), Int(2 * t + 3), Int(4 * t - 9), Int(4 * t - 6), Int(4 * t + 6)};
            k.escape = Escape::integer_times_unit;
            break;
    }
    k.below_validity_range = t < claim_min_t(c);
    return k;
}

std::vector<QuadInt> minus_two_generators(const Int& t) {
    if (t < 2) throw Error(Errc::invalid_argument, "need t >= 2");
    const Int m = t * t - 2;
    check_radicand(m);
    std::vector<QuadInt> g;
    auto both = [&](const Int& a, long b) {
        g.emplace_back(a, Int(b), m);
        g.emplace_back(a, Int(-b), m);
    };
    both(t + 1, 1);
    both(t - 1, 1);
    both(t + 2, 1);
    both(t - 2, 1);
    both(2 * t - 1, 2);
    both(2 * t + 2, 2);
    both(2 * t - 2, 2);
    return g;
}

std::array<Int, 3> near_root_norms(const Int& t) {
    const Int m = t * t + 1;
    std::array<Int, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = abs(norm(QuadInt(t + (i - 1), 1, m)));
    return out;
}

unsigned sweep_threads() {
    if (const char* env = std::getenv("RDNORM_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v <= 0) {
            throw Error(Errc::invalid_argument, "RDNORM_THREADS must be a positive integer");
        }
        return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

bool integer_times_unit(const QuadInt& xi) {
    const Int d = content(xi);
    return abs(norm(xi)) == d * d;
}

// The rep as a solution point with y >= 0 (negating keeps the orbit).
ClaimException exception_for(const Int& t, const Int& n, const QuadInt& rep) {
    if (sgn(rep.b()) < 0) return {t, n, Int(-rep.a()), Int(-rep.b())};
    return {t, n, rep.a(), rep.b()};
}

struct PerT {
    std::uint64_t checked = 0;
    std::vector<ClaimException> exceptions;
};

PerT verify_one(Claim c, long t_value, const VerifyOptions& opts) {
    const Int t(t_value);
    const Int m = claim_radicand(c, t);
    const NormClassifier k = allowed_set(c, t);
    const QuadInt eps = fundamental_unit(m);
    std::vector<QuadInt> generators;
    if (c == Claim::minus_two) generators = minus_two_generators(t);

    PerT out;
    for (Int n = 1; n < k.threshold; ++n) {
        ++out.checked;
        const SolutionSet sol = solve_norm(m, n, eps, {opts.primitive_only, false});
        if (c != Claim::minus_two) {
            if (!sol.reps.empty() && !k.allows(n)) {
                out.exceptions.push_back(exception_for(t, n, sol.reps.front()));
            }
            continue;
        }
        for (const QuadInt& rep : sol.reps) {
            if (integer_times_unit(rep)) continue;
            const bool known = std::any_of(generators.begin(), generators.end(),
                                           [&](const QuadInt& g) { return are_associates(rep, g); });
            if (!known) out.exceptions.push_back(exception_for(t, n, rep));
        }
    }
    return out;
}

}  // namespace

VerificationReport verify_prop(Claim c, long t_min, long t_max, VerifyOptions opts) {
    const long lowest = c == Claim::minus_two ? 2 : 1;
    if (t_min < lowest) throw Error(Errc::invalid_argument, "t_min must be at least " + std::to_string(lowest));
    if (t_min > t_max) throw Error(Errc::invalid_argument, "t_min must not exceed t_max");

    const std::size_t count = static_cast<std::size_t>(t_max - t_min + 1);
    std::vector<PerT> results(count);
    const auto threads = static_cast<unsigned>(
        std::min<std::size_t>(opts.threads != 0 ? opts.threads : sweep_threads(), count));

    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = verify_one(c, t_min + static_cast<long>(i), opts);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                            results[i] = verify_one(c, t_min + static_cast<long>(i), opts);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    VerificationReport report{c, t_min, t_max, 0, {}};
    for (PerT& r : results) {
        report.checked += r.checked;
        std::move(r.exceptions.begin(), r.exceptions.end(), std::back_inserter(report.exceptions));
    }
    return report;
}

bool Witness::valid() const noexcept {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const WitnessCheck& c) { return c.ok; });
}

Witness class_number_witness(const Int& l, const Int& q) {
    if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 50) == 0) {
        throw Error(Errc::composite, "q must be prime, got " + to_decimal(q));
    }
    if (l <= 1) throw Error(Errc::precondition, "l must exceed 1, got " + to_decimal(l));

    Witness w{l, q, 2 * l * q, 0, {}};
    w.m = w.t * w.t + 1;
    const Int four_q = 4 * q;

    w.checks.push_back({"q_prime", true});
    w.checks.push_back({"l_gt_1", true});
    const Int modulus = q == 2 ? Int(8) : q;
    w.checks.push_back({"q_splits", Int(w.m % modulus) == 1});
    w.checks.push_back({"4q_lt_2t", four_q < 2 * w.t});
    w.checks.push_back({"4q_nonsquare", !is_square(four_q)});
    const QuadInt eps = fundamental_unit(w.m);
    w.checks.push_back({"no_norm_4q", solve_norm(w.m, four_q, eps).reps.empty()});
    w.checks.push_back({"no_norm_q", solve_norm(w.m, q, eps).reps.empty()});
    return w;
}

}  // namespace rdnorm
