#include "rdnorm/pell.hpp"

#include <cstdlib>

namespace rdnorm {

CFExpansion cf_sqrt(const Int& m) {
    check_radicand(m);
    CFExpansion cf{m, isqrt(m), {}};
    // sqrt(m) = [a0; ...] via the state (P, Q) of (P + sqrt(m)) / Q.
    Int p = cf.a0;
    Int q = m - cf.a0 * cf.a0;
    const Int p_first = p, q_first = q;
    do {
        Int a = (cf.a0 + p) / q;
        cf.period.push_back(a);
        p = a * q - p;
        q = (m - p * p) / q;
    } while (p != p_first || q != q_first);
    return cf;
}

QuadInt period_end_convergent(const CFExpansion& cf) {
    // p_{-1} = 1, p_0 = a0; q_{-1} = 0, q_0 = 1.
    Int p_prev = 1, p = cf.a0;
    Int q_prev = 0, q = 1;
    for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
        const Int& a = cf.period[i];
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = std::move(p);
        p = std::move(p_next);
        q_prev = std::move(q);
        q = std::move(q_next);
    }
    return QuadInt(p, q, cf.m);
}

QuadInt fundamental_unit(const Int& m) { return period_end_convergent(cf_sqrt(m)); }

std::optional<QuadInt> rd_unit(const Int& t, const Int& r) {
    if (t < 1 || sgn(r) == 0 || abs(r) > t) {
        throw Error(Errc::invalid_rd_form, "need |r| <= t and r != 0 (t=" + to_decimal(t) + ", r=" + to_decimal(r) + ")");
    }
    const Int four_t = 4 * t;
    if (!mpz_divisible_p(four_t.get_mpz_t(), r.get_mpz_t())) {
        throw Error(Errc::invalid_rd_form, "r=" + to_decimal(r) + " does not divide 4t=" + to_decimal(four_t));
    }
    const Int m = t * t + r;
    try {
        check_radicand(m);
    } catch (const Error& e) {
        throw Error(Errc::invalid_rd_form, e.what());
    }
    if (r == 1 || r == -1) return QuadInt(t, 1, m);
    if (r == 2) return QuadInt(t * t + 1, t, m);
    if (r == -2) return QuadInt(t * t - 1, t, m);
    return std::nullopt;
}

bool is_unit(const QuadInt& x) { return abs(norm(x)) == 1; }

QuadInt unit_inverse(const QuadInt& eps) {
    const Int n = norm(eps);
    if (abs(n) != 1) throw Error(Errc::not_a_unit, "not a unit: norm " + to_decimal(n));
    return conj(eps) * n;
}

QuadInt unit_pow(const QuadInt& eps, std::int64_t k) {
    if (k >= 0) return pow(eps, static_cast<std::uint64_t>(k));
    return pow(unit_inverse(eps), static_cast<std::uint64_t>(-(k + 1)) + 1);
}

}  // namespace rdnorm
