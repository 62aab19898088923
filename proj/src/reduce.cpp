#include "rdnorm/reduce.hpp"

#include <cmath>

#include "rdnorm/pell.hpp"

namespace rdnorm {

namespace {

void require_unit_above_one(const QuadInt& eps) {
    if (!is_unit(eps)) throw Error(Errc::not_a_unit, "eps is not a unit");
    if (cmp_real(eps, QuadInt::integer(1, eps.m())) != std::strong_ordering::greater) {
        throw Error(Errc::precondition, "eps must exceed 1");
    }
}

void make_positive(QuadInt& x) {
    if (sign_real(x) < 0) x = -x;
}

std::int64_t estimate_exponent(const QuadInt& xi, double target_log, double log_eps) {
    const double j = std::round((target_log - log_abs(xi)) / log_eps);
    // Beyond this the powers cannot be formed anyway.
    constexpr double limit = 1e15;
    if (!(std::fabs(j) < limit)) throw Error(Errc::precondition, "exponent estimate out of range");
    return static_cast<std::int64_t>(j);
}

// Walks alpha by powers of eps until too_small and too_large are both false.
// Both predicates are monotone in alpha > 0 and their gap spans exactly one
// factor of eps, so the walk stops at a unique exponent.
template <class TooSmall, class TooLarge>
void walk(QuadInt& alpha, std::int64_t& j, const QuadInt& eps, const QuadInt& eps_inv,
          TooSmall too_small, TooLarge too_large) {
    for (;;) {
        if (too_small(alpha)) {
            alpha *= eps;
            ++j;
        } else if (too_large(alpha)) {
            alpha *= eps_inv;
            --j;
        } else {
            return;
        }
    }
}

}  // namespace

mpq_class cassels_bound(const mpq_class& s, const mpq_class& t) {
    if (sgn(s) <= 0) throw Error(Errc::invalid_argument, "cassels_bound needs s > 0");
    if (sgn(t) < 0) throw Error(Errc::invalid_argument, "cassels_bound needs t >= 0");
    mpq_class r = s + t / s;
    r.canonicalize();
    return r;
}

bool in_window(const QuadInt& alpha, const Int& n, const QuadInt& eps) {
    const QuadInt sq = alpha * alpha;
    const QuadInt n_el = QuadInt::integer(n, alpha.m());
    return sign_real(sq * eps - n_el) >= 0 && sign_real(eps * n - sq) > 0;
}

ReductionResult reduce_window(const QuadInt& xi, const QuadInt& eps) {
    if (xi.m() != eps.m()) throw Error(Errc::radicand_mismatch, "xi and eps have different radicands");
    if (xi.is_zero()) throw Error(Errc::zero_element, "cannot reduce zero");
    require_unit_above_one(eps);

    ReductionResult r{0, xi, abs(norm(xi))};
    const double log_eps = log_abs(eps);
    r.j = estimate_exponent(xi, 0.5 * log_abs(r.n), log_eps);
    r.alpha = xi * unit_pow(eps, r.j);
    make_positive(r.alpha);

    const QuadInt eps_inv = unit_inverse(eps);
    const QuadInt n_el = QuadInt::integer(r.n, xi.m());
    walk(
        r.alpha, r.j, eps, eps_inv,
        [&](const QuadInt& a) { return sign_real(a * a * eps - n_el) < 0; },
        [&](const QuadInt& a) { return sign_real(eps * r.n - a * a) <= 0; });
    return r;
}

CoefficientCheck check_coefficient_bounds(const ReductionResult& r, const QuadInt& eps) {
    const Int& m = eps.m();
    const QuadInt one = QuadInt::integer(1, m);
    const QuadInt eps1 = eps + one;
    const QuadInt rhs = eps1 * eps1 * r.n;
    const QuadInt lhs_a = eps * Int(4 * r.alpha.a() * r.alpha.a());
    const QuadInt lhs_b = eps * Int(4 * r.alpha.b() * r.alpha.b() * m);
    const int sa = sign_real(rhs - lhs_a);
    const int sb = sign_real(rhs - lhs_b);
    CoefficientCheck c;
    c.a_within = sa >= 0;
    c.b_within = sb >= 0;
    c.a_strict = sa > 0;
    c.b_strict = sb > 0;
    c.on_lower_edge = sign_real(r.alpha * r.alpha * eps - QuadInt::integer(r.n, m)) == 0;
    return c;
}

HalfReduction reduce_half(const QuadInt& xi, const QuadInt& delta, const QuadInt& eps) {
    const Int& m = xi.m();
    if (delta.m() != m || eps.m() != m) throw Error(Errc::radicand_mismatch, "xi, delta and eps need one radicand");
    if (xi.is_zero()) throw Error(Errc::zero_element, "cannot reduce zero");
    if (delta.b() != 1 || sgn(delta.a()) <= 0 || delta.a() * delta.a() + 2 != m) {
        throw Error(Errc::precondition, "delta must be t + sqrt(t^2 + 2)");
    }
    if (!(delta * delta == eps * Int(2))) throw Error(Errc::precondition, "delta^2 != 2 eps");
    require_unit_above_one(eps);

    const Int source_n = abs(norm(xi));
    const Int n2 = source_n * source_n;
    const QuadInt n2_el = QuadInt::integer(n2, m);
    const QuadInt eps3 = eps * eps * eps;

    // Target window for log alpha: [L - log eps, L) with L = (log n)/2 + (log eps)/4.
    const double log_eps = log_abs(eps);
    const double center = 0.5 * log_abs(source_n) - 0.25 * log_eps;
    std::int64_t j = estimate_exponent(xi, center, log_eps);
    QuadInt alpha = xi * unit_pow(eps, j);
    make_positive(alpha);

    const QuadInt eps_inv = unit_inverse(eps);
    auto fourth = [](const QuadInt& a) {
        QuadInt s = a * a;
        return s * s;
    };
    walk(
        alpha, j, eps, eps_inv,
        [&](const QuadInt& a) { return sign_real(fourth(a) * eps3 - n2_el) < 0; },
        [&](const QuadInt& a) { return sign_real(eps * n2 - fourth(a)) <= 0; });

    if (sign_real(fourth(alpha) * eps - n2_el) >= 0) {
        return HalfReduction{j, std::move(alpha), source_n, source_n, HalfCase::direct};
    }
    return HalfReduction{j, alpha * delta, Int(2 * source_n), source_n, HalfCase::delta_multiplied};
}

}  // namespace rdnorm
