#include "rdnorm/solve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>

#include "rdnorm/pell.hpp"
#include "rdnorm/reduce.hpp"

namespace rdnorm {

namespace {

__extension__ using u128 = unsigned __int128;

void require_positive(const Int& n) {
    if (sgn(n) <= 0) throw Error(Errc::nonpositive_norm, "n must be positive, got " + to_decimal(n));
}

Int exp_to_int(double log_value) {
    if (log_value < 0) return 0;
    if (log_value < 700) return Int(std::floor(std::exp(log_value)));
    const double bits = log_value / std::numbers::ln2;
    const long shift = static_cast<long>(bits) - 60;
    Int r(std::ldexp(std::exp2(bits - std::floor(bits)), 60));
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    return r;
}

// Largest k >= 0 with holds(k); holds must be monotone decreasing and true at 0.
Int largest_satisfying(const std::function<bool(const Int&)>& holds, Int guess) {
    if (guess < 0) guess = 0;
    Int lo, hi;
    if (holds(guess)) {
        lo = guess;
        Int step = 1;
        hi = lo + step;
        while (holds(hi)) {
            lo = hi;
            step *= 2;
            hi = lo + step;
        }
    } else {
        hi = guess;
        Int step = 1;
        lo = hi - step;
        while (lo > 0 && !holds(lo)) {
            hi = lo;
            step *= 2;
            lo = hi - step;
        }
        if (lo < 0) lo = 0;
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (holds(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

Int to_int(u128 v) {
    Int hi(static_cast<unsigned long>(v >> 64));
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 64);
    return hi + Int(static_cast<unsigned long>(v));
}

using Sink = std::function<void(const Int& a, const Int& b)>;

template <class U>
U isqrt_fixed(U v) {
    auto r = static_cast<U>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Reports every a >= 0 with |a^2 - m b^2| = n for 0 <= b <= b_max in the
// unsigned type U. Caller guarantees m (b_max+1)^2 + n fits in U with two
// bits to spare. Tracks r = isqrt(m b^2) and d = m b^2 - r^2 with additions
// only: r grows by q = isqrt(m) or q + 1 per step.
template <class U>
void enumerate_fixed(unsigned long m, unsigned long n, unsigned long b_max, const Sink& sink) {
    const U q = isqrt_fixed<U>(m);
    const U nn = n;
    U s = 0, r = 0, d = 0;
    U inc = m;   // m (2b + 1)
    U grow = q * q;  // (r + q)^2 - r^2
    unsigned long b = 0;
    // Small b: r <= n, so solutions can be far from r.
    for (; b <= b_max && r <= nn; ++b) {
        const U up = isqrt_fixed<U>(s + nn);
        if (up * up == s + nn) sink(to_int(up), Int(b));
        if (s >= nn) {
            const U down = isqrt_fixed<U>(s - nn);
            if (down * down == s - nn) sink(to_int(down), Int(b));
        }
        s += inc;
        inc += 2 * static_cast<U>(m);
        r = isqrt_fixed<U>(s);
        d = s - r * r;
        grow = (2 * r + q) * q;
    }
    // 0 <= d <= 2r and r > n, so only x = r and x = r + 1 can hit.
    for (; b <= b_max; ++b) {
        if (d == nn) sink(to_int(r), Int(b));
        if (2 * r + 1 - d == nn) sink(to_int(r + 1), Int(b));
        d = d + inc - grow;
        inc += 2 * static_cast<U>(m);
        r += q;
        grow += 2 * q * q;
        if (d > 2 * r) {
            d -= 2 * r + 1;
            ++r;
            grow += 2 * q;
        }
    }
}

void enumerate_mpz(const Int& m, const Int& n, const Int& b_max, const Sink& sink) {
    Int s, t;
    for (Int b = 0; b <= b_max; ++b) {
        s = m * b * b;
        t = s + n;
        if (is_square(t)) sink(isqrt(t), b);
        t = s - n;
        if (is_square(t)) sink(isqrt(t), b);
    }
}

// Bits needed by the fixed-width path, or 0 if the inputs are too large.
std::size_t fixed_path_bits(const Int& m, const Int& n, const Int& b_max) {
    if (!m.fits_ulong_p() || !n.fits_ulong_p() || !b_max.fits_ulong_p()) return 0;
    const Int top = 4 * (m * (b_max + 2) * (b_max + 2) + n);
    return mpz_sizeinbase(top.get_mpz_t(), 2);
}

}  // namespace

bool rep_less(const QuadInt& x, const QuadInt& y) {
    const int cb = cmp(abs(x.b()), abs(y.b()));
    if (cb != 0) return cb < 0;
    const int ca = cmp(abs(x.a()), abs(y.a()));
    if (ca != 0) return ca < 0;
    if (sgn(x.b()) != sgn(y.b())) return sgn(x.b()) < sgn(y.b());
    return sgn(x.a()) < sgn(y.a());
}

CoefficientBox coeff_bounds(const Int& m, const Int& n, const QuadInt& eps) {
    require_positive(n);
    if (eps.m() != m) throw Error(Errc::radicand_mismatch, "eps has a different radicand");
    if (!is_unit(eps) || sign_real(eps - QuadInt::integer(1, m)) <= 0) {
        throw Error(Errc::not_a_unit, "eps must be a unit greater than 1");
    }
    const QuadInt eps1 = eps + QuadInt::integer(1, m);
    const QuadInt rhs = eps1 * eps1 * n;
    const auto a_ok = [&](const Int& a) { return sign_real(rhs - eps * Int(4 * a * a)) >= 0; };
    const auto b_ok = [&](const Int& b) { return sign_real(rhs - eps * Int(4 * b * b * m)) >= 0; };

    // |a| <= (sqrt n / 2)(sqrt eps + 1/sqrt eps), |b| <= that / sqrt m.
    const double log_eps = log_abs(eps);
    const double log_a = 0.5 * log_abs(n) - std::numbers::ln2 + 0.5 * log_eps + std::log1p(std::exp(-log_eps));
    const double log_b = log_a - 0.5 * log_abs(m);
    return {largest_satisfying(a_ok, exp_to_int(log_a)), largest_satisfying(b_ok, exp_to_int(log_b))};
}

QuadInt canonical_rep(const QuadInt& alpha, const QuadInt& eps) { return reduce_window(alpha, eps).alpha; }

SolutionSet solve_norm(const Int& m, const Int& n, SolveOptions opts) {
    check_radicand(m);
    require_positive(n);
    return solve_norm(m, n, fundamental_unit(m), opts);
}

SolutionSet solve_norm(const Int& m, const Int& n, const QuadInt& eps, SolveOptions opts) {
    check_radicand(m);
    require_positive(n);
    const CoefficientBox box = coeff_bounds(m, n, eps);

    SolutionSet out{m, n, {}, eps};
    const Sink sink = [&](const Int& a, const Int& b) {
        if (opts.primitive_only && gcd(a, b) != 1) return;
        out.reps.push_back(canonical_rep(QuadInt(a, b, m), eps));
        if (sgn(b) != 0 && sgn(a) != 0) out.reps.push_back(canonical_rep(QuadInt(a, Int(-b), m), eps));
    };
    const std::size_t bits = fixed_path_bits(m, n, box.b);
    if (bits != 0 && bits <= 64) {
        enumerate_fixed<std::uint64_t>(m.get_ui(), n.get_ui(), box.b.get_ui(), sink);
    } else if (bits != 0 && bits <= 128) {
        enumerate_fixed<u128>(m.get_ui(), n.get_ui(), box.b.get_ui(), sink);
    } else {
        enumerate_mpz(m, n, box.b, sink);
    }

    std::sort(out.reps.begin(), out.reps.end(), rep_less);
    out.reps.erase(std::unique(out.reps.begin(), out.reps.end()), out.reps.end());

    if (opts.fold_conjugates) {
        std::vector<QuadInt> kept;
        for (const QuadInt& rep : out.reps) {
            const QuadInt partner = canonical_rep(conj(rep), eps);
            if (!rep_less(partner, rep)) kept.push_back(rep);
        }
        out.reps = std::move(kept);
    }
    return out;
}

bool is_representable(const Int& m, const Int& n) { return !solve_norm(m, n).reps.empty(); }

std::vector<Point> brute_oracle(const Int& m, const Int& n, const Int& x_max, const Int& y_max) {
    if (sgn(x_max) < 0 || sgn(y_max) < 0) throw Error(Errc::invalid_argument, "oracle bounds must be non-negative");
    std::vector<Point> hits;
    for (Int y = 0; y <= y_max; ++y) {
        const Int my2 = m * y * y;
        for (Int x = -x_max; x <= x_max; ++x) {
            if (abs(Int(x * x - my2)) == n) hits.push_back({x, y});
        }
    }
    return hits;
}

}  // namespace rdnorm
