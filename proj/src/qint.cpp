#include "rdnorm/qint.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace rdnorm {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_radicand: return "invalid_radicand";
        case Errc::perfect_square: return "perfect_square";
        case Errc::radicand_mismatch: return "radicand_mismatch";
        case Errc::zero_element: return "zero_element";
        case Errc::not_a_unit: return "not_a_unit";
        case Errc::nonpositive_norm: return "nonpositive_norm";
        case Errc::invalid_rd_form: return "invalid_rd_form";
        case Errc::precondition: return "precondition";
        case Errc::unknown_claim: return "unknown_claim";
        case Errc::composite: return "composite";
        case Errc::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw Error(Errc::invalid_argument, "isqrt of a negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int parse_int(std::string_view text) {
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw Error(Errc::invalid_argument, "not an integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') throw Error(Errc::invalid_argument, "not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Int(s, 10);
}

void check_radicand(const Int& m) {
    if (m < 2) throw Error(Errc::invalid_radicand, "radicand must be at least 2, got " + to_decimal(m));
    if (is_square(m)) throw Error(Errc::perfect_square, "radicand " + to_decimal(m) + " is a perfect square");
}

namespace {

void require_same(const QuadInt& x, const QuadInt& y) {
    if (x.m() != y.m()) {
        throw Error(Errc::radicand_mismatch,
                    "radicand mismatch: " + to_decimal(x.m()) + " vs " + to_decimal(y.m()));
    }
}

double log_sum(double x, double y) {
    double hi = std::max(x, y), lo = std::min(x, y);
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

QuadInt::QuadInt(Int a, Int b, Int m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
    check_radicand(m_);
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
    require_same(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
    require_same(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
    require_same(*this, o);
    Int a = a_ * o.a_ + m_ * b_ * o.b_;
    Int b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadInt& QuadInt::operator*=(const Int& k) {
    a_ *= k;
    b_ *= k;
    return *this;
}

QuadInt operator-(QuadInt x) {
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    return x;
}

QuadInt add(const QuadInt& x, const QuadInt& y) { return x + y; }
QuadInt mul(const QuadInt& x, const QuadInt& y) { return x * y; }

QuadInt conj(const QuadInt& x) { return QuadInt(QuadInt::Trusted{}, x.a_, -x.b_, x.m_); }

Int norm(const QuadInt& x) { return x.a() * x.a() - x.m() * x.b() * x.b(); }

QuadInt pow(const QuadInt& x, std::uint64_t e) {
    QuadInt result = QuadInt::integer(1, x.m());
    QuadInt base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

int sign_real(const QuadInt& x) {
    const int sa = sgn(x.a());
    const int sb = sgn(x.b());
    if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? 0 : 1;
    if (sa <= 0 && sb <= 0) return -1;
    // Mixed signs: the term with the larger square wins. a^2 == m b^2 is
    // impossible for b != 0 because m is not a square.
    const Int a2 = x.a() * x.a();
    const Int mb2 = x.m() * x.b() * x.b();
    return a2 > mb2 ? sa : sb;
}

std::strong_ordering cmp_real(const QuadInt& x, const QuadInt& y) {
    const int s = sign_real(x - y);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool are_associates(const QuadInt& x, const QuadInt& y) {
    require_same(x, y);
    if (x.is_zero() || y.is_zero()) throw Error(Errc::zero_element, "associate test on zero");
    const Int nx = norm(x), ny = norm(y);
    if (abs(nx) != abs(ny)) return false;
    const QuadInt q = x * conj(y);
    return mpz_divisible_p(q.a().get_mpz_t(), ny.get_mpz_t()) != 0 &&
           mpz_divisible_p(q.b().get_mpz_t(), ny.get_mpz_t()) != 0;
}

Int content(const QuadInt& x) { return gcd(x.a(), x.b()); }

double log_abs(const Int& v) {
    if (sgn(v) == 0) throw Error(Errc::zero_element, "log of zero");
    long e = 0;
    double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(e) * std::numbers::ln2;
}

double log_abs(const QuadInt& x) {
    if (x.is_zero()) throw Error(Errc::zero_element, "log of zero");
    const double half_log_m = 0.5 * log_abs(x.m());
    auto same_sign_log = [&](const Int& a, const Int& b) {
        if (sgn(a) == 0) return log_abs(b) + half_log_m;
        if (sgn(b) == 0) return log_abs(a);
        return log_sum(log_abs(a), log_abs(b) + half_log_m);
    };
    if (sgn(x.a()) * sgn(x.b()) >= 0) return same_sign_log(x.a(), x.b());
    // |x| = |N x| / |x'| and x' has coefficients of equal sign.
    return log_abs(norm(x)) - same_sign_log(x.a(), -x.b());
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    os << x.a();
    if (sgn(x.b()) < 0) {
        os << " - " << Int(-x.b());
    } else {
        os << " + " << x.b();
    }
    return os << "*sqrt(" << x.m() << ")";
}

}  // namespace rdnorm
