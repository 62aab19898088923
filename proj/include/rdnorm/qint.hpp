#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "rdnorm/error.hpp"

namespace rdnorm {

using Int = mpz_class;

// Exact integer helpers used throughout.
Int isqrt(const Int& n);  // floor(sqrt(n)), n >= 0
bool is_square(const Int& n);
Int parse_int(std::string_view text);  // decimal, optional sign; throws Errc::invalid_argument
inline std::string to_decimal(const Int& v) { return v.get_str(10); }

// Throws unless m >= 2 and m is not a perfect square.
void check_radicand(const Int& m);

/// An element a + b*sqrt(m) of the order Z[sqrt(m)].
///
/// The radicand travels with the value; binary operations require equal
/// radicands and throw Errc::radicand_mismatch otherwise.
class QuadInt {
public:
    QuadInt(Int a, Int b, Int m);

    // The rational integer a, viewed in Z[sqrt(m)].
    static QuadInt integer(Int a, const Int& m) { return QuadInt(std::move(a), 0, m); }
    // sqrt(m) itself.
    static QuadInt root(const Int& m) { return QuadInt(0, 1, m); }

    const Int& a() const noexcept { return a_; }
    const Int& b() const noexcept { return b_; }
    const Int& m() const noexcept { return m_; }

    bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadInt& operator+=(const QuadInt& o);
    QuadInt& operator-=(const QuadInt& o);
    QuadInt& operator*=(const QuadInt& o);
    QuadInt& operator*=(const Int& k);

    friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
    friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
    friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
    friend QuadInt operator*(QuadInt x, const Int& k) { return x *= k; }
    friend QuadInt operator*(const Int& k, QuadInt x) { return x *= k; }
    friend QuadInt operator-(QuadInt x);

    // Structural equality (same a, b and m), not real-embedding equality
    // across radicands.
    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
    }

private:
    struct Trusted {};
    // Skips the radicand check; used for results of closed operations.
    QuadInt(Trusted, Int a, Int b, Int m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {}

    friend QuadInt conj(const QuadInt& x);

    Int a_;
    Int b_;
    Int m_;
};

QuadInt add(const QuadInt& x, const QuadInt& y);
QuadInt mul(const QuadInt& x, const QuadInt& y);
QuadInt conj(const QuadInt& x);
Int norm(const QuadInt& x);  // a^2 - m b^2
QuadInt pow(const QuadInt& x, std::uint64_t e);

// Sign of the real number a + b*sqrt(m), decided with integer arithmetic.
int sign_real(const QuadInt& x);
std::strong_ordering cmp_real(const QuadInt& x, const QuadInt& y);

// x and y differ by a unit factor of Z[sqrt(m)]: |N x| = |N y| and
// x * conj(y) is divisible by N(y). Neither may be zero.
bool are_associates(const QuadInt& x, const QuadInt& y);

// gcd of the two coefficients (non-negative).
Int content(const QuadInt& x);

// Natural log of |x| as a double; x must be nonzero. Accurate even under
// heavy cancellation between a and b*sqrt(m).
double log_abs(const QuadInt& x);
double log_abs(const Int& v);

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

}  // namespace rdnorm
