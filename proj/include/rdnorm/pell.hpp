#pragma once

#include <optional>
#include <vector>

#include "rdnorm/qint.hpp"

namespace rdnorm {

// Regular continued fraction of sqrt(m): [a0; period...], with the period
// repeating forever. The period always ends in 2*a0.
struct CFExpansion {
    Int m;
    Int a0;
    std::vector<Int> period;
};

CFExpansion cf_sqrt(const Int& m);

// Convergent p/q after the first full period, as p + q*sqrt(m). Its norm is
// (-1)^(period length).
QuadInt period_end_convergent(const CFExpansion& cf);

/// Smallest unit eps > 1 of Z[sqrt(m)].
///
/// When x^2 - m y^2 = -1 is solvable the returned unit has norm -1. For
/// m = 1 (mod 4) this is the unit of the order Z[sqrt(m)], which may be the
/// cube of the unit of the maximal order.
QuadInt fundamental_unit(const Int& m);

// Closed-form unit for m = t^2 + r with r in {1, -1, 2, -2}:
//   r = +-1 -> t + sqrt(m),  r = 2 -> (t^2+1) + t sqrt(m),  r = -2 -> (t^2-1) + t sqrt(m).
// Empty for every other r. Throws Errc::invalid_rd_form unless |r| <= t,
// r | 4t and m is a valid radicand.
std::optional<QuadInt> rd_unit(const Int& t, const Int& r);

bool is_unit(const QuadInt& x);

// eps^-1 = N(eps) * conj(eps), for a unit eps.
QuadInt unit_inverse(const QuadInt& eps);

// eps^k for any integer k; eps must be a unit when k < 0.
QuadInt unit_pow(const QuadInt& eps, std::int64_t k);

}  // namespace rdnorm
