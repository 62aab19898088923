#pragma once

#include <cstdint>

#include "rdnorm/qint.hpp"

namespace rdnorm {

// A positive associate alpha = +-xi * eps^j placed in a window of width eps.
struct ReductionResult {
    std::int64_t j;
    QuadInt alpha;
    Int n;  // |N xi| = |N alpha|
};

// Cassels' bound: if 0 < x, y <= s and x*y <= t then x + y <= s + t/s.
mpq_class cassels_bound(const mpq_class& s, const mpq_class& t);

/// Moves xi into the window c <= alpha < c*eps with c = sqrt(n/eps).
///
/// All decisions are exact: the window is tested as alpha^2*eps - n >= 0 and
/// n*eps - alpha^2 > 0 in Z[sqrt(m)]. A floating-log estimate picks the
/// starting exponent and is then corrected by exact steps.
ReductionResult reduce_window(const QuadInt& xi, const QuadInt& eps);

// Exact window membership as used by reduce_window.
bool in_window(const QuadInt& alpha, const Int& n, const QuadInt& eps);

// Squared coefficient bounds satisfied by every reduced element:
//   4 a^2 eps <= n (eps+1)^2   and   4 b^2 m eps <= n (eps+1)^2.
// Equality only happens when alpha sits on the lower window edge
// (alpha^2 eps == n); everywhere else both are strict.
struct CoefficientCheck {
    bool a_within = false;
    bool b_within = false;
    bool a_strict = false;
    bool b_strict = false;
    bool on_lower_edge = false;
};
CoefficientCheck check_coefficient_bounds(const ReductionResult& r, const QuadInt& eps);

enum class HalfCase { direct, delta_multiplied };

struct HalfReduction {
    std::int64_t j;    // exponent of eps applied before the case split
    QuadInt alpha;     // the final element: eps-reduced, times delta in the lower case
    Int n;             // |N alpha|: the input norm, doubled in the delta case
    Int source_n;      // |N xi|
    HalfCase which;
};

/// Refined reduction for m = t^2 + 2, where delta = t + sqrt(m) satisfies
/// delta^2 = 2 eps.
///
/// xi is first moved into [sqrt(n sqrt(eps))/eps, sqrt(n sqrt(eps))). If it
/// lands in the upper part [sqrt(n/sqrt(eps)), sqrt(n sqrt(eps))) it is
/// returned as is; otherwise it is multiplied by delta, which puts it in
/// [sqrt(2n/sqrt(eps)), sqrt(2n sqrt(eps))) with norm 2n. Windows are tested
/// in fourth-power form.
HalfReduction reduce_half(const QuadInt& xi, const QuadInt& delta, const QuadInt& eps);

}  // namespace rdnorm
