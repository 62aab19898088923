#pragma once

#include <vector>

#include "rdnorm/qint.hpp"

namespace rdnorm {

// Orbit representatives of the solutions of |x^2 - m y^2| = n under the
// unit group {+-eps^j}. Each rep is the positive associate lying in the
// reduction window; reps are sorted by rep_less.
struct SolutionSet {
    Int m;
    Int n;
    std::vector<QuadInt> reps;
    QuadInt eps;
};

struct SolveOptions {
    bool primitive_only = false;   // keep only gcd(x, y) = 1
    bool fold_conjugates = false;  // keep one orbit out of each {alpha, alpha'} pair
};

// Largest A, B such that some reduced solution could have |a| = A or
// |b| = B, i.e. the maximal integers with 4A^2 eps <= n (eps+1)^2 and
// 4B^2 m eps <= n (eps+1)^2.
struct CoefficientBox {
    Int a;
    Int b;
};
CoefficientBox coeff_bounds(const Int& m, const Int& n, const QuadInt& eps);

QuadInt canonical_rep(const QuadInt& alpha, const QuadInt& eps);

SolutionSet solve_norm(const Int& m, const Int& n, SolveOptions opts = {});
// Same, with the fundamental unit supplied by the caller (sweeps reuse it).
SolutionSet solve_norm(const Int& m, const Int& n, const QuadInt& eps, SolveOptions opts = {});

bool is_representable(const Int& m, const Int& n);

struct Point {
    Int x;
    Int y;
    friend bool operator==(const Point&, const Point&) = default;
};

// Every (x, y) with |x| <= x_max, 0 <= y <= y_max and |x^2 - m y^2| = n, by a
// plain double loop. Knows nothing about units.
std::vector<Point> brute_oracle(const Int& m, const Int& n, const Int& x_max, const Int& y_max);

// Sort key used for SolutionSet::reps: (|b|, |a|, sign b, sign a).
bool rep_less(const QuadInt& x, const QuadInt& y);

}  // namespace rdnorm
