#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library beyond the Rational/BigInt value types.

#include <cstdint>
#include <utility>
#include <vector>

#include "twoside/rational.hpp"

namespace oracle {

using twoside::BigInt;
using twoside::Rational;

struct Interval {
    Rational lo;
    Rational hi;
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

BigInt factorial(long n);
BigInt binomial_factorial(long n, long k);

/// Plain iterative Fibonacci, f_1 = f_2 = 1.
BigInt fibonacci_loop(long n);

long divisor_count_trial(long k);

/// Partitions of n with every part <= max_part, by the usual recursion.
long partitions_count(long n, long max_part);

/// pi by Machin's formula with alternating-series error bounds; width < 10^-digits.
Interval machin_pi(int digits);

/// Rigorous enclosure of a^sqrt(2) by MPFR with directed rounding (a > 0).
Interval power_sqrt2(const Rational& a, int bits = 256);

/// Bisection on dyadic y with y^q vs base^p (base > 1); returns [y_lo, y_hi]
/// with y_lo^q <= base^p <= y_hi^q and width 2^-bits.
Interval bisect_power(long base, long p, long q, int bits);

/// Literal left/right endpoint sums of c x^k on [0, b] with n cells.
Interval riemann_literal(const Rational& c, int k, const Rational& b, long n);

using Pt = std::pair<std::int64_t, std::int64_t>;

/// Lattice points on the closed segment, by stepping through every integer x
/// (or y for vertical segments) and testing collinearity.
long segment_points(Pt a, Pt b);

/// Lattice points strictly inside a simple polygon, by winding number.
long interior_winding(const std::vector<Pt>& poly);

/// Lattice points on the boundary, by enumerating each edge.
long boundary_enumerate(const std::vector<Pt>& poly);

/// Twice the signed area via the trapezoid rule (sum of (x2-x1)(y2+y1)).
std::int64_t twice_area_trapezoid(const std::vector<Pt>& poly);

/// Starter's chance to flip the n-th head: sum over odd T of C(T-1,n-1)/2^T,
/// truncated at T_max with the exact tail P(fewer than n heads in T_max flips).
Interval coin_negative_binomial(long n, long t_max);

} // namespace oracle
