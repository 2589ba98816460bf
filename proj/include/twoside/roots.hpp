#pragma once

#include "twoside/bracket.hpp"

namespace twoside {

/// Bisection for the k-th root of a non-negative rational.
///
/// Starts from [0, max(1, radicand)] and keeps lo^k <= radicand <= hi^k.
/// Each step halves the bracket unless the midpoint is the exact root, in
/// which case the bracket collapses to that point. Refining further only
/// continues the same halving sequence, so brackets are nested.
class RootBisector {
public:
    RootBisector(Rational radicand, unsigned long k);

    const Bracket& bracket() const { return bracket_; }
    bool exact() const { return bracket_.lo() == bracket_.hi(); }
    std::size_t steps() const { return steps_; }

    void step();
    const Bracket& refine(const Rational& eps);

private:
    Rational radicand_;
    unsigned long k_;
    Bracket bracket_;
    std::size_t steps_ = 0;
};

/// Bracket B with lo^k <= q <= hi^k and width(B) <= eps.
Bracket root_bracket(const Rational& q, unsigned long k, const Rational& eps);

/// Enclosure of a^(p/q) with width <= eps (a > 0, q >= 1).
///
/// The root is taken one prime factor of q at a time and the p-th power by
/// repeated squaring; all intermediate endpoints are rounded outward onto a
/// dyadic grid that is refined until the requested width is met.
Bracket rational_power_bracket(const Rational& a, long p, unsigned long q, const Rational& eps);

/// Endpoint-wise k-th root of a non-negative bracket, rounded outward to grid.
Bracket root_of_bracket(const Bracket& b, unsigned long k, const Rational& grid);

} // namespace twoside
