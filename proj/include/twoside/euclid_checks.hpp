#pragma once

#include <cstdint>
#include <vector>

#include "twoside/geometry.hpp"
#include "twoside/report.hpp"

namespace twoside {

struct Triangle {
    RatPoint a;
    RatPoint b;
    RatPoint c;
};

/// Cevian feet given as interior division ratios of the sides.
struct CevaConfig {
    Triangle t;
    Rational bx_xc;  ///< BX / XC, X on BC
    Rational cy_ya;  ///< CY / YA, Y on CA
    Rational az_zb;  ///< AZ / ZB, Z on AB
};

/// Point dividing [p, q] so that |p d| / |d q| = ratio (ratio > 0).
RatPoint divide(const RatPoint& p, const RatPoint& q, const Rational& ratio);

/// Intersection of the lines p1p2 and q1q2; std::logic_error when parallel.
RatPoint line_intersection(const RatPoint& p1, const RatPoint& p2, const RatPoint& q1, const RatPoint& q2);

/// BX/XC * CY/YA * AZ/ZB for the cevians through p. p strictly inside the
/// (non-degenerate) triangle, else std::domain_error.
Rational ceva_product(const Triangle& t, const RatPoint& p);

/// P = AX cap BY, Z' = CP cap AB; passes iff Z' = Z exactly. A ratio product
/// other than 1 is a precondition failure (std::invalid_argument).
IdentityReport ceva_converse_check(const CevaConfig& cfg);

struct SquaresReport {
    Rational a;
    Rational b;
    Rational x;           ///< HB from x/a = b/(a+b)
    Rational y;           ///< IB from y/b = a/(a+b)
    RatPoint h;           ///< AF cap BG by coordinates
    RatPoint i;           ///< DE cap BG by coordinates
    bool strictly_inside = false;  ///< H strictly between B and G
    bool pass = false;
};

/// Squares ABCD (side a) and BEFG (side b) with A(-a,0), B(0,0), C(0,a),
/// D(-a,a), E(b,0), F(b,b), G(0,b).
SquaresReport squares_intersection_check(const Rational& a, const Rational& b);

// seeded case generators (splitmix64)
std::vector<IdentityReport> ceva_product_trials(std::uint64_t seed, long trials);
std::vector<IdentityReport> ceva_converse_trials(std::uint64_t seed, long trials);
std::vector<SquaresReport> squares_trials(std::uint64_t seed, long trials);

} // namespace twoside
