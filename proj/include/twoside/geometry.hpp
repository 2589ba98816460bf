#pragma once

#include <string>

#include "twoside/rational.hpp"

namespace twoside {

struct RatPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
inline RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline RatPoint operator*(const Rational& s, const RatPoint& p) { return {s * p.x, s * p.y}; }

/// z-component of (b - a) x (c - a); positive for a left turn.
inline Rational orient(const RatPoint& a, const RatPoint& b, const RatPoint& c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

} // namespace twoside
