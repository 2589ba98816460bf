#pragma once

#include <string>

#include "twoside/bracket.hpp"
#include "twoside/report.hpp"
#include "twoside/splitmix.hpp"

namespace testing_support {

using twoside::Rational;

inline Rational q(long num, long den = 1)
{
    return Rational(twoside::BigInt(num), twoside::BigInt(den));
}

inline Rational dec(const std::string& s)
{
    return Rational::parse(s);
}

/// p/q with p in [-range, range] and q in [1, range].
inline Rational random_rational(twoside::SplitMix64& rng, long range = 30)
{
    return q(rng.between(-range, range), rng.between(1, range));
}

inline bool overlaps(const twoside::Bracket& b, const Rational& lo, const Rational& hi)
{
    return b.lo() <= hi && lo <= b.hi();
}

inline Rational as_rational(const twoside::ReportValue& v)
{
    return std::get<Rational>(v);
}

} // namespace testing_support
