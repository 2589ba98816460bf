#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "twoside/rational.hpp"

namespace twoside {

/// Closed rational interval [lo, hi], a two-sided enclosure of one real value.
class Bracket {
public:
    /// Throws std::invalid_argument when lo > hi.
    Bracket(Rational lo, Rational hi);

    static Bracket point(const Rational& v) { return Bracket(v, v); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Bracket& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

    /// Rounds lo down and hi up to integer multiples of grid (grid > 0).
    Bracket outward(const Rational& grid) const;

    /// Multiplication by a point value; the factor may be negative.
    Bracket scaled(const Rational& factor) const;

    std::string str() const;

    friend bool operator==(const Bracket&, const Bracket&) = default;

private:
    Rational lo_;
    Rational hi_;
};

enum class BracketOp { add, sub, mul };

/// Enclosure-sound combination: the result contains x op y for all x in a, y in b.
Bracket bracket_combine(const Bracket& a, const Bracket& b, BracketOp op);

inline Bracket operator+(const Bracket& a, const Bracket& b) { return bracket_combine(a, b, BracketOp::add); }
inline Bracket operator-(const Bracket& a, const Bracket& b) { return bracket_combine(a, b, BracketOp::sub); }
inline Bracket operator*(const Bracket& a, const Bracket& b) { return bracket_combine(a, b, BracketOp::mul); }

std::ostream& operator<<(std::ostream& os, const Bracket& b);

/// Raised when a refinement loop runs out of steps before reaching its tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, Bracket last, std::size_t steps)
        : std::runtime_error(what), last_(std::move(last)), steps_(steps)
    {
    }

    const Bracket& last() const { return last_; }
    std::size_t steps() const { return steps_; }

private:
    Bracket last_;
    std::size_t steps_;
};

} // namespace twoside
