#include "twoside/bracket.hpp"

#include <algorithm>
#include <array>
#include <ostream>

namespace twoside {

Bracket::Bracket(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_)
        throw std::invalid_argument("bracket with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
}

Bracket Bracket::outward(const Rational& grid) const
{
    if (grid.sign() <= 0)
        throw std::domain_error("outward rounding needs a positive grid");
    const Rational down = Rational((lo_ / grid).floor()) * grid;
    const Rational up = Rational((hi_ / grid).ceil()) * grid;
    return Bracket(down, up);
}

Bracket Bracket::scaled(const Rational& factor) const
{
    Rational a = lo_ * factor;
    Rational b = hi_ * factor;
    if (b < a)
        std::swap(a, b);
    return Bracket(std::move(a), std::move(b));
}

std::string Bracket::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Bracket bracket_combine(const Bracket& a, const Bracket& b, BracketOp op)
{
    switch (op) {
    case BracketOp::add:
        return Bracket(a.lo() + b.lo(), a.hi() + b.hi());
    case BracketOp::sub:
        return Bracket(a.lo() - b.hi(), a.hi() - b.lo());
    case BracketOp::mul: {
        const std::array<Rational, 4> p{a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
        auto [mn, mx] = std::minmax_element(p.begin(), p.end());
        return Bracket(*mn, *mx);
    }
    }
    throw std::logic_error("unknown bracket op");
}

std::ostream& operator<<(std::ostream& os, const Bracket& b) { return os << b.str(); }

} // namespace twoside
