#include "twoside/roots.hpp"

#include <numeric>
#include <vector>

namespace twoside {

namespace {

std::vector<unsigned long> prime_factors(unsigned long q)
{
    std::vector<unsigned long> out;
    for (unsigned long f = 2; f * f <= q; ++f) {
        while (q % f == 0) {
            out.push_back(f);
            q /= f;
        }
    }
    if (q > 1)
        out.push_back(q);
    return out;
}

Bracket power_outward(Bracket base, unsigned long e, const Rational& grid)
{
    Bracket result = Bracket::point(1);
    while (e != 0) {
        if (e & 1UL)
            result = (result * base).outward(grid);
        e >>= 1;
        if (e != 0)
            base = (base * base).outward(grid);
    }
    return result;
}

} // namespace

RootBisector::RootBisector(Rational radicand, unsigned long k)
    : radicand_(std::move(radicand)), k_(k), bracket_(0, max(Rational(1), radicand_))
{
    if (radicand_.sign() < 0)
        throw std::domain_error("root of a negative radicand: " + radicand_.str());
    if (k_ == 0)
        throw std::domain_error("root order must be positive");
    if (radicand_.is_zero())
        bracket_ = Bracket::point(0);
    else if (pow(bracket_.hi(), static_cast<long>(k_)) == radicand_)
        bracket_ = Bracket::point(bracket_.hi());
}

void RootBisector::step()
{
    if (exact())
        return;
    Rational mid = bracket_.midpoint();
    const Rational p = pow(mid, static_cast<long>(k_));
    ++steps_;
    if (p == radicand_)
        bracket_ = Bracket::point(mid);
    else if (p < radicand_)
        bracket_ = Bracket(std::move(mid), bracket_.hi());
    else
        bracket_ = Bracket(bracket_.lo(), std::move(mid));
}

const Bracket& RootBisector::refine(const Rational& eps)
{
    if (eps.sign() <= 0)
        throw std::domain_error("root precision must be positive");
    while (bracket_.width() > eps)
        step();
    return bracket_;
}

Bracket root_bracket(const Rational& q, unsigned long k, const Rational& eps)
{
    RootBisector bisector(q, k);
    return bisector.refine(eps);
}

Bracket root_of_bracket(const Bracket& b, unsigned long k, const Rational& grid)
{
    Rational lo = RootBisector(b.lo(), k).refine(grid).lo();
    Rational hi = RootBisector(b.hi(), k).refine(grid).hi();
    return Bracket(std::move(lo), std::move(hi)).outward(grid);
}

Bracket rational_power_bracket(const Rational& a, long p, unsigned long q, const Rational& eps)
{
    if (a.sign() <= 0)
        throw std::domain_error("rational power needs a positive base, got " + a.str());
    if (eps.sign() <= 0)
        throw std::domain_error("rational power precision must be positive");
    if (q == 0)
        throw std::domain_error("rational power with zero denominator exponent");

    const unsigned long g = std::gcd(static_cast<unsigned long>(p < 0 ? -p : p), q);
    if (p == 0)
        return Bracket::point(1);
    const unsigned long e = static_cast<unsigned long>(p < 0 ? -p : p) / g;
    q /= g;
    const Rational base = p > 0 ? a : a.reciprocal();

    if (q == 1)
        return Bracket::point(pow(base, static_cast<long>(e)));
    if (base == 1)
        return Bracket::point(1);

    const std::vector<unsigned long> factors = prime_factors(q);

    // result magnitude is below ceil(base)^ceil(e/q); budget its bits on top of eps
    const std::size_t magnitude_bits =
        bit_length(Rational(base.ceil()).num()) * ((e + q - 1) / q) + 1;
    std::size_t bits = bit_length(Rational(eps.reciprocal().ceil()).num()) + bit_length(BigInt(e)) +
                       2 * bit_length(BigInt(factors.size())) + magnitude_bits + 16;

    for (;;) {
        const Rational grid(BigInt(1), pow(BigInt(2), bits));
        Bracket r = Bracket::point(base);
        for (unsigned long f : factors)
            r = root_of_bracket(r, f, grid);
        r = power_outward(r, e, grid);
        if (r.width() <= eps)
            return r;
        bits += bits / 2;
    }
}

} // namespace twoside
