#include "twoside/analysis_brackets.hpp"

#include <stdexcept>

#include "twoside/roots.hpp"

namespace twoside {

SqueezeResult squeeze_limit(BracketGenerator& g, const Rational& tol, std::size_t max_steps)
{
    if (tol.sign() <= 0)
        throw std::domain_error("squeeze tolerance must be positive");
    if (max_steps < 1)
        throw std::domain_error("squeeze needs at least one step");
    std::optional<Bracket> last;
    for (std::size_t i = 0; i < max_steps; ++i) {
        last = g.step();
        if (last->width() <= tol)
            return {*last, g.steps(), g.parameter()};
    }
    throw NonConvergenceError("no bracket of width <= " + tol.str() + " within " + std::to_string(max_steps) +
                                  " steps (last width " + last->width().str() + ")",
                              *last, g.steps());
}

Bracket nth_root_sequence_bracket(long n)
{
    if (n < 1)
        throw std::domain_error("nth-root sequence starts at n = 1");
    // 10^-9 keeps the rounding far below the true width 5(2^(1/n) - 1) for
    // every n this is used with.
    const Bracket c = root_bracket(2, static_cast<unsigned long>(n), Rational(1, BigInt(1000000000)));
    return Bracket(5, 5 * c.hi());
}

namespace {

Rational ten_pow(long e)
{
    return Rational(pow(BigInt(10), static_cast<unsigned long>(e)));
}

// floor(sqrt(2) * 10^digits), by bisection until both ends agree
BigInt sqrt2_truncated(long digits)
{
    const Rational scale = ten_pow(digits);
    RootBisector rb(2, 2);
    Rational eps = Rational(1) / ten_pow(digits + 2);
    for (;;) {
        const Bracket& b = rb.refine(eps);
        const BigInt lo = (b.lo() * scale).floor();
        const BigInt hi = (b.hi() * scale).floor();
        if (lo == hi)
            return lo;
        eps = eps / 10;
    }
}

} // namespace

Bracket real_power_bracket(const Rational& a, long digits)
{
    if (a.sign() <= 0 || a == 1)
        throw std::domain_error("real power needs a > 0 and a != 1");
    if (digits < 0)
        throw std::domain_error("digits must be non-negative");
    const BigInt F = sqrt2_truncated(digits);
    const BigInt q = pow(BigInt(10), static_cast<unsigned long>(digits));
    if (!F.fits_slong_p() || !q.fits_ulong_p())
        throw std::domain_error("too many digits");
    const Rational eps = Rational(1) / ten_pow(digits + 3);
    const Bracket at_lo = rational_power_bracket(a, F.get_si(), q.get_ui(), eps);
    const Bracket at_hi = rational_power_bracket(a, F.get_si() + 1, q.get_ui(), eps);
    if (a > 1)
        return Bracket(at_lo.lo(), at_hi.hi());
    // decreasing base: the larger exponent gives the smaller power
    return Bracket(at_hi.lo(), at_lo.hi());
}

GeometricSeriesReport geometric_series_sum(const Rational& a, const Rational& r, long N)
{
    if (r.abs() >= 1)
        throw std::domain_error("geometric series diverges for |r| >= 1");
    if (N < 0)
        throw std::domain_error("N must be non-negative");
    Rational partial = 0;
    Rational term = a;
    for (long i = 0; i <= N; ++i) {
        partial = partial + term;
        term = term * r;
    }
    const Rational one_minus = Rational(1) - r;
    const Rational tail = term / one_minus;  // term == a r^(N+1)
    const Rational other = partial + tail;
    return {partial, a / one_minus, tail, Bracket(min(partial, other), max(partial, other))};
}

SwinesheadReport swineshead_check(long N)
{
    if (N < 0)
        throw std::domain_error("N must be non-negative");
    SwinesheadReport s;
    Rational pow_half = 1;
    for (long n = 0; n <= N; ++n) {
        s.partial = s.partial + Rational(n) * pow_half;
        pow_half = pow_half / 2;
    }
    const Rational gap = Rational(N + 2) / pow(Rational(2), N);
    s.closed_partial = Rational(2) - gap;
    s.bracket = Bracket(s.partial, s.partial + gap);
    s.pass = s.partial == s.closed_partial && s.bracket.contains(Rational(2));
    return s;
}

IdentityReport rows_rearrangement_check(long N)
{
    if (N < 1)
        throw std::domain_error("N must be at least 1");
    Rational rows = 0;
    for (long j = 1; j <= N; ++j) {
        Rational row = 0;
        for (long i = j; i <= N; ++i)
            row = row + Rational(1) / pow(Rational(2), i);
        rows = rows + row;
    }
    Rational weighted = 0;
    for (long i = 1; i <= N; ++i)
        weighted = weighted + Rational(i) / pow(Rational(2), i);
    return make_report("series.rows", {param("N", N)}, rows, weighted);
}

Rational MonomialIntegrand::operator()(const Rational& x) const
{
    return c * pow(x, k);
}

Rational MonomialIntegrand::integral() const
{
    return c * pow(b, k + 1) / Rational(k + 1);
}

namespace {

// 1^k + 2^k + ... + m^k
Rational faulhaber(int k, long m)
{
    const Rational M = m;
    switch (k) {
    case 1:
        return M * (M + 1) / 2;
    case 2:
        return M * (M + 1) * (2 * M + 1) / 6;
    case 3: {
        const Rational t = M * (M + 1) / 2;
        return t * t;
    }
    default:
        throw std::domain_error("unsupported exponent");
    }
}

} // namespace

Bracket riemann_bracket(const MonomialIntegrand& f, long n)
{
    if (f.k < 1 || f.k > 3)
        throw std::domain_error("integrand exponent must be 1, 2 or 3");
    if (f.c.sign() <= 0 || f.b.sign() <= 0)
        throw std::domain_error("integrand needs c > 0 and b > 0");
    if (n < 1)
        throw std::domain_error("need at least one cell");
    const Rational h = f.b / Rational(n);
    const Rational scale = f.c * pow(h, f.k + 1);
    return Bracket(scale * faulhaber(f.k, n - 1), scale * faulhaber(f.k, n));
}

PiGenerator::PiGenerator(Rational eps, Rational scale) : eps_(std::move(eps)), scale_(std::move(scale))
{
    if (eps_.sign() <= 0)
        throw std::domain_error("eps must be positive");
    if (scale_.sign() <= 0)
        throw std::domain_error("scale must be positive");
}

std::string PiGenerator::parameter() const
{
    return "n=" + sides_.get_str();
}

Bracket PiGenerator::next()
{
    if (!current_) {
        sides_ = 6;
        sin_ = Bracket::point(Rational(1, 2));
        cos_ = root_bracket(3, 2, eps_).scaled(Rational(1, 2)).outward(eps_);
    } else {
        sides_ *= 2;
        // half angle: c' = sqrt((1 + c) / 2), s' = s / (2 c')
        const Bracket half = (Bracket::point(1) + *cos_).scaled(Rational(1, 2));
        const Bracket c2 = root_of_bracket(half, 2, eps_);
        const Bracket inv(Rational(1) / (2 * c2.hi()), Rational(1) / (2 * c2.lo()));
        // s shrinks like pi/n, so its grid shrinks with it
        sin_ = (*sin_ * inv).outward(eps_ / Rational(sides_));
        cos_ = c2;
    }
    const Rational n = sides_;
    const Rational inscribed = n * sin_->lo() * cos_->lo();
    const Rational circumscribed = n * sin_->hi() / cos_->lo();
    Bracket b = Bracket(inscribed, circumscribed).outward(eps_).scaled(scale_);
    if (current_)
        b = Bracket(max(b.lo(), current_->lo()), min(b.hi(), current_->hi()));
    current_ = b;
    return b;
}

Bracket pi_bracket(long doublings, const Rational& eps)
{
    if (doublings < 0)
        throw std::domain_error("doublings must be non-negative");
    PiGenerator g(eps);
    Bracket b = g.step();
    for (long i = 0; i < doublings; ++i)
        b = g.step();
    return b;
}

Bracket circle_area_bracket(const Rational& r, long doublings, const Rational& eps)
{
    if (r.sign() <= 0)
        throw std::domain_error("radius must be positive");
    return pi_bracket(doublings, eps).scaled(r * r);
}

Bracket cylinder_volume_bracket(const Rational& r, const Rational& m, long doublings, const Rational& eps)
{
    if (m.sign() <= 0)
        throw std::domain_error("height must be positive");
    return circle_area_bracket(r, doublings, eps).scaled(m);
}

} // namespace twoside
