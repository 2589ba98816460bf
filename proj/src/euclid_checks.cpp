#include "twoside/euclid_checks.hpp"

#include <stdexcept>

#include "twoside/splitmix.hpp"

namespace twoside {

RatPoint divide(const RatPoint& p, const RatPoint& q, const Rational& ratio)
{
    if (ratio.sign() <= 0)
        throw std::domain_error("division ratio must be positive");
    return (Rational(1) / (Rational(1) + ratio)) * (p + ratio * q);
}

RatPoint line_intersection(const RatPoint& p1, const RatPoint& p2, const RatPoint& q1, const RatPoint& q2)
{
    const RatPoint d = p2 - p1;
    const RatPoint e = q2 - q1;
    const Rational denom = d.x * e.y - d.y * e.x;
    if (denom.is_zero())
        throw std::logic_error("parallel lines");
    const RatPoint w = q1 - p1;
    const Rational s = (w.x * e.y - w.y * e.x) / denom;
    return p1 + s * d;
}

namespace {

void require_triangle(const Triangle& t)
{
    if (orient(t.a, t.b, t.c).is_zero())
        throw std::domain_error("degenerate triangle");
}

// |p d| / |d q| for d on the segment pq, via the affine parameter
Rational segment_ratio(const RatPoint& p, const RatPoint& q, const RatPoint& d)
{
    const RatPoint pq = q - p;
    const RatPoint pd = d - p;
    const Rational t = pq.x.is_zero() ? pd.y / pq.y : pd.x / pq.x;
    return t / (Rational(1) - t);
}

} // namespace

Rational ceva_product(const Triangle& t, const RatPoint& p)
{
    require_triangle(t);
    const int s = orient(t.a, t.b, t.c).sign();
    if (orient(t.a, t.b, p).sign() != s || orient(t.b, t.c, p).sign() != s || orient(t.c, t.a, p).sign() != s)
        throw std::domain_error("point " + p.str() + " is not strictly inside the triangle");
    const RatPoint x = line_intersection(t.a, p, t.b, t.c);
    const RatPoint y = line_intersection(t.b, p, t.c, t.a);
    const RatPoint z = line_intersection(t.c, p, t.a, t.b);
    return segment_ratio(t.b, t.c, x) * segment_ratio(t.c, t.a, y) * segment_ratio(t.a, t.b, z);
}

IdentityReport ceva_converse_check(const CevaConfig& cfg)
{
    require_triangle(cfg.t);
    if (cfg.bx_xc.sign() <= 0 || cfg.cy_ya.sign() <= 0 || cfg.az_zb.sign() <= 0)
        throw std::invalid_argument("ratios must be positive");
    if (cfg.bx_xc * cfg.cy_ya * cfg.az_zb != 1)
        throw std::invalid_argument("ratio product must be exactly 1");
    const auto& [A, B, C] = cfg.t;
    const RatPoint X = divide(B, C, cfg.bx_xc);
    const RatPoint Y = divide(C, A, cfg.cy_ya);
    const RatPoint Z = divide(A, B, cfg.az_zb);
    const RatPoint P = line_intersection(A, X, B, Y);
    const RatPoint Zp = line_intersection(C, P, A, B);
    auto r = make_report("geo.ceva_converse",
                         {param("BX/XC", cfg.bx_xc), param("CY/YA", cfg.cy_ya), param("AZ/ZB", cfg.az_zb)},
                         segment_ratio(A, B, Zp), cfg.az_zb);
    r.note = "P=" + P.str() + " Z'=" + Zp.str() + " Z=" + Z.str();
    if (r.pass && !(Zp == Z)) {
        r.pass = false;
        r.witness = Witness{r.params, Zp.str(), Z.str()};
    }
    return r;
}

SquaresReport squares_intersection_check(const Rational& a, const Rational& b)
{
    if (a.sign() <= 0 || b.sign() <= 0)
        throw std::domain_error("square sides must be positive");
    SquaresReport s;
    s.a = a;
    s.b = b;
    s.x = a * b / (a + b);
    s.y = b * a / (a + b);
    const RatPoint A{-a, 0}, B{0, 0}, D{-a, a}, E{b, 0}, F{b, b}, G{0, b};
    s.h = line_intersection(A, F, B, G);
    s.i = line_intersection(D, E, B, G);
    s.strictly_inside = s.h.x.is_zero() && s.h.y.sign() > 0 && s.h.y < b;
    s.pass = s.x == s.y && s.h == s.i && s.h == RatPoint{0, s.x} && s.strictly_inside;
    return s;
}

namespace {

Triangle random_triangle(SplitMix64& rng)
{
    for (;;) {
        auto pt = [&] { return RatPoint{Rational(rng.between(-20, 20)), Rational(rng.between(-20, 20))}; };
        Triangle t{pt(), pt(), pt()};
        if (!orient(t.a, t.b, t.c).is_zero())
            return t;
    }
}

Rational random_ratio(SplitMix64& rng)
{
    return Rational(BigInt(static_cast<long>(rng.between(1, 50))), BigInt(static_cast<long>(rng.between(1, 50))));
}

} // namespace

std::vector<IdentityReport> ceva_product_trials(std::uint64_t seed, long trials)
{
    SplitMix64 rng(seed);
    std::vector<IdentityReport> out;
    Triangle t = random_triangle(rng);
    for (long i = 0; i < trials; ++i) {
        if (i % 5 == 0)
            t = random_triangle(rng);
        // positive barycentric weights give a strictly interior point
        const Rational w1 = rng.between(1, 100), w2 = rng.between(1, 100), w3 = rng.between(1, 100);
        const RatPoint p = (Rational(1) / (w1 + w2 + w3)) * (w1 * t.a + w2 * t.b + w3 * t.c);
        out.push_back(make_report("geo.ceva", {param("trial", i), param("P", p.str())}, ceva_product(t, p), 1));
    }
    return out;
}

std::vector<IdentityReport> ceva_converse_trials(std::uint64_t seed, long trials)
{
    SplitMix64 rng(seed);
    std::vector<IdentityReport> out;
    for (long i = 0; i < trials; ++i) {
        const Triangle t = random_triangle(rng);
        const Rational r1 = random_ratio(rng);
        const Rational r2 = random_ratio(rng);
        out.push_back(ceva_converse_check({t, r1, r2, Rational(1) / (r1 * r2)}));
    }
    return out;
}

std::vector<SquaresReport> squares_trials(std::uint64_t seed, long trials)
{
    SplitMix64 rng(seed);
    std::vector<SquaresReport> out;
    for (long i = 0; i < trials; ++i)
        out.push_back(squares_intersection_check(random_ratio(rng), random_ratio(rng)));
    return out;
}

} // namespace twoside
