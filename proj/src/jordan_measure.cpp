#include "twoside/jordan_measure.hpp"

#include <optional>
#include <stdexcept>

namespace twoside {

ConvexPolygon::ConvexPolygon(std::vector<RatPoint> vertices) : v_(std::move(vertices))
{
    const std::size_t m = v_.size();
    if (m < 3)
        throw std::domain_error("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < m; ++i)
        if (v_[i] == v_[(i + 1) % m])
            throw std::domain_error("repeated consecutive vertex " + v_[i].str());
    // every vertex on the closed left side of every edge rules out both
    // clockwise order and self-overlapping star shapes
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (orient(v_[i], v_[(i + 1) % m], v_[k]).sign() < 0)
                throw std::domain_error("vertices are not in convex counter-clockwise position");
    if (area().sign() <= 0)
        throw std::domain_error("polygon has zero area");
}

Rational ConvexPolygon::area() const
{
    Rational twice = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const auto& p = v_[i];
        const auto& q = v_[(i + 1) % v_.size()];
        twice = twice + (p.x * q.y - q.x * p.y);
    }
    return twice / 2;
}

bool ConvexPolygon::strictly_contains(const RatPoint& p) const
{
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (orient(v_[i], v_[(i + 1) % v_.size()], p).sign() <= 0)
            return false;
    return true;
}

Region make_disk(RatPoint center, Rational r)
{
    if (r.sign() <= 0)
        throw std::domain_error("disk radius must be positive");
    return Disk{std::move(center), std::move(r)};
}

Box bounding_box(const Region& a)
{
    if (const auto* d = std::get_if<Disk>(&a))
        return {{d->center.x - d->r, d->center.y - d->r}, {d->center.x + d->r, d->center.y + d->r}};
    const auto& v = std::get<ConvexPolygon>(a).vertices();
    Box b{v.front(), v.front()};
    for (const auto& p : v) {
        b.lo.x = min(b.lo.x, p.x);
        b.lo.y = min(b.lo.y, p.y);
        b.hi.x = max(b.hi.x, p.x);
        b.hi.y = max(b.hi.y, p.y);
    }
    return b;
}

namespace {

struct Grid {
    RatPoint origin;
    Rational h;
    long cols = 0;
    long rows = 0;

    Rational x(long i) const { return origin.x + h * Rational(i); }
    Rational y(long j) const { return origin.y + h * Rational(j); }
    Box cell(long i, long j) const { return {{x(i), y(j)}, {x(i + 1), y(j + 1)}}; }
};

long ceil_long(const Rational& r)
{
    return r.ceil().get_si();
}

long floor_long(const Rational& r)
{
    return r.floor().get_si();
}

Grid make_grid(const Region& a, long n)
{
    if (n < 1)
        throw std::domain_error("grid needs n >= 1");
    const Box b = bounding_box(a);
    Grid g;
    g.origin = b.lo;
    g.h = Rational(1, BigInt(n));
    g.cols = std::max(1L, ceil_long((b.hi.x - b.lo.x) * Rational(n)));
    g.rows = std::max(1L, ceil_long((b.hi.y - b.lo.y) * Rational(n)));
    return g;
}

JordanCounts finish(long n, long inner, long outer)
{
    const Rational cell = Rational(1, BigInt(n) * n);
    return {n, inner, outer, Bracket(cell * Rational(inner), cell * Rational(outer))};
}

// squared distance from c to the nearest / farthest point of [a, b]
Rational near_sq(const Rational& a, const Rational& b, const Rational& c)
{
    if (c < a)
        return (a - c) * (a - c);
    if (c > b)
        return (c - b) * (c - b);
    return 0;
}

Rational far_sq(const Rational& a, const Rational& b, const Rational& c)
{
    const Rational da = (a - c).abs();
    const Rational db = (b - c).abs();
    const Rational m = max(da, db);
    return m * m;
}

JordanCounts disk_cells(const Disk& d, const Grid& g, long n)
{
    const Rational r2 = d.r * d.r;
    std::vector<Rational> col_near;
    std::vector<Rational> col_far;
    for (long i = 0; i < g.cols; ++i) {
        col_near.push_back(near_sq(g.x(i), g.x(i + 1), d.center.x));
        col_far.push_back(far_sq(g.x(i), g.x(i + 1), d.center.x));
    }
    long inner = 0;
    long outer = 0;
    for (long j = 0; j < g.rows; ++j) {
        const Rational rn = near_sq(g.y(j), g.y(j + 1), d.center.y);
        const Rational rf = far_sq(g.y(j), g.y(j + 1), d.center.y);
        if (rn > r2)
            continue;
        const Rational near_budget = r2 - rn;
        const Rational far_budget = r2 - rf;
        for (long i = 0; i < g.cols; ++i) {
            if (col_near[static_cast<std::size_t>(i)] <= near_budget) {
                ++outer;
                if (col_far[static_cast<std::size_t>(i)] < far_budget)
                    ++inner;
            }
        }
    }
    return finish(n, inner, outer);
}

// Open y-interval of points strictly inside the polygon on the line x = x.
std::optional<std::pair<Rational, Rational>> open_section(const ConvexPolygon& poly, const Rational& x)
{
    const auto& v = poly.vertices();
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        const Rational dx = q.x - p.x;
        const Rational dy = q.y - p.y;
        if (dx.is_zero()) {
            if ((-dy * (x - p.x)).sign() <= 0)
                return std::nullopt;
            continue;
        }
        const Rational y = p.y + dy * (x - p.x) / dx;
        if (dx.sign() > 0)
            lower = lower ? max(*lower, y) : y;
        else
            upper = upper ? min(*upper, y) : y;
    }
    if (!lower || !upper || *lower >= *upper)
        return std::nullopt;
    return std::make_pair(*lower, *upper);
}

// Polygon clipped to xa <= x <= xb; empty when they do not meet.
std::vector<RatPoint> clip_to_strip(const std::vector<RatPoint>& poly, const Rational& xa, const Rational& xb)
{
    auto clip = [](const std::vector<RatPoint>& in, const Rational& bound, bool keep_greater) {
        std::vector<RatPoint> out;
        auto inside = [&](const RatPoint& p) { return keep_greater ? p.x >= bound : p.x <= bound; };
        for (std::size_t i = 0; i < in.size(); ++i) {
            const auto& p = in[i];
            const auto& q = in[(i + 1) % in.size()];
            const bool pin = inside(p);
            const bool qin = inside(q);
            if (pin)
                out.push_back(p);
            if (pin != qin) {
                const Rational t = (bound - p.x) / (q.x - p.x);
                out.push_back({bound, p.y + t * (q.y - p.y)});
            }
        }
        return out;
    };
    auto left = clip(poly, xa, true);
    if (left.empty())
        return left;
    return clip(left, xb, false);
}

JordanCounts polygon_cells(const ConvexPolygon& poly, const Grid& g, long n)
{
    long inner = 0;
    long outer = 0;
    const Rational N = n;
    auto clamp_count = [&](long lo, long hi) {
        lo = std::max(lo, 0L);
        hi = std::min(hi, g.rows - 1);
        return hi >= lo ? hi - lo + 1 : 0L;
    };
    std::optional<std::pair<Rational, Rational>> left = open_section(poly, g.x(0));
    for (long i = 0; i < g.cols; ++i) {
        const Rational xa = g.x(i);
        const Rational xb = g.x(i + 1);
        auto right = open_section(poly, xb);

        const auto piece = clip_to_strip(poly.vertices(), xa, xb);
        if (!piece.empty()) {
            Rational ymin = piece.front().y;
            Rational ymax = ymin;
            for (const auto& p : piece) {
                ymin = min(ymin, p.y);
                ymax = max(ymax, p.y);
            }
            // cell j meets [ymin, ymax] iff y(j) <= ymax and y(j+1) >= ymin
            outer += clamp_count(ceil_long((ymin - g.origin.y) * N) - 1, floor_long((ymax - g.origin.y) * N));
        }
        if (left && right) {
            const Rational lo = max(left->first, right->first);
            const Rational hi = min(left->second, right->second);
            if (lo < hi) {
                // y(j) > lo and y(j+1) < hi
                inner += clamp_count(floor_long((lo - g.origin.y) * N) + 1, ceil_long((hi - g.origin.y) * N) - 2);
            }
        }
        left = std::move(right);
    }
    return finish(n, inner, outer);
}

} // namespace

bool cell_meets_region(const Region& a, const Box& cell)
{
    if (const auto* d = std::get_if<Disk>(&a))
        return near_sq(cell.lo.x, cell.hi.x, d->center.x) + near_sq(cell.lo.y, cell.hi.y, d->center.y) <=
               d->r * d->r;
    const auto& v = std::get<ConvexPolygon>(a).vertices();
    // box axes
    const Box pb = bounding_box(a);
    if (pb.hi.x < cell.lo.x || pb.lo.x > cell.hi.x || pb.hi.y < cell.lo.y || pb.lo.y > cell.hi.y)
        return false;
    // polygon edge normals
    const RatPoint corners[4] = {cell.lo, {cell.hi.x, cell.lo.y}, cell.hi, {cell.lo.x, cell.hi.y}};
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool all_outside = true;
        for (const auto& c : corners)
            if (orient(v[i], v[(i + 1) % v.size()], c).sign() >= 0) {
                all_outside = false;
                break;
            }
        if (all_outside)
            return false;
    }
    return true;
}

bool cell_inside_region(const Region& a, const Box& cell)
{
    const RatPoint corners[4] = {cell.lo, {cell.hi.x, cell.lo.y}, cell.hi, {cell.lo.x, cell.hi.y}};
    if (const auto* d = std::get_if<Disk>(&a)) {
        for (const auto& c : corners) {
            const RatPoint e = c - d->center;
            if (!(e.x * e.x + e.y * e.y < d->r * d->r))
                return false;
        }
        return true;
    }
    const auto& poly = std::get<ConvexPolygon>(a);
    for (const auto& c : corners)
        if (!poly.strictly_contains(c))
            return false;
    return true;
}

JordanCounts jordan_cells(const Region& a, long n)
{
    const Grid g = make_grid(a, n);
    if (const auto* d = std::get_if<Disk>(&a))
        return disk_cells(*d, g, n);
    return polygon_cells(std::get<ConvexPolygon>(a), g, n);
}

JordanCounts jordan_cells_reference(const Region& a, long n)
{
    const Grid g = make_grid(a, n);
    long inner = 0;
    long outer = 0;
    for (long j = 0; j < g.rows; ++j)
        for (long i = 0; i < g.cols; ++i) {
            const Box c = g.cell(i, j);
            if (cell_meets_region(a, c))
                ++outer;
            if (cell_inside_region(a, c))
                ++inner;
        }
    return finish(n, inner, outer);
}

Bracket jordan_bracket(const Region& a, long n)
{
    return jordan_cells(a, n).bracket;
}

JordanRefinement jordan_refine(const Region& a, const Rational& tol, long max_n)
{
    if (tol.sign() <= 0)
        throw std::domain_error("tolerance must be positive");
    JordanRefinement out;
    for (long n = 1; n <= max_n; n *= 2) {
        out.table.push_back(jordan_cells(a, n));
        if (out.final().bracket.width() <= tol)
            return out;
    }
    if (out.table.empty())
        throw std::domain_error("max_n must be at least 1");
    throw NonConvergenceError("grid refinement exceeded n = " + std::to_string(max_n), out.final().bracket,
                              out.table.size());
}

} // namespace twoside
