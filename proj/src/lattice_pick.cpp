#include "twoside/lattice_pick.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "twoside/splitmix.hpp"

namespace twoside {

std::int64_t cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p)
{
    return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

namespace {

int sgn(std::int64_t v)
{
    return (v > 0) - (v < 0);
}

bool segments_meet(const LatticePoint& p1, const LatticePoint& p2, const LatticePoint& q1, const LatticePoint& q2)
{
    const int d1 = sgn(cross(q1, q2, p1));
    const int d2 = sgn(cross(q1, q2, p2));
    const int d3 = sgn(cross(p1, p2, q1));
    const int d4 = sgn(cross(p1, p2, q2));
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return true;
    return on_segment(q1, q2, p1) || on_segment(q1, q2, p2) || on_segment(p1, p2, q1) || on_segment(p1, p2, q2);
}

std::int64_t twice_signed_area(const std::vector<LatticePoint>& v)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

std::string point_str(const LatticePoint& p)
{
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

} // namespace

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices) : v_(std::move(vertices))
{
    const std::size_t m = v_.size();
    if (m < 3)
        throw std::domain_error("lattice polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < m; ++i) {
        const auto& prev = v_[(i + m - 1) % m];
        const auto& cur = v_[i];
        const auto& next = v_[(i + 1) % m];
        if (cur == next)
            throw std::domain_error("repeated vertex " + point_str(cur));
        if (cross(prev, cur, next) == 0)
            throw std::domain_error("collinear consecutive vertices at " + point_str(cur));
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (j == i + 1 || (i == 0 && j == m - 1))
                continue;  // adjacent edges share a vertex and are not collinear
            if (segments_meet(v_[i], v_[(i + 1) % m], v_[j], v_[(j + 1) % m]))
                throw std::domain_error("polygon is not simple: edges from " + point_str(v_[i]) + " and " +
                                        point_str(v_[j]) + " meet");
        }
    if (twice_signed_area(v_) <= 0)
        throw std::domain_error("polygon must be counter-clockwise");
}

LatticePolygon LatticePolygon::normalized(std::vector<LatticePoint> v)
{
    v.erase(std::unique(v.begin(), v.end()), v.end());
    while (v.size() > 1 && v.front() == v.back())
        v.pop_back();
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::size_t m = v.size();
            if (on_segment(v[(i + m - 1) % m], v[(i + 1) % m], v[i])) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (twice_signed_area(v) < 0)
        std::reverse(v.begin(), v.end());
    return LatticePolygon(std::move(v));
}

Rational shoelace_area(const LatticePolygon& p)
{
    const std::int64_t twice = twice_signed_area(p.vertices());
    if (twice <= 0)
        throw std::domain_error("degenerate polygon");
    return Rational(BigInt(static_cast<long>(twice)), BigInt(2));
}

long boundary_count(const LatticePolygon& p)
{
    const auto& v = p.vertices();
    long h = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        h += static_cast<long>(std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y)));
    }
    return h;
}

namespace {

bool on_boundary(const std::vector<LatticePoint>& v, const LatticePoint& q)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (on_segment(v[i], v[(i + 1) % v.size()], q))
            return true;
    return false;
}

// Crossing parity of the ray going right from q; q must be off the boundary.
bool crossing_inside(const std::vector<LatticePoint>& v, const LatticePoint& q)
{
    bool inside = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        if ((a.y > q.y) == (b.y > q.y))
            continue;
        const std::int64_t dy = b.y - a.y;
        const std::int64_t lhs = (q.x - a.x) * dy;
        const std::int64_t rhs = (q.y - a.y) * (b.x - a.x);
        if (dy > 0 ? lhs < rhs : lhs > rhs)
            inside = !inside;
    }
    return inside;
}

} // namespace

long interior_count(const LatticePolygon& p)
{
    const auto& v = p.vertices();
    auto [xmin, xmax] = std::minmax_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.y < b.y; });
    long b = 0;
    for (std::int64_t y = ymin->y; y <= ymax->y; ++y)
        for (std::int64_t x = xmin->x; x <= xmax->x; ++x) {
            const LatticePoint q{x, y};
            if (!on_boundary(v, q) && crossing_inside(v, q))
                ++b;
        }
    return b;
}

IdentityReport pick_check(const LatticePolygon& p)
{
    const long h = boundary_count(p);
    const long b = interior_count(p);
    auto r = make_report("geo.pick", {param("vertices", static_cast<long>(p.size())), param("h", h), param("b", b)},
                         shoelace_area(p), Rational(h, 2L) + Rational(b) - Rational(1));
    return r;
}

std::int64_t LatticeTriangle::twice_area() const
{
    return std::abs(cross(a, b, c));
}

namespace {

struct Found {
    std::vector<LatticePoint> boundary;  // with the index of the opposite vertex
    std::vector<int> opposite;
    std::vector<LatticePoint> interior;
};

// Lattice points of the closed triangle other than its vertices.
Found points_in(const LatticeTriangle& t)
{
    Found f;
    const LatticePoint v[3] = {t.a, t.b, t.c};
    const std::int64_t x0 = std::min({t.a.x, t.b.x, t.c.x});
    const std::int64_t x1 = std::max({t.a.x, t.b.x, t.c.x});
    const std::int64_t y0 = std::min({t.a.y, t.b.y, t.c.y});
    const std::int64_t y1 = std::max({t.a.y, t.b.y, t.c.y});
    const int orientation = sgn(cross(t.a, t.b, t.c));
    for (std::int64_t y = y0; y <= y1; ++y)
        for (std::int64_t x = x0; x <= x1; ++x) {
            const LatticePoint q{x, y};
            if (q == t.a || q == t.b || q == t.c)
                continue;
            int signs[3];
            bool outside = false;
            for (int e = 0; e < 3; ++e) {
                signs[e] = sgn(cross(v[e], v[(e + 1) % 3], q)) * orientation;
                outside = outside || signs[e] < 0;
            }
            if (outside)
                continue;
            int on_edge = -1;
            for (int e = 0; e < 3; ++e)
                if (signs[e] == 0)
                    on_edge = e;
            if (on_edge >= 0) {
                f.boundary.push_back(q);
                f.opposite.push_back((on_edge + 2) % 3);
            } else {
                f.interior.push_back(q);
            }
        }
    return f;
}

} // namespace

bool LatticeTriangle::is_empty() const
{
    const Found f = points_in(*this);
    return f.boundary.empty() && f.interior.empty();
}

std::vector<LatticeTriangle> ear_clip(const LatticePolygon& p)
{
    std::vector<LatticePoint> v = p.vertices();
    std::vector<LatticeTriangle> out;
    while (v.size() > 3) {
        const std::size_t m = v.size();
        std::optional<std::size_t> ear;
        for (std::size_t i = 0; i < m && !ear; ++i) {
            const auto& a = v[(i + m - 1) % m];
            const auto& b = v[i];
            const auto& c = v[(i + 1) % m];
            if (cross(a, b, c) <= 0)
                continue;
            bool blocked = false;
            for (std::size_t k = 0; k < m && !blocked; ++k) {
                const auto& q = v[k];
                if (q == a || q == b || q == c)
                    continue;
                blocked = cross(a, b, q) >= 0 && cross(b, c, q) >= 0 && cross(c, a, q) >= 0;
            }
            if (!blocked)
                ear = i;
        }
        if (!ear)
            throw std::logic_error("ear clipping found no ear");
        const std::size_t i = *ear;
        out.push_back({v[(i + m - 1) % m], v[i], v[(i + 1) % m]});
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    }
    out.push_back({v[0], v[1], v[2]});
    return out;
}

TriangulationReport empty_triangulation(const LatticePolygon& p, RefineOrder order)
{
    TriangulationReport rep;
    rep.h = boundary_count(p);
    rep.b = interior_count(p);

    std::vector<LatticeTriangle> work = ear_clip(p);
    while (!work.empty()) {
        const LatticeTriangle t = work.back();
        work.pop_back();
        const Found f = points_in(t);
        if (f.boundary.empty() && f.interior.empty()) {
            rep.triangles.push_back(t);
            continue;
        }
        const LatticePoint v[3] = {t.a, t.b, t.c};
        auto split_boundary = [&](std::size_t idx) {
            const LatticePoint q = f.boundary[idx];
            const int o = f.opposite[idx];
            const LatticePoint& apex = v[o];
            const LatticePoint& s = v[(o + 1) % 3];
            const LatticePoint& e = v[(o + 2) % 3];
            work.push_back({apex, s, q});
            work.push_back({apex, q, e});
        };
        auto fan_interior = [&](const LatticePoint& q) {
            work.push_back({t.a, t.b, q});
            work.push_back({t.b, t.c, q});
            work.push_back({t.c, t.a, q});
        };
        if (order == RefineOrder::boundary_first_lowest) {
            if (!f.boundary.empty()) {
                const auto it = std::min_element(f.boundary.begin(), f.boundary.end());
                split_boundary(static_cast<std::size_t>(it - f.boundary.begin()));
            } else {
                fan_interior(*std::min_element(f.interior.begin(), f.interior.end()));
            }
        } else {
            if (!f.interior.empty()) {
                fan_interior(*std::max_element(f.interior.begin(), f.interior.end()));
            } else {
                const auto it = std::max_element(f.boundary.begin(), f.boundary.end());
                split_boundary(static_cast<std::size_t>(it - f.boundary.begin()));
            }
        }
    }

    std::int64_t twice_total = 0;
    rep.all_empty_half = true;
    for (const auto& t : rep.triangles) {
        twice_total += t.twice_area();
        if (t.twice_area() != 1 || !t.is_empty())
            rep.all_empty_half = false;
    }
    rep.area_check = Rational(BigInt(static_cast<long>(twice_total)), BigInt(2)) == shoelace_area(p);
    rep.count_check = static_cast<long>(rep.triangles.size()) == rep.h + 2 * rep.b - 2;
    return rep;
}

LatticePolygon random_lattice_polygon(std::uint64_t seed, std::int64_t half_extent)
{
    if (half_extent < 1)
        throw std::domain_error("half extent must be at least 1");
    SplitMix64 rng(seed);
    const std::int64_t side = 2 * half_extent + 1;
    const std::int64_t max_points = std::min<std::int64_t>(12, side * side);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const std::int64_t k = rng.between(3, max_points);
        std::vector<LatticePoint> pts;
        while (static_cast<std::int64_t>(pts.size()) < k) {
            const LatticePoint q{rng.between(-half_extent, half_extent), rng.between(-half_extent, half_extent)};
            if (std::find(pts.begin(), pts.end(), q) == pts.end())
                pts.push_back(q);
        }
        // directions from the centroid, scaled by k to stay integral
        LatticePoint sum;
        for (const auto& q : pts) {
            sum.x += q.x;
            sum.y += q.y;
        }
        std::vector<std::pair<LatticePoint, LatticePoint>> dirs;  // (direction, point)
        bool degenerate = false;
        for (const auto& q : pts) {
            const LatticePoint d{k * q.x - sum.x, k * q.y - sum.y};
            degenerate = degenerate || (d.x == 0 && d.y == 0);
            dirs.push_back({d, q});
        }
        if (degenerate)
            continue;
        auto half = [](const LatticePoint& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
        const LatticePoint origin{0, 0};
        std::sort(dirs.begin(), dirs.end(), [&](const auto& l, const auto& r) {
            const int hl = half(l.first);
            const int hr = half(r.first);
            if (hl != hr)
                return hl < hr;
            return cross(origin, l.first, r.first) > 0;
        });
        for (std::size_t i = 0; i + 1 < dirs.size() && !degenerate; ++i)
            degenerate = half(dirs[i].first) == half(dirs[i + 1].first) &&
                         cross(origin, dirs[i].first, dirs[i + 1].first) == 0;
        if (degenerate)
            continue;
        std::vector<LatticePoint> v;
        for (const auto& d : dirs)
            v.push_back(d.second);
        try {
            return LatticePolygon(std::move(v));
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::runtime_error("no valid lattice polygon after 10000 attempts");
}

LatticePolygon figure_polygon()
{
    return LatticePolygon::normalized(
        {{0, 0}, {1, 5}, {5, 4}, {8, 4}, {7, 3}, {6, 2}, {7, 0}, {4, 1}, {3, 0}, {3, 3}});
}

} // namespace twoside
