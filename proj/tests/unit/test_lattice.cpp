#include <doctest.h>

#include "oracles.hpp"
#include "twoside/lattice_pick.hpp"

using namespace twoside;

namespace {

std::vector<oracle::Pt> pts(const LatticePolygon& p)
{
    std::vector<oracle::Pt> out;
    for (const auto& v : p.vertices())
        out.emplace_back(v.x, v.y);
    return out;
}

LatticePolygon square(std::int64_t s)
{
    return LatticePolygon({{0, 0}, {s, 0}, {s, s}, {0, s}});
}

void check_against_oracles(const LatticePolygon& p)
{
    const auto o = pts(p);
    const long h = oracle::boundary_enumerate(o);
    const long b = oracle::interior_winding(o);
    const std::int64_t twice = oracle::twice_area_trapezoid(o);
    REQUIRE(twice > 0);
    REQUIRE(shoelace_area(p) == Rational(twice) / 2);
    REQUIRE(boundary_count(p) == h);
    REQUIRE(interior_count(p) == b);
    REQUIRE(pick_check(p).pass);
    for (RefineOrder order : {RefineOrder::boundary_first_lowest, RefineOrder::interior_first_highest}) {
        const auto t = empty_triangulation(p, order);
        REQUIRE(t.pass());
        REQUIRE(t.h == h);
        REQUIRE(t.b == b);
        REQUIRE(static_cast<long>(t.triangles.size()) == h + 2 * b - 2);
        REQUIRE(static_cast<std::int64_t>(t.triangles.size()) == twice);
        for (const auto& tri : t.triangles) {
            REQUIRE(tri.is_empty());
            REQUIRE(std::abs(tri.twice_area()) == 1);
        }
    }
}

} // namespace

TEST_CASE("basic counts")
{
    const auto tri = LatticePolygon({{0, 0}, {4, 0}, {0, 4}});
    CHECK(shoelace_area(tri) == 8);
    CHECK(boundary_count(tri) == 12);
    CHECK(interior_count(tri) == 3);
    CHECK(pick_check(tri).pass);

    const auto sq = square(3);
    CHECK(shoelace_area(sq) == 9);
    CHECK(boundary_count(sq) == 12);
    CHECK(interior_count(sq) == 4);
    const auto t = empty_triangulation(sq);
    CHECK(t.triangles.size() == 18);
    CHECK(t.pass());

    CHECK(cross({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(on_segment({0, 0}, {4, 2}, {2, 1}));
    CHECK_FALSE(on_segment({0, 0}, {4, 2}, {1, 1}));
    CHECK_FALSE(on_segment({0, 0}, {4, 2}, {6, 3}));

    const LatticeTriangle unit{{0, 0}, {1, 0}, {0, 1}};
    CHECK(unit.is_empty());
    CHECK(unit.twice_area() == 1);
    CHECK_FALSE(LatticeTriangle({{0, 0}, {2, 0}, {0, 1}}).is_empty());
}

TEST_CASE("figure polygon")
{
    const auto f = figure_polygon();
    // (8,4), (7,3), (6,2) are collinear, so normalization keeps nine corners
    CHECK(f.size() == 9);
    check_against_oracles(f);
    CHECK(ear_clip(f).size() == 7);
}

TEST_CASE("invariants")
{
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}}), std::domain_error);
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), std::domain_error);  // clockwise
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), std::domain_error);  // collinear
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), std::domain_error);  // bow tie
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), std::domain_error);
    CHECK_THROWS_AS(random_lattice_polygon(1, 0), std::domain_error);

    const auto n = LatticePolygon::normalized({{0, 0}, {0, 2}, {2, 2}, {2, 1}, {2, 0}, {1, 0}});
    CHECK(n.size() == 4);
    CHECK(shoelace_area(n) == 4);
    CHECK(boundary_count(n) == 8);
}

TEST_CASE("property: random polygons agree with the oracles for 200 seeds")
{
    CHECK(random_lattice_polygon(7, 20).vertices() == random_lattice_polygon(7, 20).vertices());
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        INFO("seed=" << seed);
        const auto p = random_lattice_polygon(seed, 20);
        REQUIRE(p.size() >= 3);
        REQUIRE(p.size() <= 12);
        for (const auto& v : p.vertices()) {
            REQUIRE(std::abs(v.x) <= 20);
            REQUIRE(std::abs(v.y) <= 20);
        }
        check_against_oracles(p);
    }
}
