#pragma once

#include <cstdint>
#include <vector>

#include "twoside/report.hpp"

namespace twoside {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Twice the signed area of (a, b, c).
std::int64_t cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// Closed-segment membership.
bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p);

/// Simple CCW lattice polygon without collinear consecutive vertices.
class LatticePolygon {
public:
    /// Throws std::domain_error when any invariant fails.
    explicit LatticePolygon(std::vector<LatticePoint> vertices);

    /// Accepts clockwise order and collinear consecutive vertices: drops the
    /// middle vertices and reverses if needed, then validates.
    static LatticePolygon normalized(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }

private:
    std::vector<LatticePoint> v_;
};

Rational shoelace_area(const LatticePolygon& p);
long boundary_count(const LatticePolygon& p);
long interior_count(const LatticePolygon& p);

/// area = h/2 + b - 1 with shoelace area and counted h, b.
IdentityReport pick_check(const LatticePolygon& p);

struct LatticeTriangle {
    LatticePoint a;
    LatticePoint b;
    LatticePoint c;

    std::int64_t twice_area() const;
    /// No lattice points besides the vertices, boundary or interior.
    bool is_empty() const;
};

enum class RefineOrder {
    boundary_first_lowest,  ///< split on edge points first, lowest (x, y) first
    interior_first_highest, ///< fan from interior points first, highest (x, y) first
};

struct TriangulationReport {
    std::vector<LatticeTriangle> triangles;
    long h = 0;
    long b = 0;
    bool all_empty_half = false;  ///< every triangle empty with area 1/2
    bool area_check = false;      ///< areas sum to the shoelace area
    bool count_check = false;     ///< count = h + 2b - 2
    bool pass() const { return all_empty_half && area_check && count_check; }
};

/// Ear clipping followed by splitting until every triangle is empty.
TriangulationReport empty_triangulation(const LatticePolygon& p,
                                        RefineOrder order = RefineOrder::boundary_first_lowest);

/// Ear clipping only.
std::vector<LatticeTriangle> ear_clip(const LatticePolygon& p);

/// 3..12 distinct points in [-he, he]^2, sorted by angle about their centroid;
/// degenerate draws are resampled. Deterministic in the seed.
LatticePolygon random_lattice_polygon(std::uint64_t seed, std::int64_t half_extent);

/// Ten-point sample polygon (clockwise, one collinear point), normalized to nine CCW vertices.
LatticePolygon figure_polygon();

} // namespace twoside
