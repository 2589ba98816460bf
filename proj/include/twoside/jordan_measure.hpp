#pragma once

#include <variant>
#include <vector>

#include "twoside/bracket.hpp"
#include "twoside/geometry.hpp"

namespace twoside {

struct Disk {
    RatPoint center;
    Rational r;
};

/// Counter-clockwise convex polygon with rational vertices.
class ConvexPolygon {
public:
    /// Throws std::domain_error unless the vertices form a convex CCW
    /// polygon of positive area (collinear vertices tolerated).
    explicit ConvexPolygon(std::vector<RatPoint> vertices);

    const std::vector<RatPoint>& vertices() const { return v_; }
    Rational area() const;

    /// Strictly inside every edge half-plane.
    bool strictly_contains(const RatPoint& p) const;

private:
    std::vector<RatPoint> v_;
};

using Region = std::variant<Disk, ConvexPolygon>;

/// Disk with positive radius; std::domain_error otherwise.
Region make_disk(RatPoint center, Rational r);

struct Box {
    RatPoint lo;
    RatPoint hi;
};

Box bounding_box(const Region& a);

struct JordanCounts {
    long n = 0;
    long inner_cells = 0;
    long outer_cells = 0;
    Bracket bracket{0, 0};  ///< [inner_cells, outer_cells] / n^2
};

/// Grid of side 1/n anchored at the lower-left corner of the bounding box.
/// Inner: all four cell corners strictly inside. Outer: cell meets the closed
/// region. Only cells of the bounding-box grid are considered.
JordanCounts jordan_cells(const Region& a, long n);

Bracket jordan_bracket(const Region& a, long n);

/// Per-cell reference classification (separating-axis test for polygons,
/// nearest/farthest point for disks). Slow; used to audit the fast path.
JordanCounts jordan_cells_reference(const Region& a, long n);

bool cell_meets_region(const Region& a, const Box& cell);
bool cell_inside_region(const Region& a, const Box& cell);

struct JordanRefinement {
    std::vector<JordanCounts> table;  ///< n = 1, 2, 4, ...
    const JordanCounts& final() const { return table.back(); }
};

/// Doubles n from 1 until width <= tol; NonConvergenceError once n > max_n.
JordanRefinement jordan_refine(const Region& a, const Rational& tol, long max_n);

} // namespace twoside
