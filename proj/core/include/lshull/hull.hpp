#pragma once

// Classical convex-hull baselines and scan-line polygon rasterization.
// Pixel (m, n) maps to the point (m, n); all distances are in pixel units.

#include <span>
#include <vector>

#include "lshull/field.hpp"

namespace lshull {

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

// Convex polygon, counterclockwise, closed implicitly. Degenerate inputs
// yield 1 vertex (all points equal) or 2 vertices (collinear set).
struct HullPolygon {
    std::vector<Point> vertices;
};

// Minimal hull vertex set, CCW; interior and collinear boundary points
// are excluded. Throws on empty input.
HullPolygon quickhull(std::span<const Point> points);

// O(nh) reference with the same contract; kept simple to serve as the
// cross-check oracle for quickhull.
HullPolygon gift_wrapping(std::span<const Point> points);

// Scan-line fill: marks pixels whose centers lie inside or on the polygon.
// Handles non-convex polygons (even-odd rule) and degenerate 1-2 vertex
// polygons (nearest pixels to the vertices / segment).
BinaryMask rasterize_polygon(const HullPolygon& poly, int width, int height);

// rasterize_polygon(quickhull(foreground centers)). Throws on empty mask.
BinaryMask hull_mask(const BinaryMask& mask);

// Foreground pixel centers as points.
std::vector<Point> mask_points(const BinaryMask& mask);

// Twice the signed area of triangle abc; positive when c is left of a->b.
double cross(const Point& a, const Point& b, const Point& c);

// Shoelace area of a CCW polygon.
double polygon_area(const HullPolygon& poly);

} // namespace lshull
