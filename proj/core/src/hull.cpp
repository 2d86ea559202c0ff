#include "lshull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lshull {

namespace {

constexpr double kEps = 1e-9;

bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Recursive half: appends hull vertices strictly right of a->b, between
// a and b in traversal order.
void quickhull_side(const std::vector<Point>& pts, const Point& a,
                    const Point& b, std::vector<Point>& out) {
    // farthest point from the line a->b; ties broken lexicographically
    int best = -1;
    double best_d = 0.0;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        const double d = -cross(a, b, pts[i]);
        if (d <= kEps) continue;
        if (best < 0 || d > best_d + kEps ||
            (d > best_d - kEps && lex_less(pts[i], pts[best]))) {
            best = i;
            best_d = std::max(best_d, d);
        }
    }
    if (best < 0) return;
    const Point p = pts[best];

    std::vector<Point> right_ap, right_pb;
    for (const Point& q : pts) {
        if (-cross(a, p, q) > kEps) right_ap.push_back(q);
        else if (-cross(p, b, q) > kEps) right_pb.push_back(q);
    }
    quickhull_side(right_ap, a, p, out);
    out.push_back(p);
    quickhull_side(right_pb, p, b, out);
}

} // namespace

double cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double polygon_area(const HullPolygon& poly) {
    const auto& v = poly.vertices;
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

HullPolygon quickhull(std::span<const Point> points) {
    if (points.empty())
        throw std::invalid_argument("quickhull: empty point set");

    std::vector<Point> pts(points.begin(), points.end());
    const Point a = *std::min_element(pts.begin(), pts.end(), lex_less);
    const Point b = *std::max_element(pts.begin(), pts.end(), lex_less);

    if (a == b) return HullPolygon{{a}};

    std::vector<Point> below, above;
    for (const Point& p : pts) {
        const double d = cross(a, b, p);
        if (d > kEps) above.push_back(p);
        else if (d < -kEps) below.push_back(p);
    }
    if (above.empty() && below.empty())
        return HullPolygon{{a, b}}; // collinear set: segment endpoints

    HullPolygon hull;
    hull.vertices.push_back(a);
    quickhull_side(below, a, b, hull.vertices); // lower chain (CCW)
    hull.vertices.push_back(b);
    quickhull_side(above, b, a, hull.vertices); // upper chain
    return hull;
}

HullPolygon gift_wrapping(std::span<const Point> points) {
    if (points.empty())
        throw std::invalid_argument("gift_wrapping: empty point set");

    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() == 1) return HullPolygon{{pts[0]}};

    const Point start = pts[0]; // lexicographic minimum is a hull vertex
    HullPolygon hull;
    Point cur = start;
    do {
        hull.vertices.push_back(cur);
        Point cand = pts[0] == cur ? pts[1] : pts[0];
        for (const Point& p : pts) {
            if (p == cur) continue;
            const double d = cross(cur, cand, p);
            if (d < -kEps) {
                cand = p; // p is right of cur->cand: tighter wrap
            } else if (std::abs(d) <= kEps) {
                // collinear: keep the farthest so interior points drop out
                const double dc = std::hypot(cand.x - cur.x, cand.y - cur.y);
                const double dp = std::hypot(p.x - cur.x, p.y - cur.y);
                if (dp > dc) cand = p;
            }
        }
        cur = cand;
    } while (!(cur == start) && hull.vertices.size() <= pts.size());
    return hull;
}

std::vector<Point> mask_points(const BinaryMask& mask) {
    std::vector<Point> pts;
    for (int n = 0; n < mask.height(); ++n)
        for (int m = 0; m < mask.width(); ++m)
            if (mask(m, n))
                pts.push_back({static_cast<double>(m), static_cast<double>(n)});
    return pts;
}

namespace {

void mark_rounded(BinaryMask& mask, double x, double y) {
    const int m = static_cast<int>(std::lround(x));
    const int n = static_cast<int>(std::lround(y));
    if (m >= 0 && m < mask.width() && n >= 0 && n < mask.height())
        mask(m, n) = 1;
}

void fill_run(BinaryMask& mask, double x0, double x1, int n) {
    if (n < 0 || n >= mask.height()) return;
    int lo = static_cast<int>(std::ceil(x0 - kEps));
    int hi = static_cast<int>(std::floor(x1 + kEps));
    lo = std::max(lo, 0);
    hi = std::min(hi, mask.width() - 1);
    for (int m = lo; m <= hi; ++m) mask(m, n) = 1;
}

} // namespace

BinaryMask rasterize_polygon(const HullPolygon& poly, int width, int height) {
    BinaryMask mask(width, height);
    const auto& v = poly.vertices;
    if (v.empty()) return mask;

    if (v.size() == 1) {
        mark_rounded(mask, v[0].x, v[0].y);
        return mask;
    }
    if (v.size() == 2) {
        const double len = std::hypot(v[1].x - v[0].x, v[1].y - v[0].y);
        const int steps = std::max(1, static_cast<int>(std::ceil(len * 2)));
        for (int s = 0; s <= steps; ++s) {
            const double t = static_cast<double>(s) / steps;
            mark_rounded(mask, v[0].x + t * (v[1].x - v[0].x),
                         v[0].y + t * (v[1].y - v[0].y));
        }
        return mask;
    }

    // Even-odd scan-line fill over pixel-center rows y = n.
    for (int n = 0; n < height; ++n) {
        const double y = n;
        std::vector<double> xs;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& p = v[i];
            const Point& q = v[(i + 1) % v.size()];
            if (p.y == q.y) continue;
            const double ymin = std::min(p.y, q.y);
            const double ymax = std::max(p.y, q.y);
            if (y >= ymin && y < ymax) // half-open to count vertices once
                xs.push_back(p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y));
        }
        std::sort(xs.begin(), xs.end());
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2)
            fill_run(mask, xs[i], xs[i + 1], n);
    }

    // Boundary pass: pixel centers lying exactly on an edge are inside by
    // contract but can be missed by the half-open crossing rule.
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        if (std::abs(p.y - q.y) <= kEps) {
            const double yr = std::round(p.y);
            if (std::abs(p.y - yr) <= kEps)
                fill_run(mask, std::min(p.x, q.x), std::max(p.x, q.x),
                         static_cast<int>(yr));
        } else {
            const int nlo = static_cast<int>(std::ceil(std::min(p.y, q.y) - kEps));
            const int nhi = static_cast<int>(std::floor(std::max(p.y, q.y) + kEps));
            for (int n = nlo; n <= nhi; ++n) {
                const double x = p.x + (n - p.y) * (q.x - p.x) / (q.y - p.y);
                if (std::abs(x - std::round(x)) <= kEps)
                    mark_rounded(mask, std::round(x), n);
            }
        }
    }
    return mask;
}

BinaryMask hull_mask(const BinaryMask& mask) {
    const auto pts = mask_points(mask);
    if (pts.empty())
        throw std::invalid_argument("hull_mask: empty mask");
    return rasterize_polygon(quickhull(pts), mask.width(), mask.height());
}

} // namespace lshull
