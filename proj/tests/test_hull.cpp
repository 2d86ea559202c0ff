#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "lshull/hull.hpp"
#include "lshull/sdf.hpp"
#include "support/oracles.hpp"
#include "support/shapes.hpp"

using namespace lshull;

namespace {

// Rotate a CCW vertex cycle so it starts at the lexicographic minimum.
std::vector<Point> canonical(const HullPolygon& poly) {
    std::vector<Point> v = poly.vertices;
    if (v.empty()) return v;
    auto it = std::min_element(v.begin(), v.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::rotate(v.begin(), it, v.end());
    return v;
}

std::vector<Point> random_points(unsigned seed, int max_n = 64) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> count(1, max_n);
    std::uniform_int_distribution<int> coord(0, 50);
    std::vector<Point> pts(count(gen));
    for (auto& p : pts)
        p = {static_cast<double>(coord(gen)), static_cast<double>(coord(gen))};
    return pts;
}

} // namespace

TEST_CASE("quickhull basics") {
    SUBCASE("square corners plus center") {
        const std::vector<Point> pts = {
            {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
        const HullPolygon hull = quickhull(pts);
        REQUIRE(hull.vertices.size() == 4);
        CHECK(polygon_area(hull) == doctest::Approx(1.0));
        // CCW orientation: positive cross at every corner
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(cross(hull.vertices[i], hull.vertices[(i + 1) % 4],
                        hull.vertices[(i + 2) % 4]) > 0.0);
    }
    SUBCASE("collinear points give segment endpoints") {
        const std::vector<Point> pts = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {1.5, 1.5}};
        const HullPolygon hull = quickhull(pts);
        REQUIRE(hull.vertices.size() == 2);
        CHECK(hull.vertices[0] == Point{0, 0});
        CHECK(hull.vertices[1] == Point{3, 3});
    }
    SUBCASE("single point") {
        const std::vector<Point> pts = {{2, 3}, {2, 3}};
        CHECK(quickhull(pts).vertices.size() == 1);
    }
    SUBCASE("empty input throws") {
        CHECK_THROWS(quickhull(std::vector<Point>{}));
    }
    SUBCASE("collinear boundary points are dropped") {
        const std::vector<Point> pts = {{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4},
                                        {2, 4}, {0, 2}, {4, 2}};
        const HullPolygon hull = quickhull(pts);
        CHECK(hull.vertices.size() == 4);
    }
}

TEST_CASE("gift_wrapping basics") {
    SUBCASE("triangle") {
        const std::vector<Point> pts = {{0, 0}, {4, 0}, {2, 3}};
        CHECK(gift_wrapping(pts).vertices.size() == 3);
    }
    SUBCASE("square plus interior grid") {
        std::vector<Point> pts;
        for (int y = 0; y <= 4; ++y)
            for (int x = 0; x <= 4; ++x)
                pts.push_back({static_cast<double>(x), static_cast<double>(y)});
        const HullPolygon hull = gift_wrapping(pts);
        CHECK(hull.vertices.size() == 4);
    }
    CHECK_THROWS(gift_wrapping(std::vector<Point>{}));
}

TEST_CASE("quickhull equals gift_wrapping on random sets") {
    for (unsigned seed = 0; seed < 60; ++seed) {
        const auto pts = random_points(seed);
        const auto a = canonical(quickhull(pts));
        const auto b = canonical(gift_wrapping(pts));
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("hull contains all input points") {
    for (unsigned seed = 100; seed < 110; ++seed) {
        const auto pts = random_points(seed);
        const HullPolygon hull = quickhull(pts);
        if (hull.vertices.size() < 3) continue;
        for (const Point& p : pts) {
            for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
                const Point& a = hull.vertices[i];
                const Point& b = hull.vertices[(i + 1) % hull.vertices.size()];
                CHECK(cross(a, b, p) >= -1e-9);
            }
        }
    }
}

TEST_CASE("rasterize_polygon") {
    SUBCASE("axis-aligned rectangle") {
        const HullPolygon rect{{{1, 1}, {8, 1}, {8, 8}, {1, 8}}};
        const BinaryMask mask = rasterize_polygon(rect, 12, 12);
        CHECK(mask.count() == 64);
        for (int n = 1; n <= 8; ++n)
            for (int m = 1; m <= 8; ++m) CHECK(mask(m, n) == 1);
    }
    SUBCASE("triangle equals per-pixel half-plane oracle") {
        const HullPolygon tri{{{0, 0}, {8, 0}, {0, 8}}};
        const BinaryMask mask = rasterize_polygon(tri, 12, 12);
        for (int n = 0; n < 12; ++n)
            for (int m = 0; m < 12; ++m)
                CHECK(static_cast<bool>(mask(m, n)) ==
                      oracles::point_in_polygon(tri, m, n));
    }
    SUBCASE("hull raster contains generating mask") {
        for (unsigned seed = 0; seed < 8; ++seed) {
            auto mask = oracles::random_mask(20, 20, seed, 0.2);
            if (mask.count() == 0) mask(7, 9) = 1;
            const BinaryMask hull = hull_mask(mask);
            for (int n = 0; n < 20; ++n)
                for (int m = 0; m < 20; ++m)
                    if (mask(m, n)) CHECK(hull(m, n) == 1);
        }
    }
    SUBCASE("orientation independence") {
        HullPolygon tri{{{1.5, 0.5}, {9, 2}, {4, 8.5}}};
        HullPolygon rev = tri;
        std::reverse(rev.vertices.begin(), rev.vertices.end());
        CHECK(rasterize_polygon(tri, 12, 12) == rasterize_polygon(rev, 12, 12));
    }
    SUBCASE("degenerate polygons") {
        const BinaryMask single = rasterize_polygon(HullPolygon{{{3, 4}}}, 8, 8);
        CHECK(single.count() == 1);
        CHECK(single(3, 4) == 1);
        const BinaryMask seg =
            rasterize_polygon(HullPolygon{{{1, 1}, {5, 1}}}, 8, 8);
        CHECK(seg.count() == 5);
        for (int m = 1; m <= 5; ++m) CHECK(seg(m, 1) == 1);
    }
}

TEST_CASE("hull_mask") {
    SUBCASE("convex disk nearly fixed") {
        const auto mask = shapes::disk(48, 14.0);
        const BinaryMask hull = hull_mask(mask);
        const ScalarField inner = lshull::signed_distance(mask);
        // symmetric difference confined to a 1-pixel boundary band
        for (int n = 0; n < 48; ++n)
            for (int m = 0; m < 48; ++m)
                if (mask(m, n) != hull(m, n))
                    CHECK(std::abs(std::hypot(m - 24.0, n - 24.0) - 14.0) <= 1.5);
    }
    SUBCASE("star hull is strictly larger") {
        const auto mask = shapes::star(64, 24.0, 10.0);
        CHECK(hull_mask(mask).count() > mask.count());
    }
    SUBCASE("idempotent within the discretization band") {
        const auto mask = shapes::star(64, 24.0, 10.0);
        const BinaryMask h1 = hull_mask(mask);
        const BinaryMask h2 = hull_mask(h1);
        const ScalarField d = lshull::signed_distance(h1);
        for (int n = 0; n < 64; ++n)
            for (int m = 0; m < 64; ++m)
                if (h1(m, n) != h2(m, n)) CHECK(std::abs(d(m, n)) <= 1.5);
    }
    CHECK_THROWS(hull_mask(BinaryMask(8, 8)));
}

TEST_CASE("hull area is minimal among containing hulls") {
    for (unsigned seed = 200; seed < 205; ++seed) {
        const auto pts = random_points(seed);
        const double qa = std::abs(polygon_area(quickhull(pts)));
        const double ga = std::abs(polygon_area(gift_wrapping(pts)));
        CHECK(qa == doctest::Approx(ga).epsilon(1e-12));
    }
}
