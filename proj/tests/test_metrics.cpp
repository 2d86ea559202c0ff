#include "doctest.h"

#include <cmath>

#include "lshull/hull.hpp"
#include "lshull/metrics.hpp"
#include "support/oracles.hpp"
#include "support/shapes.hpp"

using namespace lshull;

TEST_CASE("hausdorff basics") {
    SUBCASE("identical masks") {
        const auto mask = shapes::disk(24, 7.0);
        CHECK(hausdorff(mask, mask) == 0.0);
    }
    SUBCASE("3-4-5 singletons") {
        BinaryMask a(8, 8), b(8, 8);
        a(0, 0) = 1;
        b(3, 4) = 1;
        CHECK(hausdorff(a, b) == 5.0);
    }
    SUBCASE("empty mask throws") {
        CHECK_THROWS(hausdorff(BinaryMask(4, 4), shapes::disk(4, 1.0)));
    }
}

TEST_CASE("hausdorff equals brute force") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        auto a = oracles::random_mask(24, 24, seed, 0.1);
        auto b = oracles::random_mask(24, 24, seed + 50, 0.1);
        if (a.count() == 0) a(1, 1) = 1;
        if (b.count() == 0) b(2, 2) = 1;
        CHECK(hausdorff(a, b) == oracles::brute_hausdorff(a, b));
    }
}

TEST_CASE("hausdorff metric properties") {
    const auto a = oracles::random_mask(16, 16, 1, 0.2);
    const auto b = oracles::random_mask(16, 16, 2, 0.2);
    const auto c = oracles::random_mask(16, 16, 3, 0.2);
    REQUIRE(a.count() > 0);
    REQUIRE(b.count() > 0);
    REQUIRE(c.count() > 0);

    CHECK(hausdorff(a, b) == hausdorff(b, a));
    CHECK(hausdorff(a, b) >= 0.0);
    CHECK(hausdorff(a, a) == 0.0);
    CHECK(hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c) + 1e-12);
}

TEST_CASE("relative_error") {
    SUBCASE("identical hulls") {
        const auto mask = shapes::disk(64, 18.0);
        CHECK(relative_error(mask, mask) == 0.0);
    }
    SUBCASE("one-sided dilation by r/10") {
        const int size = 96;
        const double r = 20.0;
        const auto c1 = shapes::disk(size, r);
        // c2 = c1 union (c1 shifted by r/10 in +x)
        BinaryMask c2 = c1;
        for (int n = 0; n < size; ++n)
            for (int m = 2; m < size; ++m)
                if (c1(m - 2, n)) c2(m, n) = 1;
        CHECK(relative_error(c1, c2) == doctest::Approx(0.05).epsilon(0.2));
        CHECK(std::abs(relative_error(c1, c2) - 0.05) <= 0.01);
    }
    SUBCASE("scale invariance within pixelation tolerance") {
        const auto small_c1 = shapes::disk(64, 10.0);
        BinaryMask small_c2 = small_c1;
        for (int n = 0; n < 64; ++n)
            for (int m = 1; m < 64; ++m)
                if (small_c1(m - 1, n)) small_c2(m, n) = 1;
        const auto big_c1 = shapes::disk(128, 20.0);
        BinaryMask big_c2 = big_c1;
        for (int n = 0; n < 128; ++n)
            for (int m = 2; m < 128; ++m)
                if (big_c1(m - 2, n)) big_c2(m, n) = 1;
        CHECK(std::abs(relative_error(small_c1, small_c2) -
                       relative_error(big_c1, big_c2)) <= 0.01);
    }
    SUBCASE("translation invariance") {
        const auto a = shapes::disk(64, 64, 24, 24, 10.0);
        const auto b = shapes::disk(64, 64, 28, 26, 12.0);
        const auto a2 = shapes::disk(64, 64, 34, 34, 10.0);
        const auto b2 = shapes::disk(64, 64, 38, 36, 12.0);
        CHECK(relative_error(a, b) ==
              doctest::Approx(relative_error(a2, b2)).epsilon(1e-12));
    }
}

TEST_CASE("convexity_defect") {
    SUBCASE("filled rectangle is convex") {
        BinaryMask mask(32, 32);
        for (int n = 8; n < 24; ++n)
            for (int m = 5; m < 20; ++m) mask(m, n) = 1;
        CHECK(convexity_defect(mask) == 0.0);
    }
    SUBCASE("plus sign is not convex") {
        const auto mask = shapes::plus_sign(32, 6, 1);
        CHECK(convexity_defect(mask) > 0.0);
    }
    SUBCASE("matches per-pixel recomputation") {
        const auto mask = shapes::star(48, 18.0, 8.0);
        const BinaryMask hull = hull_mask(mask);
        std::size_t diff = 0;
        for (int n = 0; n < 48; ++n)
            for (int m = 0; m < 48; ++m)
                if (mask(m, n) != hull(m, n)) ++diff;
        CHECK(convexity_defect(mask) ==
              doctest::Approx(static_cast<double>(diff) / hull.count())
                  .epsilon(1e-15));
    }
}

TEST_CASE("connected_components") {
    CHECK(connected_components(BinaryMask(10, 10)) == 0);

    BinaryMask two(32, 32);
    for (int n = 0; n < 32; ++n)
        for (int m = 0; m < 32; ++m) {
            if (std::hypot(m - 8.0, n - 8.0) <= 4.0) two(m, n) = 1;
            if (std::hypot(m - 24.0, n - 24.0) <= 4.0) two(m, n) = 1;
        }
    CHECK(connected_components(two) == 2);

    for (unsigned seed = 0; seed < 10; ++seed) {
        const auto mask = oracles::random_mask(24, 24, seed, 0.35);
        CHECK(connected_components(mask) == oracles::flood_fill_components(mask));
    }
}
