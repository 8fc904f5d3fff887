#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "dreem/error.hpp"
#include "dreem/geometry.hpp"
#include "support.hpp"

using namespace dreem;
using dreem::testing::polar;
using dreem::testing::region_by_signs;
using dreem::testing::touching_regions;

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform point in the radius-50 disk by rejection from the bounding square.
Point uniform_in_disk(Rng& rng, double radius = kFieldRadius) {
    for (;;) {
        const Point p{(2.0 * rng.uniform() - 1.0) * radius, (2.0 * rng.uniform() - 1.0) * radius};
        if (p.x * p.x + p.y * p.y <= radius * radius) {
            return p;
        }
    }
}

} // namespace

TEST_CASE("region specs tile the field") {
    const auto& regions = all_regions();
    CHECK(regions[0].r_inner == 0.0);
    CHECK(regions[0].r_outer == 20.0);
    CHECK(regions[0].theta_end - regions[0].theta_start == doctest::Approx(2 * kPi));
    double total = 0.0;
    for (const auto& spec : regions) {
        if (spec.id >= 2) {
            CHECK(spec.theta_end - spec.theta_start == doctest::Approx(kPi / 2));
        }
        if (is_middle_region(spec.id)) {
            CHECK(spec.r_inner == 20.0);
            CHECK(spec.r_outer == 35.0);
        } else if (is_outer_region(spec.id)) {
            CHECK(spec.r_inner == 35.0);
            CHECK(spec.r_outer == 50.0);
        }
        total += spec.area();
    }
    CHECK(total == doctest::Approx(kPi * 2500.0));
    CHECK(region_spec(1).area() == doctest::Approx(1256.6370614359172));
    CHECK(region_spec(3).area() == doctest::Approx(647.9535848841759));
    CHECK(region_spec(8).area() == doctest::Approx(1001.3826583317367));
    CHECK_THROWS_AS(region_spec(0), InvalidRegion);
    CHECK_THROWS_AS(region_spec(10), InvalidRegion);
}

TEST_CASE("region_of examples") {
    CHECK(region_of({0.0, 0.0}) == 1);
    CHECK_THROWS_AS(region_of({60.0, 0.0}), OutsideField);
    // r = 40 in the outer ring, angle pi/2 opens the second quadrant.
    CHECK(region_by_signs({0.0, 40.0}) == 7);
    CHECK(region_of({0.0, 40.0}) == 7);
}

TEST_CASE("region_of boundary assignment") {
    CHECK(region_of({20.0, 0.0}) == 1);
    CHECK(region_of({20.000001, 0.0}) == 2);
    CHECK(region_of({35.0, 0.0}) == 2);
    CHECK(region_of({35.000001, 0.0}) == 6);
    CHECK(region_of({50.0, 0.0}) == 6);
    CHECK_THROWS_AS(region_of({50.000001, 0.0}), OutsideField);
    CHECK(region_of({-30.0, 0.0}) == 4);   // angle pi opens the third quadrant
    CHECK(region_of({0.0, -30.0}) == 5);   // angle 3pi/2 opens the fourth
    CHECK(region_of({30.0, -1e-12}) == 5); // just below 2pi
    CHECK(region_of({-40.0, -1.0}) == 8);
}

TEST_CASE("region_of agrees with sign-based oracle and spec bounds on 1e6 points") {
    Rng rng(20240501);
    int mismatches = 0;
    int contain_mismatches = 0;
    for (int i = 0; i < 1'000'000; ++i) {
        const Point p = uniform_in_disk(rng);
        const int id = region_of(p);
        mismatches += id != region_by_signs(p);
        int owners = 0;
        for (const auto& spec : all_regions()) {
            owners += spec.contains(p) ? 1 : 0;
        }
        contain_mismatches += (owners != 1 || !region_spec(id).contains(p));
    }
    CHECK(mismatches == 0);
    CHECK(contain_mismatches == 0);
}

TEST_CASE("region counts match sector areas within 3 sigma") {
    Rng rng(99);
    constexpr int n = 200'000;
    std::array<int, 10> counts{};
    for (int i = 0; i < n; ++i) {
        ++counts[static_cast<std::size_t>(region_of(uniform_in_disk(rng)))];
    }
    const double disk = kPi * 2500.0;
    const double areas[10] = {0, kPi * 400, kPi * 825 / 4, kPi * 825 / 4, kPi * 825 / 4, kPi * 825 / 4,
                              kPi * 1275 / 4, kPi * 1275 / 4, kPi * 1275 / 4, kPi * 1275 / 4};
    for (int id = 1; id <= 9; ++id) {
        const double p = areas[id] / disk;
        const double expected = n * p;
        const double sigma = std::sqrt(n * p * (1 - p));
        CHECK(std::abs(counts[static_cast<std::size_t>(id)] - expected) <= 3 * sigma);
    }
}

TEST_CASE("distance") {
    CHECK(distance({0, 0}, {3, 4}) == 5.0);
    CHECK(distance({7.5, -2.25}, {7.5, -2.25}) == 0.0);
    CHECK(distance({0, 0}, {50, 0}) == 50.0);
    CHECK(distance({1, 2}, {-4, 9}) == distance({-4, 9}, {1, 2}));
}

TEST_CASE("polar_point_in_region maps the unit square onto the sector") {
    const auto& r6 = region_spec(6);
    const Point corner = polar_point_in_region(r6, 0.0, 0.0);
    CHECK(corner.x == doctest::Approx(35.0));
    CHECK(corner.y == doctest::Approx(0.0));
    const Point mid = polar_point_in_region(region_spec(3), 0.5, 0.5);
    CHECK(std::hypot(mid.x, mid.y) == doctest::Approx(std::sqrt(400.0 + 0.5 * 825.0)));
    CHECK(std::atan2(mid.y, mid.x) == doctest::Approx(0.75 * kPi));
}

TEST_CASE("sample_in_region") {
    SUBCASE("mean radius of region 1 matches analytic and rejection oracle") {
        Rng rng(5);
        Rng oracle_rng(6);
        double sum = 0.0;
        double oracle_sum = 0.0;
        constexpr int n = 10'000;
        for (int i = 0; i < n; ++i) {
            const Point p = sample_in_region(region_spec(1), rng);
            sum += std::hypot(p.x, p.y);
            const Point q = uniform_in_disk(oracle_rng, 20.0);
            oracle_sum += std::hypot(q.x, q.y);
        }
        const double analytic = 2.0 / 3.0 * 20.0;
        CHECK(std::abs(sum / n - analytic) <= 0.3);
        CHECK(std::abs(oracle_sum / n - analytic) <= 0.3);
    }
    SUBCASE("samples stay inside their region") {
        Rng rng(11);
        for (int id = 1; id <= 9; ++id) {
            int outside = 0;
            for (int i = 0; i < 10'000; ++i) {
                outside += region_of(sample_in_region(region_spec(id), rng)) != id;
            }
            CHECK(outside == 0);
        }
    }
    SUBCASE("deterministic for a fixed seed") {
        Rng a(42);
        Rng b(42);
        for (int i = 0; i < 100; ++i) {
            const int id = 1 + i % 9;
            CHECK(sample_in_region(region_spec(id), a) == sample_in_region(region_spec(id), b));
        }
    }
}

TEST_CASE("nearby_regions") {
    auto as_set = [](const std::array<RegionId, 6>& a) { return std::set<int>(a.begin(), a.end()); };
    CHECK(as_set(nearby_regions(6)) == std::set<int>{2, 3, 5, 6, 7, 9});
    CHECK(nearby_regions(7) == std::array<RegionId, 6>{3, 2, 4, 7, 6, 8});
    CHECK(nearby_regions(9) == std::array<RegionId, 6>{5, 4, 2, 9, 8, 6});
    for (int k = 6; k <= 9; ++k) {
        const auto set = as_set(nearby_regions(k));
        CHECK(set.size() == 6);
        CHECK(set == touching_regions(k));
        CHECK(set.count(k) == 1);
        CHECK(set.count(relay_target(k)) == 1);
    }
    CHECK_THROWS_AS(nearby_regions(5), InvalidRegion);
    CHECK_THROWS_AS(nearby_regions(10), InvalidRegion);
}

TEST_CASE("relay_target") {
    CHECK(relay_target(6) == 2);
    CHECK(relay_target(7) == 3);
    CHECK(relay_target(8) == 4);
    CHECK(relay_target(9) == 5);
    CHECK_THROWS_AS(relay_target(1), InvalidRegion);
    CHECK_THROWS_AS(relay_target(2), InvalidRegion);
}
