#include "dreem/geometry.hpp"

#include <cmath>
#include <string>

#include "dreem/error.hpp"

namespace dreem {
namespace {

constexpr double kQuarter = std::numbers::pi / 2.0;
constexpr double kFullTurn = 2.0 * std::numbers::pi;

std::array<RegionSpec, kRegionCount> build_regions() {
    std::array<RegionSpec, kRegionCount> regions{};
    regions[0] = RegionSpec{1, 0.0, kInnerRadius, 0.0, kFullTurn};
    for (int q = 0; q < 4; ++q) {
        const double start = q * kQuarter;
        const double end = (q + 1) * kQuarter;
        regions[1 + q] = RegionSpec{2 + q, kInnerRadius, kMiddleRadius, start, end};
        regions[5 + q] = RegionSpec{6 + q, kMiddleRadius, kFieldRadius, start, end};
    }
    return regions;
}

// Angle in [0, 2*pi).
double normalized_angle(Point p) {
    double theta = std::atan2(p.y, p.x);
    if (theta < 0.0) {
        theta += kFullTurn;
    }
    if (theta >= kFullTurn) {
        theta = 0.0;
    }
    return theta;
}

int quadrant_of(double theta) {
    const int q = static_cast<int>(std::floor(theta / kQuarter));
    return q > 3 ? 3 : q;
}

void require_outer(RegionId id) {
    if (!is_outer_region(id)) {
        throw InvalidRegion("expected an outer region id in 6..9, got " + std::to_string(id));
    }
}

} // namespace

const std::array<RegionSpec, kRegionCount>& all_regions() {
    static const std::array<RegionSpec, kRegionCount> regions = build_regions();
    return regions;
}

const RegionSpec& region_spec(RegionId id) {
    if (id < 1 || id > kRegionCount) {
        throw InvalidRegion("region id out of range 1..9: " + std::to_string(id));
    }
    return all_regions()[static_cast<std::size_t>(id - 1)];
}

bool is_middle_region(RegionId id) { return id >= 2 && id <= 5; }
bool is_outer_region(RegionId id) { return id >= 6 && id <= 9; }

double RegionSpec::area() const {
    return 0.5 * (theta_end - theta_start) * (r_outer * r_outer - r_inner * r_inner);
}

bool RegionSpec::contains(Point p) const {
    const double r = std::hypot(p.x, p.y);
    const bool radial = r_inner == 0.0 ? r <= r_outer : (r > r_inner && r <= r_outer);
    if (!radial) {
        return false;
    }
    const double theta = normalized_angle(p);
    return theta >= theta_start && theta < theta_end;
}

RegionId region_of(Point p) {
    const double r = std::hypot(p.x, p.y);
    if (!(r <= kFieldRadius)) {
        throw OutsideField("point at radius " + std::to_string(r) + " m is outside the field");
    }
    if (r <= kInnerRadius) {
        return 1;
    }
    const int q = quadrant_of(normalized_angle(p));
    return r <= kMiddleRadius ? 2 + q : 6 + q;
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Point polar_point_in_region(const RegionSpec& region, double u, double v) {
    const double r_in2 = region.r_inner * region.r_inner;
    const double r = std::sqrt(r_in2 + u * (region.r_outer * region.r_outer - r_in2));
    const double theta = region.theta_start + v * (region.theta_end - region.theta_start);
    return Point{r * std::cos(theta), r * std::sin(theta)};
}

Point sample_in_region(const RegionSpec& region, Rng& rng) {
    for (;;) {
        const double u = rng.uniform();
        const double v = rng.uniform();
        const Point p = polar_point_in_region(region, u, v);
        if (region_of(p) == region.id) {
            return p;
        }
    }
}

std::array<RegionId, 6> nearby_regions(RegionId outer_region) {
    require_outer(outer_region);
    auto wrap = [](int id, int lo) { return lo + ((id - lo) % 4 + 4) % 4; };
    const RegionId middle = outer_region - 4;
    return {middle,       wrap(middle - 1, 2),       wrap(middle + 1, 2),
            outer_region, wrap(outer_region - 1, 6), wrap(outer_region + 1, 6)};
}

RegionId relay_target(RegionId outer_region) {
    require_outer(outer_region);
    return outer_region - 4;
}

} // namespace dreem
