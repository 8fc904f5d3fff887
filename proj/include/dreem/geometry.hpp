#pragma once

#include <array>
#include <numbers>

#include "dreem/rng.hpp"

namespace dreem {

/// Region ids 1..9. Region 1 is the inner disk, 2..5 the middle ring
/// quadrants, 6..9 the outer ring quadrants.
using RegionId = int;

inline constexpr int kRegionCount = 9;
inline constexpr double kInnerRadius = 20.0;
inline constexpr double kMiddleRadius = 35.0;
inline constexpr double kFieldRadius = 50.0;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Base station position.
inline constexpr Point kBaseStation{0.0, 0.0};

/// Annular sector. Radial interval is (r_inner, r_outer] except region 1,
/// which owns [0, r_outer]; the angular interval is [theta_start, theta_end).
struct RegionSpec {
    RegionId id = 1;
    double r_inner = 0.0;
    double r_outer = kInnerRadius;
    double theta_start = 0.0;
    double theta_end = 2.0 * std::numbers::pi;

    double area() const;
    /// Direct bounds check against this spec's half-open intervals.
    bool contains(Point p) const;
};

/// Spec for region `id`; throws InvalidRegion outside 1..9.
const RegionSpec& region_spec(RegionId id);
const std::array<RegionSpec, kRegionCount>& all_regions();

bool is_middle_region(RegionId id);
bool is_outer_region(RegionId id);

/// Region containing `p`; throws OutsideField when |p| > 50.
RegionId region_of(Point p);

double distance(Point a, Point b);

/// Maps unit-square coordinates (u, v) to an area-uniform point of `region`.
Point polar_point_in_region(const RegionSpec& region, double u, double v);

/// Area-uniform random point inside `region`.
///
/// Draws (u, v) from `rng` and maps them through polar_point_in_region. A
/// draw whose floating-point image lands on a neighbouring region's boundary
/// is redrawn, so region_of() of the result is always `region.id`.
Point sample_in_region(const RegionSpec& region, Rng& rng);

/// The six regions an outer-ring node may associate with: the radially
/// aligned middle region and its two neighbours, then the outer region itself
/// and its two neighbours. Throws InvalidRegion unless 6 <= outer_region <= 9.
std::array<RegionId, 6> nearby_regions(RegionId outer_region);

/// Middle region that relays for `outer_region` (6->2, 7->3, 8->4, 9->5).
RegionId relay_target(RegionId outer_region);

} // namespace dreem
