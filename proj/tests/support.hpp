#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code under test except to build inputs.

#include <cmath>
#include <set>
#include <vector>

#include "dreem/network.hpp"

namespace dreem::testing {

struct NodeSpec {
    Point position;
    double energy = 0.5;
};

/// Deployment from explicit positions and energies; ids follow input order.
inline Deployment make_deployment(const std::vector<NodeSpec>& specs, int nodes_per_region = 0) {
    std::vector<NodeState> nodes;
    for (const auto& spec : specs) {
        NodeState n;
        n.id = static_cast<NodeId>(nodes.size());
        n.position = spec.position;
        n.region = region_of(spec.position);
        n.energy = spec.energy;
        n.alive = spec.energy > 0.0;
        nodes.push_back(n);
    }
    return Deployment(std::move(nodes), nodes_per_region);
}

inline Point polar(double r, double theta) { return Point{r * std::cos(theta), r * std::sin(theta)}; }

/// Region by explicit sign tests on the coordinates, without trigonometry.
/// Quadrant q covers [q*pi/2, (q+1)*pi/2).
inline int region_by_signs(Point p) {
    const double r2 = p.x * p.x + p.y * p.y;
    if (r2 <= 400.0) {
        return 1;
    }
    int q;
    if (p.x > 0.0 && p.y >= 0.0) {
        q = 0;
    } else if (p.x <= 0.0 && p.y > 0.0) {
        q = 1;
    } else if (p.x < 0.0 && p.y <= 0.0) {
        q = 2;
    } else {
        q = 3;
    }
    return r2 <= 35.0 * 35.0 ? 2 + q : 6 + q;
}

/// Regions whose closed sectors share at least one point with region `id`'s
/// closed sector, found by scanning a polar grid that includes every sector
/// boundary radius and angle.
inline std::set<int> touching_regions(int id) {
    struct Sector {
        double r0, r1;
        int quadrant;  // -1 for the full inner disk
    };
    auto sector = [](int k) {
        if (k == 1) {
            return Sector{0.0, 20.0, -1};
        }
        if (k <= 5) {
            return Sector{20.0, 35.0, k - 2};
        }
        return Sector{35.0, 50.0, k - 6};
    };
    auto in_closure = [&](const Sector& s, double r, int step, int steps_per_quadrant) {
        if (r < s.r0 || r > s.r1) {
            return false;
        }
        if (s.quadrant < 0) {
            return true;
        }
        const int lo = s.quadrant * steps_per_quadrant;
        const int hi = lo + steps_per_quadrant;
        const int total = 4 * steps_per_quadrant;
        const int a = step % total;
        return (a >= lo && a <= hi) || (hi == total && a == 0);
    };
    const int steps = 90;
    std::vector<double> radii;
    for (int i = 0; i <= 500; ++i) {
        radii.push_back(i * 0.1);
    }
    radii.push_back(20.0);
    radii.push_back(35.0);
    std::set<int> out;
    const Sector self = sector(id);
    for (int other = 1; other <= 9; ++other) {
        const Sector s = sector(other);
        bool touch = false;
        for (double r : radii) {
            for (int a = 0; a < 4 * steps && !touch; ++a) {
                touch = in_closure(self, r, a, steps) && in_closure(s, r, a, steps);
            }
            if (touch) {
                break;
            }
        }
        if (touch) {
            out.insert(other);
        }
    }
    return out;
}

/// Closed-form CDF of Student's t with 4 degrees of freedom.
inline double student_t4_cdf(double t) {
    const double u = t / std::sqrt(4.0 + t * t);
    return 0.5 + 0.5 * u * (1.0 + 0.5 * (1.0 - u * u));
}

/// Quantile of Student's t with 4 degrees of freedom by bisection.
inline double student_t4_quantile(double p) {
    double lo = 0.0;
    double hi = 100.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (student_t4_cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace dreem::testing
