#pragma once

// Random and constructed instances for tests, the self-test harness and the
// benchmarks. All take an explicit engine so runs are reproducible.

#include <random>
#include <vector>

#include "esq/geometry.hpp"

namespace esq::gen {

/// n points on a random ellipse, as their convex hull.
Polygon random_convex(std::mt19937_64& rng, int n);
/// Star-shaped polygon with n vertices at jittered angles and random radii.
Polygon random_star(std::mt19937_64& rng, int n);
/// n uniform points in the unit square.
std::vector<Point2> random_points(std::mt19937_64& rng, int n);
/// n uniform points strictly inside `region`, with distinct coordinates.
std::vector<Point2> random_points_in(std::mt19937_64& rng, int n, const AxisRect& region);

/// n circles with centers in [0,10]^2 and radii in [0.3, 3].
std::vector<Circle> random_circles(std::mt19937_64& rng, int n);

/// Two rooms joined by a corridor pinched at x = 2.5.
Polygon dumbbell();
/// Five lobes around a small pentagonal core, each behind a narrow neck.
Polygon five_lobes();
/// k rooms in a row joined by corridors; vertices jittered so clearances differ.
Polygon chain_of_rooms(std::mt19937_64& rng, int k);

/// Constructed instances with several mountains.
std::vector<Polygon> multi_mountain_instances();

}  // namespace esq::gen
