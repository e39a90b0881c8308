#include "esq/generators.hpp"

#include <algorithm>
#include <cmath>

namespace esq::gen {

Polygon random_convex(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> ang(0, 2 * M_PI), ax(0.5, 1.0), u(0.1, 0.9);
  // One angle per stratum keeps neighbours apart at large n.
  std::vector<double> th(n);
  for (int i = 0; i < n; ++i) th[i] = 2 * M_PI * (i + u(rng)) / n;
  double a = ax(rng), b = ax(rng), rot = ang(rng);
  std::vector<Point2> ring;
  for (double t : th) {
    double x = a * std::cos(t), y = b * std::sin(t);
    ring.push_back({x * std::cos(rot) - y * std::sin(rot), x * std::sin(rot) + y * std::cos(rot)});
  }
  return convex_hull(ring);
}

Polygon random_star(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> rad(0.3, 1.0), jit(-0.3, 0.3);
  std::vector<Point2> ring;
  for (int i = 0; i < n; ++i) {
    double t = 2 * M_PI * (i + 0.5 + jit(rng)) / n;
    double r = rad(rng);
    ring.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return Polygon::from_ring(ring);
}

std::vector<Point2> random_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
  return pts;
}

std::vector<Point2> random_points_in(std::mt19937_64& rng, int n, const AxisRect& region) {
  std::uniform_real_distribution<double> ux(region.xmin, region.xmax), uy(region.ymin, region.ymax);
  std::vector<Point2> pts;
  while (int(pts.size()) < n) {
    Point2 p{ux(rng), uy(rng)};
    bool clash = !region.strictly_contains(p);
    for (Point2 o : pts) clash = clash || o.x == p.x || o.y == p.y;
    if (!clash) pts.push_back(p);
  }
  return pts;
}

std::vector<Circle> random_circles(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0, 10), r(0.3, 3);
  std::vector<Circle> out;
  for (int i = 0; i < n; ++i) out.push_back({{u(rng), u(rng)}, r(rng)});
  return out;
}

Polygon dumbbell() {
  return Polygon::from_ring({{0, 0},       {2.1, 0.1},  {2.1, 0.7}, {2.5, 0.9},  {3, 0.75},
                             {3.05, -0.1}, {5.3, 0.2},  {5.1, 2.2}, {3, 2.0},    {3, 1.4},
                             {2.5, 1.1},   {2.1, 1.3},  {2.05, 1.85}, {-0.1, 1.95}});
}

Polygon five_lobes() {
  std::vector<Point2> ring;
  auto at = [&](double r, double t) { ring.push_back({r * std::cos(t), r * std::sin(t)}); };
  for (int k = 0; k < 5; ++k) {
    const double th = 2 * M_PI * k / 5, s = 1.0 + 0.037 * k;
    at(0.3 + 0.013 * k, th - 0.45 - 0.011 * k);
    at(0.9 * s, th - 0.6);
    at(1.08 * s, th + 0.02 * k);
    at(0.945 * s, th + 0.6 - 0.007 * k);
    at(0.3 + 0.017 * k, th + 0.45);
  }
  return Polygon::from_ring(ring);
}

Polygon chain_of_rooms(std::mt19937_64& rng, int k) {
  std::uniform_real_distribution<double> jit(-0.04, 0.04);
  std::vector<Point2> bottom, top;
  for (int i = 0; i < k; ++i) {
    const double x0 = 3.0 * i, x1 = x0 + 2.0, h = 2.0 + 0.3 * i;
    if (i > 0) bottom.push_back({x0, 0.8});
    bottom.push_back({x0, 0.0});
    bottom.push_back({x1, 0.0});
    if (i + 1 < k) bottom.push_back({x1, 0.8});
    if (i > 0) top.push_back({x0, 1.2});
    top.push_back({x0, h});
    top.push_back({x1, h});
    if (i + 1 < k) top.push_back({x1, 1.2});
  }
  std::vector<Point2> ring = bottom;
  ring.insert(ring.end(), top.rbegin(), top.rend());
  for (auto& p : ring) p = p + Point2{jit(rng), jit(rng)};
  return Polygon::from_ring(ring);
}

std::vector<Polygon> multi_mountain_instances() {
  std::mt19937_64 rng(7);
  return {dumbbell(), five_lobes(), chain_of_rooms(rng, 2), chain_of_rooms(rng, 3), chain_of_rooms(rng, 4)};
}

}  // namespace esq::gen
