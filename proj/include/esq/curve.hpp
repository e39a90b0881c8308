#pragma once

// Bisector curves that appear in medial axes and segment Voronoi diagrams:
// straight pieces and parabolic arcs (focus = reflex vertex, directrix =
// supporting line of an edge). Both are parametrized on t in [0, 1].

#include <utility>
#include <variant>
#include <vector>

#include "esq/geometry.hpp"

namespace esq {

struct LineCurve {
  Point2 a;
  Point2 b;
};

/// Points equidistant from `focus` and the line through `origin` with unit
/// direction `dir`. In the local frame u = (p - origin).dir,
/// w = (p - origin).normal, the curve is w = ((u - uf)^2 + wf^2) / (2 wf)
/// and w is also the distance to focus and line. The arc spans u in [u0, u1].
struct ParabolaCurve {
  Point2 focus;
  Point2 origin;
  Point2 dir;
  Point2 normal;  // unit, points toward the focus side
  double uf = 0.0;
  double wf = 0.0;
  double u0 = 0.0;
  double u1 = 0.0;

  static ParabolaCurve make(Point2 focus, Point2 line_a, Point2 line_b, double u0, double u1);
  double u_at(double t) const { return u0 + t * (u1 - u0); }
  double height(double u) const { return ((u - uf) * (u - uf) + wf * wf) / (2.0 * wf); }
  Point2 at_u(double u) const { return origin + u * dir + height(u) * normal; }
  /// Local coordinate u of the projection of p onto the directrix.
  double project(Point2 p) const { return dot(p - origin, dir); }
};

using Curve = std::variant<LineCurve, ParabolaCurve>;

Point2 curve_point(const Curve& c, double t);
Point2 curve_start(const Curve& c);
Point2 curve_end(const Curve& c);
Curve reversed(const Curve& c);

/// Parameter sub-ranges on which the curve's x coordinate is monotone.
std::vector<std::pair<double, double>> x_monotone_ranges(const Curve& c);

/// Polyline approximation with `segments` pieces.
std::vector<Point2> sample_curve(const Curve& c, int segments);

/// Closest point of the curve to p, returned as its parameter.
double closest_parameter(const Curve& c, Point2 p);

}  // namespace esq
