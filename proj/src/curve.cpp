#include "esq/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace esq {

ParabolaCurve ParabolaCurve::make(Point2 focus, Point2 line_a, Point2 line_b, double u0,
                                  double u1) {
  ParabolaCurve p;
  p.focus = focus;
  p.origin = line_a;
  Point2 d = line_b - line_a;
  p.dir = (1.0 / norm(d)) * d;
  p.normal = perp(p.dir);
  if (dot(focus - line_a, p.normal) < 0.0) p.normal = -1.0 * p.normal;
  p.uf = dot(focus - line_a, p.dir);
  p.wf = dot(focus - line_a, p.normal);
  p.u0 = u0;
  p.u1 = u1;
  return p;
}

Point2 curve_point(const Curve& c, double t) {
  if (const auto* l = std::get_if<LineCurve>(&c)) return lerp(l->a, l->b, t);
  const auto& p = std::get<ParabolaCurve>(c);
  return p.at_u(p.u_at(t));
}

Point2 curve_start(const Curve& c) { return curve_point(c, 0.0); }
Point2 curve_end(const Curve& c) { return curve_point(c, 1.0); }

Curve reversed(const Curve& c) {
  if (const auto* l = std::get_if<LineCurve>(&c)) return LineCurve{l->b, l->a};
  auto p = std::get<ParabolaCurve>(c);
  std::swap(p.u0, p.u1);
  return p;
}

std::vector<std::pair<double, double>> x_monotone_ranges(const Curve& c) {
  if (std::holds_alternative<LineCurve>(c)) return {{0.0, 1.0}};
  const auto& p = std::get<ParabolaCurve>(c);
  // dx/du = dir.x + normal.x (u - uf) / wf vanishes at one u at most.
  if (std::fabs(p.normal.x) < 1e-300 || p.u0 == p.u1) return {{0.0, 1.0}};
  double u_star = p.uf - p.dir.x * p.wf / p.normal.x;
  double t_star = (u_star - p.u0) / (p.u1 - p.u0);
  if (t_star > 1e-12 && t_star < 1.0 - 1e-12) return {{0.0, t_star}, {t_star, 1.0}};
  return {{0.0, 1.0}};
}

std::vector<Point2> sample_curve(const Curve& c, int segments) {
  std::vector<Point2> pts;
  pts.reserve(segments + 1);
  for (int i = 0; i <= segments; ++i) pts.push_back(curve_point(c, double(i) / segments));
  return pts;
}

double closest_parameter(const Curve& c, Point2 p) {
  if (const auto* l = std::get_if<LineCurve>(&c)) {
    Point2 d = l->b - l->a;
    double len2 = dot(d, d);
    if (len2 == 0.0) return 0.0;
    return std::clamp(dot(p - l->a, d) / len2, 0.0, 1.0);
  }
  constexpr int kSamples = 64;
  double best_t = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSamples; ++i) {
    double t = double(i) / kSamples;
    double d = dist(curve_point(c, t), p);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  double lo = std::max(0.0, best_t - 1.0 / kSamples);
  double hi = std::min(1.0, best_t + 1.0 / kSamples);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    double m1 = hi - g * (hi - lo);
    double m2 = lo + g * (hi - lo);
    if (dist(curve_point(c, m1), p) < dist(curve_point(c, m2), p)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace esq
