#include "esq/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "esq/predicates.hpp"

namespace esq {

double eps_geom() {
  static const double value = [] {
    if (const char* env = std::getenv("ESQ_EPS")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-9;
  }();
  return value;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CollinearInput: return "CollinearInput";
    case ErrorKind::IdenticalCircles: return "IdenticalCircles";
    case ErrorKind::OutsidePolygon: return "OutsidePolygon";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::PlacementFailed: return "PlacementFailed";
    case ErrorKind::OutsideRegion: return "OutsideRegion";
  }
  return "Unknown";
}

Point2 closest_point_on_segment(Point2 p, const Segment& s) {
  Point2 d = s.b - s.a;
  double len2 = dot(d, d);
  if (len2 == 0.0) return s.a;
  double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return s.a + t * d;
}

double point_segment_distance(Point2 p, const Segment& s) {
  return dist(p, closest_point_on_segment(p, s));
}

namespace {

bool on_segment(Point2 p, const Segment& s) {
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

bool segments_touch(const Segment& s, const Segment& t) {
  int o1 = orient2d(s.a, s.b, t.a);
  int o2 = orient2d(s.a, s.b, t.b);
  int o3 = orient2d(t.a, t.b, s.a);
  int o4 = orient2d(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(t.a, s)) return true;
  if (o2 == 0 && on_segment(t.b, s)) return true;
  if (o3 == 0 && on_segment(s.a, t)) return true;
  if (o4 == 0 && on_segment(s.b, t)) return true;
  return false;
}

double ring_area(const std::vector<Point2>& ring) {
  double a = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    a += cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * a;
}

bool strictly_convex_ring(const std::vector<Point2>& ring) {
  const std::size_t n = ring.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Point2 a = ring[(i + n - 1) % n], b = ring[i], c = ring[(i + 1) % n];
    if (orient2d(a, b, c) <= 0) return false;
    turning += std::atan2(cross(b - a, c - b), dot(b - a, c - b));
  }
  return std::fabs(turning - 2.0 * M_PI) < 1e-6;
}

}  // namespace

Polygon Polygon::from_ring(std::vector<Point2> ring) {
  const double eps = eps_geom();
  if (ring.size() < 3) {
    throw GeometryError(ErrorKind::DegenerateInput, "polygon needs at least 3 vertices");
  }
  for (const auto& p : ring) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw GeometryError(ErrorKind::DegenerateInput, "non-finite coordinate");
    }
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (dist(ring[i], ring[(i + 1) % ring.size()]) <= eps) {
      throw GeometryError(ErrorKind::DegenerateInput,
                          "consecutive vertices " + std::to_string(i) + " coincide");
    }
  }
  double area = ring_area(ring);
  if (std::fabs(area) <= eps) {
    throw GeometryError(ErrorKind::DegenerateInput, "polygon has zero area");
  }
  if (area < 0.0) std::reverse(ring.begin(), ring.end());

  if (!strictly_convex_ring(ring)) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      Segment si{ring[i], ring[(i + 1) % n]};
      // Adjacent edges may only share their common vertex.
      Segment sn{ring[(i + 1) % n], ring[(i + 2) % n]};
      if (orient2d(si.a, si.b, sn.b) == 0 && dot(si.b - si.a, sn.b - sn.a) < 0.0) {
        throw GeometryError(ErrorKind::NotSimple, "edge " + std::to_string(i) + " folds back");
      }
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        Segment sj{ring[j], ring[(j + 1) % n]};
        if (segments_touch(si, sj)) {
          throw GeometryError(ErrorKind::NotSimple, "edges " + std::to_string(i) + " and " +
                                                        std::to_string(j) + " intersect");
        }
      }
    }
  }
  Polygon poly;
  poly.vertices_ = std::move(ring);
  return poly;
}

double Polygon::signed_area() const { return ring_area(vertices_); }

bool Polygon::is_convex() const { return strictly_convex_ring(vertices_); }

bool Polygon::is_reflex(std::size_t i) const {
  const std::size_t n = size();
  return orient2d(vertex(i + n - 1), vertex(i), vertex(i + 1)) < 0;
}

AxisRect Polygon::bounding_box() const { return esq::bounding_box(vertices_); }

AxisRect bounding_box(std::span<const Point2> points) {
  AxisRect r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& p : points) {
    r.xmin = std::min(r.xmin, p.x);
    r.xmax = std::max(r.xmax, p.x);
    r.ymin = std::min(r.ymin, p.y);
    r.ymax = std::max(r.ymax, p.y);
  }
  return r;
}

Point2 inward_normal(const Polygon& poly, std::size_t i) {
  Segment e = poly.edge(i);
  Point2 d = e.b - e.a;
  return (1.0 / norm(d)) * perp(d);
}

bool circle_contains(const Circle& c, Point2 p) {
  return dist(c.center, p) <= c.radius + eps_geom();
}

Circle circumcircle(Point2 a, Point2 b, Point2 c) {
  Point2 ab = b - a, ac = c - a;
  double d = 2.0 * cross(ab, ac);
  if (std::fabs(d) < eps_geom()) {
    throw GeometryError(ErrorKind::CollinearInput, "circumcircle of collinear points");
  }
  double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
  Point2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  return {a + off, norm(off)};
}

std::vector<Point2> circle_circle_intersections(const Circle& c1, const Circle& c2) {
  const double eps = eps_geom();
  Point2 delta = c2.center - c1.center;
  double d = norm(delta);
  if (d <= eps && std::fabs(c1.radius - c2.radius) <= eps) {
    throw GeometryError(ErrorKind::IdenticalCircles, "circles coincide");
  }
  double rsum = c1.radius + c2.radius;
  double rdiff = std::fabs(c1.radius - c2.radius);
  if (d > rsum + eps || d < rdiff - eps || d <= eps) return {};
  Point2 u = (1.0 / d) * delta;
  if (std::fabs(d - rsum) <= eps) return {c1.center + c1.radius * u};
  if (std::fabs(d - rdiff) <= eps) {
    return {c1.radius >= c2.radius ? c1.center + c1.radius * u : c1.center - c1.radius * u};
  }
  double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
  double h = std::sqrt(std::max(0.0, c1.radius * c1.radius - a * a));
  Point2 m = c1.center + a * u;
  return {m + h * perp(u), m - h * perp(u)};
}

Location point_in_polygon(const Polygon& poly, Point2 p) {
  const double eps = eps_geom();
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (point_segment_distance(p, {v[j], v[i]}) <= eps) return Location::OnBoundary;
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      double x = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside ? Location::Inside : Location::Outside;
}

EdgeBands::EdgeBands(const Polygon& poly) : v_(poly.vertices()), eps_(eps_geom()) {
  const AxisRect box = poly.bounding_box();
  const std::size_t n = v_.size();
  y0_ = box.ymin - eps_;
  h_ = std::max((box.ymax - box.ymin + 2 * eps_) / double(std::max<std::size_t>(n, 1)), 1e-300);
  bands_.resize(std::max<std::size_t>(n, 1));
  auto band = [&](double y) {
    return std::size_t(std::clamp((y - y0_) / h_, 0.0, double(bands_.size() - 1)));
  };
  for (std::size_t j = 0; j < n; ++j) {
    const Point2 a = v_[j], b = v_[(j + 1) % n];
    for (std::size_t k = band(std::min(a.y, b.y) - eps_); k <= band(std::max(a.y, b.y) + eps_); ++k) {
      bands_[k].push_back(std::uint32_t(j));
    }
  }
}

Location EdgeBands::locate(Point2 p) const {
  const double k = (p.y - y0_) / h_;
  if (!(k >= 0.0 && k < double(bands_.size()))) return Location::Outside;
  const std::size_t n = v_.size();
  bool inside = false;
  for (std::uint32_t j : bands_[std::size_t(k)]) {
    const Point2 a = v_[(j + 1) % n], b = v_[j];
    if (point_segment_distance(p, {b, a}) <= eps_) return Location::OnBoundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      double x = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside ? Location::Inside : Location::Outside;
}

double boundary_distance(const Polygon& poly, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, point_segment_distance(p, poly.edge(i)));
  }
  return best;
}

double clearance(const Polygon& poly, Point2 p) {
  if (point_in_polygon(poly, p) != Location::Inside) {
    throw GeometryError(ErrorKind::OutsidePolygon, "clearance needs an interior point");
  }
  return boundary_distance(poly, p);
}

Polygon convex_hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) {
    throw GeometryError(ErrorKind::DegenerateInput, "convex hull needs 3 distinct points");
  }
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {
    throw GeometryError(ErrorKind::DegenerateInput, "points are collinear");
  }
  return Polygon::from_ring(std::move(hull));
}

}  // namespace esq
