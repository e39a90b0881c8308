#pragma once

// Planar primitives shared by every index and oracle.
//
// All tolerances derive from eps_geom(), an absolute tolerance tuned for
// inputs whose bounding box has diameter <= 1000. Disks are closed: a point
// at distance radius + eps_geom() from the center still counts as contained.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace esq {

/// Absolute geometric tolerance (default 1e-9). ESQ_EPS overrides it; the
/// variable is read once per process.
double eps_geom();

enum class ErrorKind {
  CollinearInput,
  IdenticalCircles,
  OutsidePolygon,
  DegenerateInput,
  NotConvex,
  NotSimple,
  PreconditionViolated,
  PlacementFailed,
  OutsideRegion,
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 lerp(Point2 a, Point2 b, double t) { return a + t * (b - a); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

struct Circle {
  Point2 center;
  double radius = 0.0;

  double area() const { return M_PI * radius * radius; }
};

/// Axis-parallel rectangle with xmin < xmax and ymin < ymax.
struct AxisRect {
  double xmin = 0.0;
  double xmax = 0.0;
  double ymin = 0.0;
  double ymax = 0.0;

  double area() const { return (xmax - xmin) * (ymax - ymin); }
  bool contains(Point2 p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  bool strictly_contains(Point2 p) const {
    return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
  }
  friend bool operator==(const AxisRect&, const AxisRect&) = default;
};

struct Segment {
  Point2 a;
  Point2 b;
};

double point_segment_distance(Point2 p, const Segment& s);
Point2 closest_point_on_segment(Point2 p, const Segment& s);

/// Counterclockwise simple polygon. Construct through Polygon::from_ring,
/// which validates the ring and reorients clockwise input.
class Polygon {
 public:
  Polygon() = default;

  /// Throws DegenerateInput (< 3 vertices, repeated consecutive vertices,
  /// zero area) or NotSimple (non-adjacent edges touch).
  static Polygon from_ring(std::vector<Point2> ring);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Segment edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }
  double signed_area() const;
  bool is_convex() const;
  /// Interior angle at vertex i exceeds pi.
  bool is_reflex(std::size_t i) const;
  AxisRect bounding_box() const;

 private:
  std::vector<Point2> vertices_;
};

enum class Location { Inside, OnBoundary, Outside };

struct QueryAnswer {
  enum class Kind { BoundedCircle, UnboundedCircle, Rectangle, Null };

  Kind kind = Kind::Null;
  std::optional<Circle> circle;
  std::optional<AxisRect> rect;
  /// Identifier of the structure element that produced the answer
  /// (circle id, axis arc, Voronoi edge or MER index), when meaningful.
  std::optional<long> witness;

  static QueryAnswer null() { return {}; }
  static QueryAnswer unbounded() { return {Kind::UnboundedCircle, {}, {}, {}}; }
  static QueryAnswer bounded(Circle c, std::optional<long> witness = {}) {
    return {Kind::BoundedCircle, c, {}, witness};
  }
  static QueryAnswer rectangle(AxisRect r, std::optional<long> witness = {}) {
    return {Kind::Rectangle, {}, r, witness};
  }
};

bool circle_contains(const Circle& c, Point2 p);

/// Throws CollinearInput when the three points are collinear within eps_geom().
Circle circumcircle(Point2 a, Point2 b, Point2 c);

/// Transversal intersections (two points) or a single tangency point.
/// Throws IdenticalCircles for coincident circles.
std::vector<Point2> circle_circle_intersections(const Circle& c1, const Circle& c2);

Location point_in_polygon(const Polygon& poly, Point2 p);

/// point_in_polygon over horizontal bands of edges: same answers as the full
/// scan, but a query only visits edges whose height range meets its band.
class EdgeBands {
 public:
  explicit EdgeBands(const Polygon& poly);
  Location locate(Point2 p) const;

 private:
  std::vector<Point2> v_;
  double y0_ = 0.0;
  double h_ = 1.0;
  double eps_ = 0.0;
  std::vector<std::vector<std::uint32_t>> bands_;  // edge j runs v_[j] -> v_[j+1]
};

/// Distance from a strictly interior point to the boundary; the radius of the
/// largest empty circle centered at p. Throws OutsidePolygon otherwise.
double clearance(const Polygon& poly, Point2 p);

/// Distance to the boundary with no inside test.
double boundary_distance(const Polygon& poly, Point2 p);

/// Counterclockwise hull without collinear boundary points. Throws
/// DegenerateInput when fewer than three non-collinear points remain.
Polygon convex_hull(std::span<const Point2> points);

/// Unit normal pointing into the polygon for edge i of a ccw ring.
Point2 inward_normal(const Polygon& poly, std::size_t i);

AxisRect bounding_box(std::span<const Point2> points);

}  // namespace esq
