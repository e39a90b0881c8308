#include "esq/point_voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "esq/predicates.hpp"

namespace esq {

VoronoiDiagram VoronoiDiagram::build(std::span<const Point2> points) {
  const int n = int(points.size());
  if (n < 3) throw GeometryError(ErrorKind::DegenerateInput, "need at least 3 points");
  VoronoiDiagram vd;
  vd.sites_.assign(points.begin(), points.end());
  const auto& p = vd.sites_;
  int ca = -1, cb = -1;
  double closest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d = dist(p[i], p[j]);
      if (d <= eps_geom()) throw GeometryError(ErrorKind::DegenerateInput, "duplicate points");
      if (d < closest) {
        closest = d;
        ca = i;
        cb = j;
      }
    }
  }
  try {
    vd.hull_ = convex_hull(p);
  } catch (const GeometryError&) {
    throw GeometryError(ErrorKind::DegenerateInput, "points are collinear");
  }

  // Gift-wrapping Delaunay from the closest pair (always a Delaunay edge).
  std::vector<std::array<int, 3>> tris;
  std::set<std::pair<int, int>> done;
  std::deque<std::pair<int, int>> todo{{ca, cb}, {cb, ca}};
  while (!todo.empty()) {
    auto [x, y] = todo.front();
    todo.pop_front();
    if (done.count({x, y})) continue;
    int c = -1;
    for (int d = 0; d < n; ++d) {
      if (orient2d(p[x], p[y], p[d]) <= 0) continue;
      if (c < 0 || incircle(p[x], p[y], p[c], p[d]) > 0) c = d;
    }
    if (c < 0) continue;  // hull edge
    for (int d = 0; d < n; ++d) {
      if (d != x && d != y && d != c && incircle(p[x], p[y], p[c], p[d]) == 0) {
        throw GeometryError(ErrorKind::DegenerateInput, "four cocircular points");
      }
    }
    tris.push_back({x, y, c});
    done.insert({x, y});
    done.insert({y, c});
    done.insert({c, x});
    todo.push_back({c, y});
    todo.push_back({x, c});
  }
  if (tris.empty()) throw GeometryError(ErrorKind::DegenerateInput, "points are collinear");

  for (const auto& t : tris) {
    VoronoiVertex v;
    Circle cc = circumcircle(p[t[0]], p[t[1]], p[t[2]]);
    v.pos = cc.center;
    v.radius = cc.radius;
    v.sites = t;
    vd.vertices_.push_back(v);
  }
  vd.finite_ = vd.vertices_.size();
  {
    std::vector<double> radii;
    for (const auto& v : vd.vertices_) radii.push_back(v.radius);
    std::sort(radii.begin(), radii.end());
    for (std::size_t i = 1; i < radii.size(); ++i) {
      if (radii[i] - radii[i - 1] <= 1e-12 * radii[i]) {
        throw GeometryError(ErrorKind::DegenerateInput, "two Voronoi vertices have equal MEC radii");
      }
    }
  }

  // Dual edges.
  std::map<std::pair<int, int>, std::vector<std::pair<int, std::pair<int, int>>>> by_edge;
  for (int t = 0; t < int(tris.size()); ++t) {
    for (int k = 0; k < 3; ++k) {
      int x = tris[t][k], y = tris[t][(k + 1) % 3];
      by_edge[{std::min(x, y), std::max(x, y)}].push_back({t, {x, y}});
    }
  }
  for (const auto& [key, owners] : by_edge) {
    VoronoiEdge e;
    e.sites = {key.first, key.second};
    e.a = owners[0].first;
    if (owners.size() == 2) {
      e.b = owners[1].first;
    } else {
      auto [x, y] = owners[0].second;  // triangle lies left of x->y
      Point2 d = p[y] - p[x];
      e.unbounded = true;
      e.dir = (1.0 / norm(d)) * Point2{d.y, -d.x};
    }
    const int id = int(vd.edges_.size());
    vd.vertices_[e.a].edges.push_back(id);
    if (e.b >= 0) vd.vertices_[e.b].edges.push_back(id);
    vd.edges_.push_back(e);
  }
  vd.place_artificial();
  return vd;
}

void VoronoiDiagram::place_artificial() {
  double rmax = 0.0;
  for (std::size_t i = 0; i < finite_; ++i) rmax = std::max(rmax, vertices_[i].radius);
  std::vector<int> rays;
  std::vector<double> reach;  // distance from the finite end
  for (int e = 0; e < int(edges_.size()); ++e) {
    VoronoiEdge& ed = edges_[e];
    if (!ed.unbounded) continue;
    const Point2 s0 = sites_[ed.sites[0]], s1 = sites_[ed.sites[1]];
    const Point2 mid = 0.5 * (s0 + s1);
    const double h = 0.5 * dist(s0, s1);
    const double along = dot(vertices_[ed.a].pos - mid, ed.dir);
    const double target = std::sqrt(std::max(0.0, 4.0 * rmax * rmax - h * h));
    VoronoiVertex v;
    v.artificial = true;
    v.edges = {e};
    ed.b = int(vertices_.size());
    vertices_.push_back(v);
    rays.push_back(e);
    reach.push_back(std::max(target - along, 0.0) + 1e-9 * rmax);
  }
  auto settle = [&](std::size_t k) {
    const VoronoiEdge& ed = edges_[rays[k]];
    VoronoiVertex& v = vertices_[ed.b];
    v.pos = vertices_[ed.a].pos + reach[k] * ed.dir;
    v.radius = dist(v.pos, sites_[ed.sites[0]]);
  };
  for (std::size_t k = 0; k < rays.size(); ++k) settle(k);

  for (int round = 0; round < 64; ++round) {
    auto bad = artificial_overlaps();
    if (bad.empty()) return;
    std::set<int> push;
    for (auto [u, v] : bad) {
      push.insert(u);
      push.insert(v);
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (push.count(edges_[rays[k]].b)) {
        reach[k] *= 2.0;
        settle(k);
      }
    }
  }
  throw GeometryError(ErrorKind::PlacementFailed, "artificial MECs still overlap inside the hull");
}

bool VoronoiDiagram::caps_overlap(int u, int v) const {
  const Circle cu{vertices_[u].pos, vertices_[u].radius}, cv{vertices_[v].pos, vertices_[v].radius};
  if (dist(cu.center, cv.center) >= cu.radius + cv.radius) return false;
  const AxisRect box = hull_.bounding_box();
  const double tol = eps_geom() * std::max({1.0, box.xmax - box.xmin, box.ymax - box.ymin});
  const std::size_t m = hull_.size();
  std::vector<Point2> normal(m);
  std::vector<double> offset(m);
  for (std::size_t i = 0; i < m; ++i) {
    normal[i] = inward_normal(hull_, i);
    offset[i] = dot(normal[i], hull_.vertex(i));
  }
  // Depth of x in D_u, D_v and the hull; positive depth means the caps share interior.
  auto slack = [&](Point2 x) {
    double s = std::min(cu.radius - dist(x, cu.center), cv.radius - dist(x, cv.center));
    for (std::size_t i = 0; i < m; ++i) s = std::min(s, dot(normal[i], x) - offset[i]);
    return s;
  };
  // Shrink all three sets by 2 tol. If what is left is nonempty, its lowest
  // leftmost point is a disk's leftmost point or a crossing of two boundaries,
  // so checking those candidates decides whether some depth exceeds tol.
  const double d = 2 * tol;
  const Circle du{cu.center, cu.radius - d}, dv{cv.center, cv.radius - d};
  if (du.radius <= 0 || dv.radius <= 0) return false;
  std::vector<Point2> cand{du.center - Point2{du.radius, 0}, dv.center - Point2{dv.radius, 0}};
  for (Point2 x : circle_circle_intersections(du, dv)) cand.push_back(x);
  for (std::size_t i = 0; i < m; ++i) {
    const double ci = offset[i] + d;
    for (std::size_t j = i + 1; j < m; ++j) {
      const double det = cross(normal[i], normal[j]);
      if (std::fabs(det) < 1e-12) continue;
      const double cj = offset[j] + d;
      cand.push_back({(ci * normal[j].y - cj * normal[i].y) / det, (normal[i].x * cj - normal[j].x * ci) / det});
    }
    for (const Circle& c : {du, dv}) {
      const double h = ci - dot(normal[i], c.center);
      const double w2 = c.radius * c.radius - h * h;
      if (w2 < 0) continue;
      const Point2 foot = c.center + h * normal[i], along = std::sqrt(w2) * perp(normal[i]);
      cand.push_back(foot + along);
      cand.push_back(foot - along);
    }
  }
  return std::any_of(cand.begin(), cand.end(), [&](Point2 x) { return slack(x) > tol; });
}

std::vector<std::pair<int, int>> VoronoiDiagram::artificial_overlaps() const {
  std::vector<std::pair<int, int>> out;
  for (int u = int(finite_); u < int(vertices_.size()); ++u) {
    for (int v = u + 1; v < int(vertices_.size()); ++v) {
      if (caps_overlap(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

Point2 VoronoiDiagram::point_on(int edge, double t) const {
  const VoronoiEdge& e = edges_[edge];
  return lerp(vertices_[e.a].pos, vertices_[e.b].pos, t);
}

double VoronoiDiagram::radius_on(int edge, double t) const {
  return dist(point_on(edge, t), sites_[edges_[edge].sites[0]]);
}

std::optional<Circle> VoronoiDiagram::largest_containing(int edge, Point2 q) const {
  const VoronoiEdge& e = edges_[edge];
  const Point2 s = sites_[e.sites[0]];
  const Point2 p0 = vertices_[e.a].pos - s, d = vertices_[e.b].pos - vertices_[e.a].pos, qs = q - s;
  const double hi_end = e.unbounded ? std::numeric_limits<double>::infinity() : 1.0;
  // |x - q| <= |x - s|  <=>  t * A >= B, in coordinates centered at s.
  const double A = 2.0 * dot(d, qs), B = dot(qs, qs) - 2.0 * dot(p0, qs);
  double lo = 0.0, hi = hi_end;
  if (A > 0) {
    lo = std::max(lo, B / A);
  } else if (A < 0) {
    hi = std::min(hi, B / A);
  } else if (B > 0) {
    lo = 1.0;
    hi = 0.0;
  }
  auto circle_at = [&](double t) { return Circle{point_on(edge, t), radius_on(edge, t)}; };
  if (lo > hi) {
    // Allow touching within tolerance at the ends.
    std::optional<Circle> best;
    for (double t : {0.0, 1.0}) {
      Circle c = circle_at(t);
      if (circle_contains(c, q) && (!best || c.radius > best->radius)) best = c;
    }
    return best;
  }
  if (!std::isfinite(hi)) return std::nullopt;  // q outside the hull side of this ray
  Circle a = circle_at(lo), b = circle_at(hi);
  return b.radius >= a.radius ? b : a;
}

int VoronoiDiagram::next_step(int c, int c2) const {
  const VoronoiVertex& v = vertices_[c];
  if (v.artificial) return edges_[v.edges.front()].a;
  const Circle C{v.pos, v.radius}, C2{vertices_[c2].pos, vertices_[c2].radius};
  auto cross_pts = circle_circle_intersections(C, C2);
  if (cross_pts.size() < 2) return -1;
  // The point of C nearest C2's center lies on the arc of C inside C2,
  // which carries no site; it picks the arc between two consecutive sites.
  const Point2 dir = C2.center - C.center;
  for (int k = 0; k < 3; ++k) {
    int a = v.sites[k], b = v.sites[(k + 1) % 3];
    Point2 da = sites_[a] - C.center, db = sites_[b] - C.center;
    // dir within the ccw arc from a to b.
    bool inside = cross(da, db) >= 0 ? (cross(da, dir) >= 0 && cross(dir, db) >= 0)
                                      : !(cross(db, dir) > 0 && cross(dir, da) > 0);
    if (!inside) continue;
    for (int ei : v.edges) {
      const auto& s = edges_[ei].sites;
      if ((s[0] == a && s[1] == b) || (s[0] == b && s[1] == a)) return edges_[ei].other(c);
    }
  }
  return -1;
}

std::vector<int> VoronoiDiagram::unique_path(int c, int c2) const {
  const Circle C{vertices_[c].pos, vertices_[c].radius}, C2{vertices_[c2].pos, vertices_[c2].radius};
  auto x = circle_circle_intersections(C, C2);
  std::vector<int> path{c};
  if (x.size() < 2) return path;
  // Probe points on the lens boundary; containment of a convex lens in a
  // disk is decided by its boundary.
  std::vector<Point2> probe;
  for (const auto& [k, other] : {std::pair{C, C2}, std::pair{C2, C}}) {
    double t0 = std::atan2(x[0].y - k.center.y, x[0].x - k.center.x);
    double span = std::atan2(x[1].y - k.center.y, x[1].x - k.center.x) - t0;
    if (span < 0) span += 2 * M_PI;
    const double tm = t0 + 0.5 * span;
    if (dist(k.center + k.radius * Point2{std::cos(tm), std::sin(tm)}, other.center) > other.radius) {
      span -= 2 * M_PI;
    }
    for (int i = 0; i <= 64; ++i) {
      const double t = t0 + span * i / 64;
      probe.push_back(k.center + k.radius * Point2{std::cos(t), std::sin(t)});
    }
  }
  auto holds = [&](int v) {
    for (Point2 p : probe) {
      if (dist(p, vertices_[v].pos) > vertices_[v].radius * (1 + 1e-9) + 1e-12) return false;
    }
    return true;
  };
  for (std::size_t step = 0; step < vertices_.size() && path.back() != c2; ++step) {
    const int at = path.back();
    int nx = -1;
    if (vertices_[at].artificial && path.size() > 1 && !vertices_[path[path.size() - 2]].artificial) {
      // Cross the point at infinity onto the other ray holding the lens.
      for (std::size_t w = finite_; w < vertices_.size() && nx < 0; ++w) {
        const int back = edges_[vertices_[w].edges.front()].a;
        if (int(w) != at && holds(int(w)) && (back == c2 || holds(back))) nx = int(w);
      }
    } else {
      nx = next_step(at, c2);
    }
    if (nx < 0) break;
    path.push_back(nx);
  }
  return path;
}

}  // namespace esq
