#include "esq/medial_axis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include <boost/polygon/polygon.hpp>
#include <boost/polygon/voronoi.hpp>

namespace esq {

namespace bp = boost::polygon;

double site_distance(const Polygon& poly, AxisSite site, Point2 p) {
  if (site.kind == AxisSite::Kind::Vertex) return dist(p, poly.vertex(std::size_t(site.index)));
  return point_segment_distance(p, poly.edge(std::size_t(site.index)));
}

namespace {

using IPoint = bp::point_data<int>;
using ISegment = bp::segment_data<int>;
using Diagram = bp::voronoi_diagram<double>;

struct Scaler {
  Point2 origin;
  double scale = 1.0;

  IPoint to_int(Point2 p) const {
    return IPoint(int(std::lround((p.x - origin.x) * scale)), int(std::lround((p.y - origin.y) * scale)));
  }
  Point2 to_real(double x, double y) const { return {origin.x + x / scale, origin.y + y / scale}; }
};

Scaler make_scaler(const AxisRect& box) {
  double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  return {{box.xmin, box.ymin}, double(1 << 29) / std::max(span, 1e-300)};
}

// Signed distance to the supporting line of an edge (positive inside) or
// distance to a vertex.
double site_value(const Polygon& poly, AxisSite s, Point2 p) {
  if (s.kind == AxisSite::Kind::Vertex) return dist(p, poly.vertex(std::size_t(s.index)));
  Segment e = poly.edge(std::size_t(s.index));
  Point2 n = inward_normal(poly, std::size_t(s.index));
  return dot(p - e.a, n);
}

// Gauss-Newton on d_s(x) = r over all sites of a Voronoi vertex.
bool refine_vertex(const Polygon& poly, const std::vector<AxisSite>& sites, Point2& pos) {
  if (sites.size() < 3) return false;
  Point2 x = pos;
  double r = 0.0;
  for (const auto& s : sites) r += site_value(poly, s, x);
  r /= double(sites.size());
  for (int it = 0; it < 20; ++it) {
    double a[3][3] = {}, b[3] = {};
    for (const auto& s : sites) {
      double g[3];
      double f;
      if (s.kind == AxisSite::Kind::Vertex) {
        Point2 v = poly.vertex(std::size_t(s.index));
        double d = std::max(dist(x, v), 1e-300);
        g[0] = (x.x - v.x) / d;
        g[1] = (x.y - v.y) / d;
        f = d - r;
      } else {
        Point2 n = inward_normal(poly, std::size_t(s.index));
        g[0] = n.x;
        g[1] = n.y;
        f = site_value(poly, s, x) - r;
      }
      g[2] = -1.0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a[i][j] += g[i] * g[j];
        b[i] -= g[i] * f;
      }
    }
    // Solve the 3x3 normal equations by Cramer's rule.
    auto det3 = [](const double m[3][3]) {
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    double d = det3(a);
    if (!(std::fabs(d) > 1e-300)) return false;
    double delta[3];
    for (int c = 0; c < 3; ++c) {
      double m[3][3];
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = j == c ? b[i] : a[i][j];
      }
      delta[c] = det3(m) / d;
    }
    x.x += delta[0];
    x.y += delta[1];
    r += delta[2];
    if (std::fabs(delta[0]) + std::fabs(delta[1]) + std::fabs(delta[2]) < 1e-15) break;
  }
  if (!std::isfinite(x.x) || !std::isfinite(x.y)) return false;
  pos = x;
  return true;
}

AxisSite site_of(const Diagram::cell_type& cell, std::size_t n) {
  const int idx = int(cell.source_index());
  if (cell.contains_segment()) return {AxisSite::Kind::Edge, idx};
  if (cell.source_category() == bp::SOURCE_CATEGORY_SEGMENT_END_POINT) {
    return {AxisSite::Kind::Vertex, int((std::size_t(idx) + 1) % n)};
  }
  return {AxisSite::Kind::Vertex, idx};
}

Curve make_curve(const Polygon& poly, AxisSite s0, AxisSite s1, Point2 p0, Point2 p1) {
  const bool v0 = s0.kind == AxisSite::Kind::Vertex, v1 = s1.kind == AxisSite::Kind::Vertex;
  if (v0 == v1) return LineCurve{p0, p1};
  AxisSite vs = v0 ? s0 : s1, es = v0 ? s1 : s0;
  Segment e = poly.edge(std::size_t(es.index));
  ParabolaCurve pc = ParabolaCurve::make(poly.vertex(std::size_t(vs.index)), e.a, e.b, 0.0, 0.0);
  pc.u0 = pc.project(p0);
  pc.u1 = pc.project(p1);
  return pc;
}

// Parameter of the interior clearance minimum, if any.
std::optional<double> interior_minimum(const Polygon& poly, const AxisArc& a) {
  constexpr double kMargin = 1e-9;
  if (const auto* pc = std::get_if<ParabolaCurve>(&a.curve)) {
    if (pc->u1 == pc->u0) return std::nullopt;
    double t = (pc->uf - pc->u0) / (pc->u1 - pc->u0);
    if (t > kMargin && t < 1.0 - kMargin) return t;
    return std::nullopt;
  }
  if (a.sites[0].kind != AxisSite::Kind::Vertex || a.sites[1].kind != AxisSite::Kind::Vertex) {
    return std::nullopt;
  }
  const auto& l = std::get<LineCurve>(a.curve);
  Point2 d = l.b - l.a;
  double len2 = dot(d, d);
  if (len2 == 0.0) return std::nullopt;
  double t = dot(poly.vertex(std::size_t(a.sites[0].index)) - l.a, d) / len2;
  if (t > kMargin && t < 1.0 - kMargin) return t;
  return std::nullopt;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
};

}  // namespace

// Uniform bucket grid over sampled arc boxes, searched in growing rings.
struct MedialAxis::ArcGrid {
  AxisRect box;
  int nx = 1, ny = 1;
  double cell = 1.0;
  std::vector<std::vector<int>> buckets;
  std::vector<AxisRect> arc_box;
};

MedialAxis MedialAxis::build(const Polygon& poly) {
  MedialAxis m;
  m.poly_ = poly;
  const std::size_t n = poly.size();
  const AxisRect box = poly.bounding_box();
  const double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const Scaler sc = make_scaler(box);

  std::vector<ISegment> segs;
  for (std::size_t i = 0; i < n; ++i) {
    IPoint a = sc.to_int(poly.vertex(i)), b = sc.to_int(poly.vertex(i + 1));
    if (a == b) throw GeometryError(ErrorKind::DegenerateInput, "edge collapses after scaling");
    segs.emplace_back(a, b);
  }
  Diagram vd;
  bp::construct_voronoi(segs.begin(), segs.end(), &vd);

  auto vertex_sites = [&](const Diagram::vertex_type* vx) {
    std::vector<AxisSite> sites;
    const auto* start = vx->incident_edge();
    const auto* e = start;
    do {
      AxisSite s = site_of(*e->cell(), n);
      if (std::find(sites.begin(), sites.end(), s) == sites.end()) sites.push_back(s);
      e = e->rot_next();
    } while (e != start);
    return sites;
  };
  const EdgeBands bands(poly);
  // Position of a Voronoi vertex: snapped to a polygon vertex when it is one,
  // otherwise refined against the original (unrounded) sites.
  std::map<const Diagram::vertex_type*, AxisNode> placed;
  auto place = [&](const Diagram::vertex_type* vx) -> const AxisNode& {
    auto it = placed.find(vx);
    if (it != placed.end()) return it->second;
    AxisNode nd;
    nd.pos = sc.to_real(vx->x(), vx->y());
    auto sites = vertex_sites(vx);
    for (const auto& s : sites) {
      if (s.kind == AxisSite::Kind::Vertex &&
          dist(poly.vertex(std::size_t(s.index)), nd.pos) <= 1e-6 * span) {
        nd.pos = poly.vertex(std::size_t(s.index));
        nd.polygon_vertex = s.index;
      }
    }
    if (nd.polygon_vertex < 0) {
      Point2 p = nd.pos;
      if (refine_vertex(poly, sites, p) && dist(p, nd.pos) <= 1e-6 * span &&
          bands.locate(p) == Location::Inside) {
        nd.pos = p;
      }
    }
    return placed[vx] = nd;
  };

  std::map<const Diagram::vertex_type*, int> node_of;
  struct RawArc {
    int u, v;
    AxisSite s0, s1;
  };
  std::vector<RawArc> raw;
  auto node_for = [&](const Diagram::vertex_type* vx) {
    auto it = node_of.find(vx);
    if (it != node_of.end()) return it->second;
    m.nodes_.push_back(place(vx));
    node_of[vx] = int(m.nodes_.size()) - 1;
    return int(m.nodes_.size()) - 1;
  };

  for (const auto& e : vd.edges()) {
    if (!e.is_primary() || !e.is_finite()) continue;
    if (&e > e.twin()) continue;
    AxisSite s0 = site_of(*e.cell(), n), s1 = site_of(*e.twin()->cell(), n);
    const AxisNode& a0 = place(e.vertex0());
    const AxisNode& a1 = place(e.vertex1());
    if ((a0.polygon_vertex < 0 && bands.locate(a0.pos) != Location::Inside) ||
        (a1.polygon_vertex < 0 && bands.locate(a1.pos) != Location::Inside)) {
      continue;
    }
    Curve c = make_curve(poly, s0, s1, a0.pos, a1.pos);
    if (bands.locate(curve_point(c, 0.5)) != Location::Inside) continue;
    raw.push_back({node_for(e.vertex0()), node_for(e.vertex1()), s0, s1});
  }
  if (raw.empty()) throw GeometryError(ErrorKind::DegenerateInput, "empty medial axis");

  // Contract nodes that coincide (cocircular site configurations).
  const double merge_tol = 1e-9 * std::max(1.0, span);
  UnionFind uf(int(m.nodes_.size()));
  for (const auto& r : raw) {
    if (dist(m.nodes_[r.u].pos, m.nodes_[r.v].pos) <= merge_tol) uf.parent[uf.find(r.u)] = uf.find(r.v);
  }
  std::vector<int> remap(m.nodes_.size(), -1);
  std::vector<AxisNode> merged;
  for (std::size_t i = 0; i < m.nodes_.size(); ++i) {
    int root = uf.find(int(i));
    if (remap[root] < 0) {
      remap[root] = int(merged.size());
      merged.push_back(m.nodes_[root]);
    }
    remap[i] = remap[root];
    if (m.nodes_[i].polygon_vertex >= 0) {
      merged[remap[i]].polygon_vertex = m.nodes_[i].polygon_vertex;
      merged[remap[i]].pos = m.nodes_[i].pos;
    }
  }
  m.nodes_ = std::move(merged);
  // A node's nearest sites are among the sites of its arcs.
  std::vector<double> rad(m.nodes_.size(), std::numeric_limits<double>::infinity());
  for (const auto& r : raw) {
    for (int end : {remap[r.u], remap[r.v]}) {
      rad[end] = std::min({rad[end], site_distance(poly, r.s0, m.nodes_[end].pos),
                            site_distance(poly, r.s1, m.nodes_[end].pos)});
    }
  }
  for (std::size_t i = 0; i < m.nodes_.size(); ++i) {
    m.nodes_[i].radius = m.nodes_[i].polygon_vertex >= 0 ? 0.0 : rad[i];
  }

  auto add_arc = [&](int u, int v, AxisSite s0, AxisSite s1, Curve c) {
    AxisArc a;
    a.u = u;
    a.v = v;
    a.sites[0] = s0;
    a.sites[1] = s1;
    a.curve = std::move(c);
    m.arcs_.push_back(std::move(a));
  };
  for (const auto& r : raw) {
    int u = remap[r.u], v = remap[r.v];
    if (u == v) continue;
    Point2 pu = m.nodes_[u].pos, pv = m.nodes_[v].pos;
    AxisArc probe;
    probe.sites[0] = r.s0;
    probe.sites[1] = r.s1;
    probe.curve = make_curve(poly, r.s0, r.s1, pu, pv);
    if (auto t = interior_minimum(poly, probe)) {
      Point2 mid = curve_point(probe.curve, *t);
      AxisNode nd;
      nd.pos = mid;
      nd.radius = site_distance(poly, r.s0, mid);
      m.nodes_.push_back(nd);
      int w = int(m.nodes_.size()) - 1;
      add_arc(u, w, r.s0, r.s1, make_curve(poly, r.s0, r.s1, pu, mid));
      add_arc(w, v, r.s0, r.s1, make_curve(poly, r.s0, r.s1, mid, pv));
    } else {
      add_arc(u, v, r.s0, r.s1, std::move(probe.curve));
    }
  }

  for (std::size_t i = 0; i < m.arcs_.size(); ++i) {
    AxisArc& a = m.arcs_[i];
    m.nodes_[a.u].arcs.push_back(int(i));
    m.nodes_[a.v].arcs.push_back(int(i));
    double ru = m.nodes_[a.u].radius, rv = m.nodes_[a.v].radius;
    double tol = 1e-12 * std::max(1.0, span);
    a.trend = rv > ru + tol ? Trend::Rising : (rv < ru - tol ? Trend::Falling : Trend::Constant);
  }

  // Tree check.
  if (m.arcs_.size() + 1 != m.nodes_.size()) {
    throw GeometryError(ErrorKind::DegenerateInput, "medial axis is not a tree (" +
                                                        std::to_string(m.nodes_.size()) + " nodes, " +
                                                        std::to_string(m.arcs_.size()) + " arcs)");
  }
  {
    std::vector<bool> seen(m.nodes_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int ai : m.nodes_[x].arcs) {
        int y = m.arcs_[ai].other(x);
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != m.nodes_.size()) throw GeometryError(ErrorKind::DegenerateInput, "medial axis is disconnected");
  }

  m.build_regions();
  m.build_grid();
  return m;
}

Point2 MedialAxis::point_on_arc(int arc, double t) const { return curve_point(arcs_[arc].curve, t); }

double MedialAxis::clearance_on_arc(int arc, double t) const {
  const AxisArc& a = arcs_[arc];
  if (t <= 0.0) return nodes_[a.u].radius;
  if (t >= 1.0) return nodes_[a.v].radius;
  // Prefer the vertex site: its distance is exact anywhere on the arc.
  AxisSite s = a.sites[0].kind == AxisSite::Kind::Vertex ? a.sites[0] : a.sites[1];
  return site_distance(poly_, s, point_on_arc(arc, t));
}

AxisPoint MedialAxis::at(int arc, double t) const {
  t = std::clamp(t, 0.0, 1.0);
  const AxisArc& a = arcs_[arc];
  Point2 p = t == 0.0 ? nodes_[a.u].pos : (t == 1.0 ? nodes_[a.v].pos : point_on_arc(arc, t));
  return {arc, t, p, clearance_on_arc(arc, t)};
}

AxisPoint MedialAxis::at_node(int node) const {
  int arc = nodes_[node].arcs.front();
  return {arc, arcs_[arc].u == node ? 0.0 : 1.0, nodes_[node].pos, nodes_[node].radius};
}

int MedialAxis::arc_between(int a, int b) const {
  for (int ai : nodes_[a].arcs) {
    if (arcs_[ai].other(a) == b) return ai;
  }
  return -1;
}

void MedialAxis::require_distinct_clearances(double tol) const {
  std::vector<std::pair<double, int>> r;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!is_leaf(int(i))) r.push_back({nodes_[i].radius, int(i)});
  }
  std::sort(r.begin(), r.end());
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i].first - r[i - 1].first <= tol) {
      throw GeometryError(ErrorKind::DegenerateInput,
                          "internal axis nodes " + std::to_string(r[i - 1].second) + " and " +
                              std::to_string(r[i].second) + " have equal clearance");
    }
  }
}

// ---------------------------------------------------------------------------
// Spoke regions

void MedialAxis::build_regions() {
  for (std::size_t ai = 0; ai < arcs_.size(); ++ai) {
    const AxisArc& a = arcs_[ai];
    const Point2 p0 = nodes_[a.u].pos, p1 = nodes_[a.v].pos;
    for (int side = 0; side < 2; ++side) {
      const AxisSite s = a.sites[side];
      Point2 f0, f1;
      if (s.kind == AxisSite::Kind::Vertex) {
        f0 = f1 = poly_.vertex(std::size_t(s.index));
      } else {
        Segment e = poly_.edge(std::size_t(s.index));
        f0 = closest_point_on_segment(p0, e);
        f1 = closest_point_on_segment(p1, e);
      }
      std::vector<Curve> boundary{a.curve, LineCurve{p1, f1}, LineCurve{f1, f0}, LineCurve{f0, p0}};
      std::vector<Point2> ring;
      for (const Curve& c : boundary) {
        auto pts = sample_curve(c, std::holds_alternative<ParabolaCurve>(c) ? 16 : 1);
        ring.insert(ring.end(), pts.begin(), pts.end() - 1);
      }
      double area = 0.0;
      for (std::size_t k = 0; k < ring.size(); ++k) area += cross(ring[k], ring[(k + 1) % ring.size()]);
      if (std::fabs(area) <= 1e-18) continue;
      const int label = int(regions_.size());
      regions_.push_back({int(ai), side});
      for (const Curve& c : boundary) locator_.add_region_boundary(c, area > 0.0, label);
    }
  }
  locator_.build();
}

AxisPoint MedialAxis::ray_point_in(int arc, AxisSite site, Point2 q) const {
  const AxisArc& a = arcs_[arc];
  std::function<double(double)> g;
  if (site.kind == AxisSite::Kind::Vertex) {
    Point2 v = poly_.vertex(std::size_t(site.index));
    g = [&, v](double t) { return cross(q - v, point_on_arc(arc, t) - v); };
  } else {
    Segment e = poly_.edge(std::size_t(site.index));
    Point2 d = e.b - e.a;
    double uq = dot(q - e.a, d);
    g = [&, e, d, uq](double t) { return dot(point_on_arc(arc, t) - e.a, d) - uq; };
  }
  (void)a;
  double lo = 0.0, hi = 1.0;
  double glo = g(lo), ghi = g(hi);
  if ((glo > 0.0) == (ghi > 0.0)) {
    double t = std::fabs(glo) < std::fabs(ghi) ? 0.0 : 1.0;
    return at(arc, t);
  }
  for (int it = 0; it < 64; ++it) {
    double mid = 0.5 * (lo + hi);
    if ((g(mid) > 0.0) == (glo > 0.0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return at(arc, 0.5 * (lo + hi));
}

AxisPoint MedialAxis::ray_point(Point2 q) const {
  if (point_in_polygon(poly_, q) != Location::Inside) {
    throw GeometryError(ErrorKind::OutsidePolygon, "query point not strictly inside polygon");
  }
  const double tol = 1e-9 * std::max(1.0, std::hypot(poly_.bounding_box().xmax - poly_.bounding_box().xmin,
                                                     poly_.bounding_box().ymax - poly_.bounding_box().ymin));
  auto contains = [&](const AxisPoint& y) { return dist(y.pos, q) <= y.radius + tol; };
  int label = locator_.locate(q);
  if (label >= 0) {
    const Region& r = regions_[label];
    AxisPoint y = ray_point_in(r.arc, arcs_[r.arc].sites[r.side], q);
    if (contains(y)) return y;
  }
  // Numerical fallback: scan all regions.
  for (const Region& r : regions_) {
    AxisPoint y = ray_point_in(r.arc, arcs_[r.arc].sites[r.side], q);
    if (contains(y)) return y;
  }
  throw GeometryError(ErrorKind::DegenerateInput, "no axis point covers the query");
}

MedialAxis::Located MedialAxis::locate(Point2 q) const {
  Located at;
  at.region = locator_.locate(q);
  if (at.region >= 0) {
    const Region& r = regions_[at.region];
    at.clearance = site_value(poly_, arcs_[r.arc].sites[r.side], q);
  }
  return at;
}

AxisPoint MedialAxis::ray_point(const Located& at, Point2 q) const {
  const Region& r = regions_[at.region];
  return ray_point_in(r.arc, arcs_[r.arc].sites[r.side], q);
}

int MedialAxis::cell_of(Point2 q) const {
  int label = locator_.locate(q);
  if (label < 0) return -1;
  AxisSite s = arcs_[regions_[label].arc].sites[regions_[label].side];
  return s.index;
}

// ---------------------------------------------------------------------------
// Nearest axis point

void MedialAxis::build_grid() {
  auto g = std::make_shared<ArcGrid>();
  g->box = poly_.bounding_box();
  const double w = g->box.xmax - g->box.xmin, h = g->box.ymax - g->box.ymin;
  const int side = std::max(1, int(std::sqrt(double(arcs_.size()))));
  g->cell = std::max(w, h) / side;
  g->nx = std::max(1, int(std::ceil(w / g->cell)));
  g->ny = std::max(1, int(std::ceil(h / g->cell)));
  g->buckets.assign(std::size_t(g->nx) * g->ny, {});
  for (std::size_t ai = 0; ai < arcs_.size(); ++ai) {
    auto pts = sample_curve(arcs_[ai].curve, 16);
    AxisRect b = bounding_box(pts);
    // Parabola sagitta between samples is tiny relative to the cell; pad anyway.
    double pad = 0.01 * g->cell;
    b.xmin -= pad;
    b.xmax += pad;
    b.ymin -= pad;
    b.ymax += pad;
    g->arc_box.push_back(b);
    int i0 = std::clamp(int((b.xmin - g->box.xmin) / g->cell), 0, g->nx - 1);
    int i1 = std::clamp(int((b.xmax - g->box.xmin) / g->cell), 0, g->nx - 1);
    int j0 = std::clamp(int((b.ymin - g->box.ymin) / g->cell), 0, g->ny - 1);
    int j1 = std::clamp(int((b.ymax - g->box.ymin) / g->cell), 0, g->ny - 1);
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) g->buckets[std::size_t(i) * g->ny + j].push_back(int(ai));
    }
  }
  grid_ = g;
}

AxisPoint MedialAxis::nearest_point(Point2 q) const {
  if (point_in_polygon(poly_, q) != Location::Inside) {
    throw GeometryError(ErrorKind::OutsidePolygon, "query point not strictly inside polygon");
  }
  const ArcGrid& g = *grid_;
  const int qi = std::clamp(int((q.x - g.box.xmin) / g.cell), 0, g.nx - 1);
  const int qj = std::clamp(int((q.y - g.box.ymin) / g.cell), 0, g.ny - 1);
  double best = std::numeric_limits<double>::infinity();
  int best_arc = -1;
  double best_t = 0.0;
  std::vector<bool> seen(arcs_.size(), false);
  for (int ring = 0; ring <= std::max(g.nx, g.ny); ++ring) {
    // Every point outside the current ring block is at least this far.
    double reach = ring == 0 ? 0.0 : (ring - 1) * g.cell;
    if (best <= reach) break;
    for (int i = qi - ring; i <= qi + ring; ++i) {
      for (int j = qj - ring; j <= qj + ring; ++j) {
        if (std::max(std::abs(i - qi), std::abs(j - qj)) != ring) continue;
        if (i < 0 || j < 0 || i >= g.nx || j >= g.ny) continue;
        for (int ai : g.buckets[std::size_t(i) * g.ny + j]) {
          if (seen[ai]) continue;
          seen[ai] = true;
          double t = closest_parameter(arcs_[ai].curve, q);
          double d = dist(point_on_arc(ai, t), q);
          if (d < best || (d == best && ai < best_arc)) {
            best = d;
            best_arc = ai;
            best_t = t;
          }
        }
      }
    }
  }
  return at(best_arc, best_t);
}

}  // namespace esq
