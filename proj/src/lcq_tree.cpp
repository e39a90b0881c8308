#include <algorithm>
#include <numeric>

#include "esq/lcq.hpp"

namespace esq {

CircleSet CircleSet::from_circles(std::vector<Circle> circles, std::vector<long> ids) {
  if (ids.empty()) {
    ids.resize(circles.size());
    std::iota(ids.begin(), ids.end(), 0L);
  }
  if (ids.size() != circles.size()) {
    throw GeometryError(ErrorKind::PreconditionViolated, "circle/id count mismatch");
  }
  std::vector<std::size_t> order(circles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (circles[a].radius != circles[b].radius) return circles[a].radius > circles[b].radius;
    return ids[a] < ids[b];
  });
  CircleSet s;
  s.circles_.reserve(order.size());
  s.ids_.reserve(order.size());
  for (std::size_t k : order) {
    if (!(circles[k].radius > 0.0)) {
      throw GeometryError(ErrorKind::DegenerateInput, "circle radius must be positive");
    }
    s.circles_.push_back(circles[k]);
    s.ids_.push_back(ids[k]);
  }
  // Coincident circles share radius, so they are neighbours after sorting
  // up to runs of equal radius.
  const double eps = eps_geom();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s.circles_[i].radius - s.circles_[j].radius > eps) break;
      if (dist(s.circles_[i].center, s.circles_[j].center) <= eps) {
        throw GeometryError(ErrorKind::DegenerateInput, "coincident circles");
      }
    }
  }
  return s;
}

void CircleSet::validate_no_triple_points() const {
  const double tol = 16.0 * eps_geom();
  const std::size_t n = size();
  std::vector<std::size_t> by_left(n);
  std::iota(by_left.begin(), by_left.end(), 0);
  std::sort(by_left.begin(), by_left.end(), [&](std::size_t a, std::size_t b) {
    return circles_[a].center.x - circles_[a].radius < circles_[b].center.x - circles_[b].radius;
  });
  for (std::size_t a = 0; a < n; ++a) {
    const Circle& ci = circles_[by_left[a]];
    for (std::size_t b = a + 1; b < n; ++b) {
      const Circle& cj = circles_[by_left[b]];
      if (cj.center.x - cj.radius > ci.center.x + ci.radius) break;
      std::vector<Point2> pts;
      try {
        pts = circle_circle_intersections(ci, cj);
      } catch (const GeometryError&) {
        throw GeometryError(ErrorKind::DegenerateInput, "coincident circles");
      }
      for (Point2 p : pts) {
        for (std::size_t k = 0; k < n; ++k) {
          if (k == by_left[a] || k == by_left[b]) continue;
          const Circle& ck = circles_[k];
          if (std::fabs(dist(p, ck.center) - ck.radius) <= tol) {
            throw GeometryError(ErrorKind::DegenerateInput,
                                "three circles pass through a common point");
          }
        }
      }
    }
  }
}

namespace {

// Keeps the part of a ccw convex polygon with dot(n, x) <= b.
std::vector<Point2> clip(const std::vector<Point2>& poly, Point2 n, double b) {
  std::vector<Point2> out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Point2 p = poly[i], q = poly[(i + 1) % m];
    double fp = dot(n, p) - b, fq = dot(n, q) - b;
    if (fp <= 0.0) out.push_back(p);
    if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
      out.push_back(lerp(p, q, fp / (fp - fq)));
    }
  }
  return out;
}

}  // namespace

PowerDiagram::PowerDiagram(const CircleSet& set, std::size_t lo, std::size_t hi) {
  AxisRect box{set.circle(lo).center.x, set.circle(lo).center.x, set.circle(lo).center.y,
               set.circle(lo).center.y};
  for (std::size_t i = lo; i < hi; ++i) {
    const Circle& c = set.circle(i);
    box.xmin = std::min(box.xmin, c.center.x - c.radius);
    box.xmax = std::max(box.xmax, c.center.x + c.radius);
    box.ymin = std::min(box.ymin, c.center.y - c.radius);
    box.ymax = std::max(box.ymax, c.center.y + c.radius);
  }
  const double pad = 1.0 + 0.01 * std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  box.xmin -= pad;
  box.xmax += pad;
  box.ymin -= pad;
  box.ymax += pad;
  const std::vector<Point2> frame{
      {box.xmin, box.ymin}, {box.xmax, box.ymin}, {box.xmax, box.ymax}, {box.xmin, box.ymax}};

  // pow_i(x) <= pow_j(x)  <=>  2 x.(c_j - c_i) <= k_j - k_i,  k = |c|^2 - r^2.
  // Weights are taken relative to the frame corner to keep magnitudes small.
  const Point2 o{box.xmin, box.ymin};
  std::vector<Point2> c(hi - lo);
  std::vector<double> k(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) {
    c[i - lo] = set.circle(i).center - o;
    k[i - lo] = dot(c[i - lo], c[i - lo]) - set.circle(i).radius * set.circle(i).radius;
  }
  std::vector<Point2> local_frame;
  for (Point2 p : frame) local_frame.push_back(p - o);

  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<Point2> cell = local_frame;
    for (std::size_t j = 0; j < c.size() && cell.size() >= 3; ++j) {
      if (j == i) continue;
      cell = clip(cell, 2.0 * (c[j] - c[i]), k[j] - k[i]);
    }
    if (cell.size() < 3) continue;
    double area = 0.0;
    for (std::size_t v = 0; v < cell.size(); ++v) area += cross(cell[v], cell[(v + 1) % cell.size()]);
    if (area <= 0.0) continue;
    for (Point2& p : cell) p = p + o;
    const int label = int(cells_.size());
    for (std::size_t v = 0; v < cell.size(); ++v) {
      locator_.add_region_boundary(LineCurve{cell[v], cell[(v + 1) % cell.size()]}, true, label);
    }
    cells_.push_back(std::move(cell));
    cell_ranks_.push_back(lo + i);
    cell_circles_.push_back(set.circle(lo + i));
  }
  locator_.build();
}

long PowerDiagram::owner(Point2 q) const {
  int cell = locator_.locate(q);
  return cell < 0 ? -1 : long(cell_ranks_[cell]);
}

bool PowerDiagram::union_contains(Point2 q) const {
  int cell = locator_.locate(q);
  return cell >= 0 && circle_contains(cell_circles_[cell], q);
}

LcqTree LcqTree::build(CircleSet set) {
  LcqTree t;
  t.set_ = std::move(set);
  if (!t.set_.empty()) {
    t.nodes_.reserve(2 * t.set_.size());
    t.build_node(0, t.set_.size(), 1);
  }
  return t;
}

int LcqTree::build_node(std::size_t lo, std::size_t hi, int depth) {
  const int id = int(nodes_.size());
  nodes_.emplace_back();
  nodes_[id].lo = lo;
  nodes_[id].hi = hi;
  nodes_[id].depth = depth;
  if (hi - lo == 1) return id;
  nodes_[id].diagram = std::make_unique<PowerDiagram>(set_, lo, hi);
  // Left child takes the larger half.
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  int l = build_node(lo, mid, depth + 1);
  int r = build_node(mid, hi, depth + 1);
  nodes_[id].left = l;
  nodes_[id].right = r;
  return id;
}

bool LcqTree::node_contains(int node, Point2 q) const {
  const Node& n = nodes_[node];
  if (!n.diagram) return circle_contains(set_.circle(n.lo), q);
  return n.diagram->union_contains(q);
}

std::optional<std::size_t> LcqTree::query_rank(Point2 q) const {
  if (nodes_.empty() || !node_contains(0, q)) return std::nullopt;
  int v = 0;
  while (nodes_[v].left >= 0) {
    v = node_contains(nodes_[v].left, q) ? nodes_[v].left : nodes_[v].right;
  }
  return nodes_[v].lo;
}

QueryAnswer LcqTree::query(Point2 q) const {
  auto r = query_rank(q);
  if (!r) return QueryAnswer::null();
  return QueryAnswer::bounded(set_.circle(*r), set_.id(*r));
}

int LcqTree::depth() const {
  int d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.depth);
  return d;
}

}  // namespace esq
