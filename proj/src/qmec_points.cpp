#include "esq/qmec_points.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace esq {

std::vector<int> compute_overlapping_edges(const VoronoiDiagram& vd, int v) {
  const VoronoiVertex& root = vd.vertex(v);
  const Circle mec{root.pos, root.radius};
  std::set<int> out;
  std::vector<char> seen(vd.vertices().size(), 0);
  std::deque<int> queue{v};
  seen[v] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int ei : vd.vertex(u).edges) {
      const VoronoiEdge& e = vd.edge(ei);
      int w = e.other(u);
      double rw = vd.vertex(w).radius;
      if (rw < root.radius) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
        continue;
      }
      if (w == v || rw == root.radius) continue;
      // Rising edge: the last point from u toward w whose MEC matches MEC_v.
      const double tu = e.a == u ? 0.0 : 1.0, tw = 1.0 - tu;
      double lo = tu, hi = tw;
      if (u == v) {
        // r is convex along the edge; from v it may dip before rising.
        double best_t = tu, best_r = root.radius;
        for (int k = 1; k < 64; ++k) {
          double t = tu + (tw - tu) * k / 64.0;
          double r = vd.radius_on(ei, t);
          if (r < best_r) {
            best_r = r;
            best_t = t;
          }
        }
        lo = best_t;
        if (best_t == tu) {
          out.insert(ei);  // rises at once: the matching MEC is MEC_v itself
          continue;
        }
      }
      for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if (vd.radius_on(ei, mid) < root.radius) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      Point2 c = vd.point_on(ei, hi);
      if (dist(c, mec.center) <= mec.radius + root.radius + eps_geom()) out.insert(ei);
    }
  }
  return {out.begin(), out.end()};
}

PointsQmecIndex PointsQmecIndex::build(std::span<const Point2> points, Exec exec) {
  PointsQmecIndex idx;
  idx.vd_ = VoronoiDiagram::build(points);
  std::vector<Circle> circles;
  for (const auto& v : idx.vd_.vertices()) circles.push_back({v.pos, v.radius});
  idx.lcq_ = LcqTree::build(CircleSet::from_circles(std::move(circles)));
  idx.overlap_.resize(idx.vd_.vertices().size());
  const int finite = int(idx.vd_.finite_count());
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::Parallel)
  for (int v = 0; v < finite; ++v) {
    idx.overlap_[v] = compute_overlapping_edges(idx.vd_, v);
  }
  return idx;
}

std::size_t PointsQmecIndex::max_overlapping() const {
  std::size_t m = 0;
  for (const auto& o : overlap_) m = std::max(m, o.size());
  return m;
}

QueryAnswer PointsQmecIndex::query(Point2 q, PointsQueryStats* stats) const {
  const Polygon& hull = vd_.hull();
  if (point_in_polygon(hull, q) != Location::Inside || boundary_distance(hull, q) <= eps_geom()) {
    return QueryAnswer::unbounded();
  }
  QueryAnswer lcq = lcq_.query(q);
  if (lcq.kind != QueryAnswer::Kind::BoundedCircle) {
    throw GeometryError(ErrorKind::PreconditionViolated, "no vertex MEC holds an interior point");
  }
  const int vq = int(*lcq.witness);
  const VoronoiVertex& v = vd_.vertex(vq);
  const long edge_count = long(vd_.edges().size());
  if (stats) stats->vertex = vq;
  if (v.artificial) {
    const int e = v.edges.front();
    auto c = vd_.largest_containing(e, q);
    if (stats) stats->edges_scanned = 1;
    return c ? QueryAnswer::bounded(*c, e) : QueryAnswer::bounded(*lcq.circle, edge_count + vq);
  }
  QueryAnswer best = QueryAnswer::bounded(*lcq.circle, edge_count + vq);
  for (int e : overlap_[vq]) {
    auto c = vd_.largest_containing(e, q);
    if (c && c->radius > best.circle->radius) best = QueryAnswer::bounded(*c, e);
  }
  if (stats) stats->edges_scanned = overlap_[vq].size();
  return best;
}

}  // namespace esq
