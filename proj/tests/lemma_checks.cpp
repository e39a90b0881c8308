#include "lemma_checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

namespace esq::lemmas {

std::vector<Point2> lens_samples(const Circle& a, const Circle& b, int count) {
  std::vector<Point2> out;
  const auto x = circle_circle_intersections(a, b);
  if (x.size() < 2) return out;
  auto arc = [&](const Circle& c, const Circle& other, int k) {
    const double t0 = std::atan2(x[0].y - c.center.y, x[0].x - c.center.x);
    const double t1 = std::atan2(x[1].y - c.center.y, x[1].x - c.center.x);
    double span = t1 - t0;
    if (span < 0) span += 2 * std::numbers::pi;
    // Keep the arc of c that lies inside the other circle.
    const double tm = t0 + span / 2;
    const Point2 mid = c.center + c.radius * Point2{std::cos(tm), std::sin(tm)};
    if (dist(mid, other.center) > other.radius) span -= 2 * std::numbers::pi;
    for (int i = 0; i < k; ++i) {
      const double t = t0 + span * i / (k - 1);
      out.push_back(c.center + c.radius * Point2{std::cos(t), std::sin(t)});
    }
  };
  arc(a, b, count / 2);
  arc(b, a, count - count / 2);
  return out;
}

PathAudit audit_unique_paths(const VoronoiDiagram& vd, int lens_points) {
  PathAudit audit;
  const int nv = int(vd.vertices().size());
  const int finite = int(vd.finite_count());
  const int hub = nv;
  for (int c = 0; c < finite; ++c) {
    for (int c2 = 0; c2 < finite; ++c2) {
      if (c == c2) continue;
      const Circle A{vd.vertex(c).pos, vd.vertex(c).radius}, B{vd.vertex(c2).pos, vd.vertex(c2).radius};
      const auto lens = lens_samples(A, B, lens_points);
      if (lens.empty()) continue;
      ++audit.pairs;
      auto holds = [&](int v) {
        return std::all_of(lens.begin(), lens.end(), [&](Point2 p) {
          return dist(p, vd.vertex(v).pos) <= vd.vertex(v).radius + 1e-9;
        });
      };
      int paths = 0;
      std::vector<char> on(std::size_t(nv) + 1, 0);
      std::function<void(int)> dfs = [&](int x) {
        if (x == c2) {
          ++paths;
          return;
        }
        on[x] = 1;
        std::vector<int> next;
        if (x == hub) {
          for (int v = finite; v < nv; ++v) next.push_back(v);
        } else {
          for (int e : vd.vertex(x).edges) next.push_back(vd.edge(e).other(x));
          if (vd.vertex(x).artificial) next.push_back(hub);
        }
        for (int y : next) {
          if (!on[y] && (y == hub || holds(y))) dfs(y);
        }
        on[x] = 0;
      };
      dfs(c);
      if (paths != 1) ++audit.wrong_count;
      const auto path = vd.unique_path(c, c2);
      if (path.empty() || path.back() != c2 || int(path.size()) > nv ||
          !std::all_of(path.begin(), path.end(), holds)) {
        ++audit.procedure_failures;
      }
    }
  }
  return audit;
}

int mq_components(const MedialAxis& axis, Point2 q, int per_arc) {
  const int nn = int(axis.nodes().size());
  auto inside = [&](Point2 c, double r) { return dist(q, c) <= r + 1e-9 * (1.0 + r); };
  // Union-find over nodes followed by every feasible sample.
  std::vector<int> parent(static_cast<std::size_t>(nn));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  std::vector<char> feasible(static_cast<std::size_t>(nn));
  for (int i = 0; i < nn; ++i) feasible[i] = inside(axis.node(i).pos, axis.node(i).radius);

  const AxisPoint ray = axis.ray_point(q);
  for (int a = 0; a < int(axis.arcs().size()); ++a) {
    std::vector<double> ts;
    for (int i = 1; i <= per_arc; ++i) ts.push_back(double(i) / (per_arc + 1));
    if (ray.arc == a && ray.t > 0 && ray.t < 1) ts.push_back(ray.t);
    std::sort(ts.begin(), ts.end());
    int prev = feasible[axis.arc(a).u] ? axis.arc(a).u : -1;
    for (double t : ts) {
      const AxisPoint p = axis.at(a, t);
      if (!inside(p.pos, p.radius)) {
        prev = -1;
        continue;
      }
      const int id = int(parent.size());
      parent.push_back(id);
      feasible.push_back(1);
      if (prev >= 0) unite(prev, id);
      prev = id;
    }
    if (prev >= 0 && feasible[axis.arc(a).v]) unite(prev, axis.arc(a).v);
  }
  int pieces = 0;
  for (int i = 0; i < int(parent.size()); ++i) pieces += feasible[i] && find(i) == i;
  return pieces;
}

int centroid_split_violations(const SimpleQmecIndex& idx) {
  int bad = 0;
  for (const auto& t : idx.tree()) {
    std::size_t total = 0;
    bool ok = true;
    for (int c : t.children) {
      const std::size_t size = idx.tree()[c].nodes.size();
      total += size;
      ok = ok && 2 * size <= t.nodes.size() + 1;
    }
    bad += !ok || total + 1 != t.nodes.size();
  }
  return bad;
}

}  // namespace esq::lemmas
