#include "esq/qmec_simple.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace esq {

SimpleQmecIndex SimpleQmecIndex::build(const Polygon& poly) {
  SimpleQmecIndex idx;
  idx.axis_ = MedialAxis::build(poly);
  idx.axis_.require_distinct_clearances();
  idx.forest_ = MountainForest::build(idx.axis_);
  const MedialAxis& m = idx.axis_;
  const int nn = int(m.nodes().size());

  std::vector<std::vector<int>> adj(nn);
  for (const AxisArc& a : m.arcs()) {
    adj[a.u].push_back(a.v);
    adj[a.v].push_back(a.u);
  }
  std::vector<char> removed(nn, 0);
  idx.tag_.assign(m.arcs().size(), {});

  // Breadth-first over the decomposition: (component root, parent, level).
  struct Pending {
    int root, parent, level;
  };
  std::deque<Pending> queue{{0, -1, 0}};
  while (!queue.empty()) {
    auto [root, parent, level] = queue.front();
    queue.pop_front();
    CentroidNode t;
    t.level = level;
    t.parent = parent;
    t.centroid = centroid_of_subtree(adj, root, removed);
    std::vector<char> seen(nn, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      t.nodes.push_back(v);
      for (int w : adj[v]) {
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::set<int> arcs;
    for (int v : t.nodes) arcs.insert(m.node(v).arcs.begin(), m.node(v).arcs.end());
    t.arcs.assign(arcs.begin(), arcs.end());

    const int id = int(idx.tree_.size());
    if (parent >= 0) idx.tree_[parent].children.push_back(id);
    idx.depth_ = std::max(idx.depth_, level + 1);
    // The parent's TAG entry at its level names this node for our arcs.
    if (parent >= 0) {
      const int pl = idx.tree_[parent].level;
      for (int a : t.arcs) {
        auto& tag = idx.tag_[a];
        if (int(tag.size()) <= pl) tag.resize(pl + 1, -1);
        tag[pl] = id;
      }
    }
    idx.build_guiding(t);
    removed[t.centroid] = 1;
    for (int w : adj[t.centroid]) {
      if (!removed[w]) queue.push_back({w, id, level + 1});
    }
    idx.tree_.push_back(std::move(t));
  }
  for (auto& tag : idx.tag_) tag.resize(idx.depth_, -1);
  return idx;
}

void SimpleQmecIndex::build_guiding(CentroidNode& t) const {
  const MedialAxis& m = axis_;
  std::set<int> in_star(t.arcs.begin(), t.arcs.end());
  std::set<int> own(t.nodes.begin(), t.nodes.end());

  std::set<double> radii;
  for (int a : t.arcs) {
    for (int v : {m.arc(a).u, m.arc(a).v}) {
      if (!m.is_leaf(v)) radii.insert(m.node(v).radius);
    }
  }
  t.radii.assign(radii.begin(), radii.end());

  const AxisNode& c = m.node(t.centroid);
  // A leaf MEC is a boundary point and never holds an interior q.
  if (m.is_leaf(t.centroid)) return;
  auto overlaps = [&](Point2 p, double r) { return dist(p, c.pos) <= c.radius + r + eps_geom(); };
  auto add_node = [&](int v) {
    t.guiding.push_back({m.at_node(v), v, forest_.mountains_of_node(v)});
  };
  add_node(t.centroid);

  struct Frame {
    int node, via;
    double best;  // largest radius on the path so far
  };
  std::vector<Frame> stack{{t.centroid, -1, c.radius}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    for (int a : m.node(f.node).arcs) {
      if (a == f.via || !in_star.count(a)) continue;
      const AxisArc& arc = m.arc(a);
      const int w = arc.other(f.node);
      const double rx = m.node(f.node).radius, rw = m.node(w).radius;
      bool open = true;
      if (rw > rx) {
        // Radii of the list realized strictly inside this rising arc.
        const double tx = arc.u == f.node ? 0.0 : 1.0, tw = 1.0 - tx;
        // Includes radius == best: the path climbing back to its running max
        // after a dip must be represented.
        auto it = f.best > rx ? radii.lower_bound(f.best) : radii.upper_bound(rx);
        for (; it != radii.end() && *it < rw; ++it) {
          double lo = tx, hi = tw;
          for (int k = 0; k < 60; ++k) {
            double mid = 0.5 * (lo + hi);
            if (m.clearance_on_arc(a, mid) < *it) {
              lo = mid;
            } else {
              hi = mid;
            }
          }
          AxisPoint p = m.at(a, 0.5 * (lo + hi));
          p.radius = *it;
          if (!overlaps(p.pos, p.radius)) {
            open = false;
            break;
          }
          t.guiding.push_back({p, -1, {forest_.mountain_of_arc(a)}});
        }
      }
      if (!open || !overlaps(m.node(w).pos, rw)) continue;
      if (rw >= f.best && !m.is_leaf(w)) add_node(w);
      if (own.count(w)) stack.push_back({w, a, std::max(f.best, rw)});
    }
  }

  std::vector<Circle> circles;
  std::map<double, std::size_t> per_radius;
  for (const auto& g : t.guiding) {
    circles.push_back(g.at.mec());
    t.max_same_radius = std::max(t.max_same_radius, ++per_radius[g.at.radius]);
  }
  t.lcq = LcqTree::build(CircleSet::from_circles(std::move(circles)));
}

std::size_t SimpleQmecIndex::max_same_radius() const {
  std::size_t best = 0;
  for (const auto& t : tree_) best = std::max(best, t.max_same_radius);
  return best;
}

AxisPoint SimpleQmecIndex::qic(int ti, Point2 q, SimpleQueryStats* stats) const {
  const CentroidNode& t = tree_[ti];
  auto rank = t.lcq.query_rank(q);
  if (!rank) throw GeometryError(ErrorKind::PreconditionViolated, "q is not in the centroid MEC");
  const CircleSet& set = t.lcq.circles();
  const double rho = set.circle(*rank).radius;
  AxisPoint best;
  best.radius = -1.0;
  std::set<int> searched;
  std::size_t same = 0;
  for (std::size_t r = 0; r < set.size(); ++r) {
    if (set.circle(r).radius != rho || !circle_contains(set.circle(r), q)) continue;
    ++same;
    const GuidingCircle& g = t.guiding[std::size_t(set.id(r))];
    for (int mt : g.mountains) {
      searched.insert(mt);
      AxisPoint x = forest_.mim_query(axis_, mt, g.at, q);
      if (x.radius > best.radius) best = x;
    }
  }
  if (stats) {
    stats->same_radius = same;
    stats->mountains = searched.size();
  }
  return best;
}

AxisPoint SimpleQmecIndex::query_point(Point2 q, SimpleQueryStats* stats) const {
  const AxisPoint y = axis_.ray_point(q);
  int ti = 0;
  int levels = 0;
  while (ti >= 0) {
    ++levels;
    const CentroidNode& t = tree_[ti];
    if (!t.guiding.empty() && circle_contains(axis_.at_node(t.centroid).mec(), q)) {
      if (stats) stats->levels = levels;
      return qic(ti, q, stats);
    }
    ti = tag_[y.arc][t.level];
  }
  // q avoids every centroid MEC on the way down: all centers whose MEC holds
  // q sit inside y's arc, so one mountain search from y finishes the job.
  if (stats) {
    stats->levels = levels;
    stats->same_radius = 0;
    stats->mountains = 1;
    stats->fallback = true;
  }
  return forest_.mim_query(axis_, forest_.mountain_of_arc(y.arc), y, q);
}

QueryAnswer SimpleQmecIndex::query(Point2 q, SimpleQueryStats* stats) const {
  const Polygon& poly = axis_.polygon();
  if (point_in_polygon(poly, q) != Location::Inside || boundary_distance(poly, q) <= eps_geom()) {
    return QueryAnswer::unbounded();
  }
  AxisPoint x = query_point(q, stats);
  return QueryAnswer::bounded(x.mec(), x.arc);
}

}  // namespace esq
