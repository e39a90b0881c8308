#include "esq/mountains.hpp"

#include <algorithm>
#include <cmath>

namespace esq {

bool mec_contains(const AxisPoint& x, Point2 q) {
  return dist(x.pos, q) <= x.radius + eps_geom() * std::max(1.0, x.radius);
}

MountainForest MountainForest::build(const MedialAxis& axis) {
  MountainForest f;
  const int nn = int(axis.nodes().size()), na = int(axis.arcs().size());
  f.valley_.assign(nn, false);
  for (int v = 0; v < nn; ++v) {
    if (axis.is_leaf(v)) continue;
    bool low = true;
    for (int ai : axis.node(v).arcs) {
      low = low && axis.node(axis.arc(ai).other(v)).radius >= axis.node(v).radius;
    }
    f.valley_[v] = low;
  }

  f.arc_mountain_.assign(na, -1);
  f.node_mountains_.assign(nn, {});
  for (int a0 = 0; a0 < na; ++a0) {
    if (f.arc_mountain_[a0] >= 0) continue;
    const int id = int(f.mountains_.size());
    Mountain mt;
    std::vector<int> stack{a0};
    f.arc_mountain_[a0] = id;
    while (!stack.empty()) {
      int ai = stack.back();
      stack.pop_back();
      mt.arcs.push_back(ai);
      for (int end : {axis.arc(ai).u, axis.arc(ai).v}) {
        if (f.valley_[end]) continue;
        for (int bj : axis.node(end).arcs) {
          if (f.arc_mountain_[bj] < 0) {
            f.arc_mountain_[bj] = id;
            stack.push_back(bj);
          }
        }
      }
    }
    for (int ai : mt.arcs) {
      for (int end : {axis.arc(ai).u, axis.arc(ai).v}) {
        auto& owners = f.node_mountains_[end];
        if (std::find(owners.begin(), owners.end(), id) == owners.end()) {
          owners.push_back(id);
          mt.nodes.push_back(end);
          if (f.valley_[end]) mt.valleys.push_back(end);
        }
      }
    }
    // Peak: largest clearance, ties toward larger x then larger y.
    mt.peak = mt.nodes.front();
    for (int v : mt.nodes) {
      const AxisNode &a = axis.node(v), &b = axis.node(mt.peak);
      if (a.radius > b.radius ||
          (a.radius == b.radius && (a.pos.x > b.pos.x || (a.pos.x == b.pos.x && a.pos.y > b.pos.y)))) {
        mt.peak = v;
      }
    }
    f.mountains_.push_back(std::move(mt));
  }

  // Root every mountain at its peak, with ancestor tables for lifting.
  f.info_.resize(f.mountains_.size());
  for (std::size_t id = 0; id < f.mountains_.size(); ++id) {
    const Mountain& mt = f.mountains_[id];
    auto& info = f.info_[id];
    std::vector<int> order{mt.peak};
    info[mt.peak] = {};
    for (std::size_t k = 0; k < order.size(); ++k) {
      int v = order[k];
      if (f.valley_[v] && v != mt.peak) continue;
      for (int ai : axis.node(v).arcs) {
        if (f.arc_mountain_[ai] != int(id)) continue;
        int w = axis.arc(ai).other(v);
        if (info.count(w)) continue;
        info[w] = {v, info[v].depth + 1, {}};
        order.push_back(w);
      }
    }
    // BFS order fills every ancestor table before its descendants read it.
    for (int v : order) {
      NodeInfo& ni = info[v];
      f.max_depth_ = std::max(f.max_depth_, ni.depth + 1);
      if (ni.parent < 0) continue;
      ni.up.push_back(ni.parent);
      for (std::size_t j = 0;; ++j) {
        const auto& mid = info[ni.up[j]].up;
        if (j >= mid.size()) break;
        ni.up.push_back(mid[j]);
      }
    }
  }
  return f;
}

int MountainForest::parent(int mountain, int node) const {
  return info_[mountain].at(node).parent;
}

std::vector<int> MountainForest::path_to_peak(int mountain, int node) const {
  std::vector<int> path;
  for (int x = node; x >= 0; x = info_[mountain].at(x).parent) path.push_back(x);
  return path;
}

int MountainForest::peakward_end(const MedialAxis& axis, int arc) const {
  const AxisArc& a = axis.arc(arc);
  return info_[arc_mountain_[arc]].at(a.u).parent == a.v ? a.v : a.u;
}

AxisPoint MountainForest::rising_search(const MedialAxis& axis, int mountain, const AxisPoint& start,
                                        Point2 q) const {
  if (!mec_contains(start, q)) {
    throw GeometryError(ErrorKind::PreconditionViolated, "MEC at the start point does not contain q");
  }
  AxisPoint from = start;
  if (arc_mountain_[from.arc] != mountain) {
    // A valley node reached through an arc of a neighbouring mountain.
    const AxisArc& sa = axis.arc(from.arc);
    const int node = from.t < 0.5 ? sa.u : sa.v;
    for (int ai : axis.node(node).arcs) {
      if (arc_mountain_[ai] == mountain) from = {ai, axis.arc(ai).u == node ? 0.0 : 1.0, from.pos, from.radius};
    }
    if (arc_mountain_[from.arc] != mountain) {
      throw GeometryError(ErrorKind::PreconditionViolated, "start point is not in the mountain");
    }
  }
  const auto& info = info_[mountain];
  const int w = peakward_end(axis, from.arc);
  const double t_w = w == axis.arc(from.arc).v ? 1.0 : 0.0;

  // Bisection on one arc between a feasible and an infeasible parameter.
  auto bisect = [&](int arc, double t_in, double t_out) {
    for (int it = 0; it < 60 && std::fabs(t_out - t_in) > 1e-15; ++it) {
      double mid = 0.5 * (t_in + t_out);
      AxisPoint x = axis.at(arc, mid);
      if (dist(x.pos, q) <= x.radius) {
        t_in = mid;
      } else {
        t_out = mid;
      }
    }
    return axis.at(arc, t_in);
  };

  if (from.t != t_w && !mec_contains(axis.at_node(w), q)) return bisect(from.arc, from.t, t_w);

  // Feasible nodes form a contiguous stretch from w toward the peak; lift to
  // its top.
  int inside = w;
  for (int j = int(info.at(w).up.size()) - 1; j >= 0; --j) {
    const auto& up = info.at(inside).up;
    if (j < int(up.size()) && mec_contains(axis.at_node(up[j]), q)) inside = up[j];
  }
  const int outside = info.at(inside).parent;
  if (outside < 0) return axis.at_node(inside);
  const int arc = axis.arc_between(inside, outside);
  const bool forward = axis.arc(arc).u == inside;
  return bisect(arc, forward ? 0.0 : 1.0, forward ? 1.0 : 0.0);
}

int centroid_of_subtree(const std::vector<std::vector<int>>& adj, int root, const std::vector<char>& removed) {
  // Iterative DFS for parent order and subtree sizes.
  std::vector<int> order{root}, par{-1};
  std::unordered_map<int, int> index{{root, 0}};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int w : adj[order[k]]) {
      if (removed[w] || w == par[k]) continue;
      index[w] = int(order.size());
      order.push_back(w);
      par.push_back(order[k]);
    }
  }
  const int n = int(order.size());
  std::vector<int> size(n, 1);
  for (int k = n - 1; k > 0; --k) size[index[par[k]]] += size[k];
  for (int k = 0; k < n; ++k) {
    int largest = n - size[k];
    for (int w : adj[order[k]]) {
      if (!removed[w] && w != par[k]) largest = std::max(largest, size[index[w]]);
    }
    if (2 * largest <= n) return order[k];
  }
  return root;
}

}  // namespace esq
