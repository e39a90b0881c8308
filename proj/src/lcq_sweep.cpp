#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "esq/lcq.hpp"

namespace esq {

namespace {

struct Event {
  Point2 p;
  int circle = -1;  // start/end events
  int kind = 0;     // 0 start, 1 end, 2 crossing
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

double LcqArrangement::arc_y(int arc, double x) const {
  const Circle& c = set_.circle(std::size_t(arc / 2));
  double dx = x - c.center.x;
  double h = std::sqrt(std::max(0.0, c.radius * c.radius - dx * dx));
  return arc % 2 == 0 ? c.center.y + h : c.center.y - h;
}

LcqArrangement LcqArrangement::build(CircleSet set) {
  set.validate_no_triple_points();
  LcqArrangement a;
  a.set_ = std::move(set);
  const int n = int(a.set_.size());
  if (n == 0) return a;
  const double eps = eps_geom();

  std::vector<Event> events;
  events.reserve(2 * n);
  UnionFind uf(n);
  std::vector<std::vector<Point2>> on_circle(n);
  for (int i = 0; i < n; ++i) {
    const Circle& c = a.set_.circle(i);
    events.push_back({{c.center.x - c.radius, c.center.y}, i, 0});
    events.push_back({{c.center.x + c.radius, c.center.y}, i, 1});
    on_circle[i].push_back(events[events.size() - 2].p);
    on_circle[i].push_back(events.back().p);
  }
  std::vector<int> by_left(n);
  std::iota(by_left.begin(), by_left.end(), 0);
  auto left_x = [&](int i) { return a.set_.circle(i).center.x - a.set_.circle(i).radius; };
  std::sort(by_left.begin(), by_left.end(), [&](int x, int y) { return left_x(x) < left_x(y); });
  std::size_t crossings = 0;
  for (int s = 0; s < n; ++s) {
    const int i = by_left[s];
    const Circle& ci = a.set_.circle(i);
    for (int t = s + 1; t < n; ++t) {
      const int j = by_left[t];
      if (left_x(j) > ci.center.x + ci.radius) break;
      for (Point2 p : circle_circle_intersections(ci, a.set_.circle(j))) {
        events.push_back({p, -1, 2});
        on_circle[i].push_back(p);
        on_circle[j].push_back(p);
        uf.unite(i, j);
        ++crossings;
      }
    }
  }

  // Euler characteristic of the arrangement graph.
  {
    std::vector<Point2> all;
    for (const auto& e : events) all.push_back(e.p);
    auto lex = [](Point2 u, Point2 v) { return u.x < v.x || (u.x == v.x && u.y < v.y); };
    auto count_distinct = [&](std::vector<Point2> pts) {
      std::sort(pts.begin(), pts.end(), lex);
      std::size_t k = 0;
      for (std::size_t m = 0; m < pts.size(); ++m) {
        bool dup = false;
        for (std::size_t back = m; back-- > 0;) {
          if (pts[m].x - pts[back].x > eps) break;
          if (dist(pts[m], pts[back]) <= eps) {
            dup = true;
            break;
          }
        }
        if (!dup) ++k;
      }
      return k;
    };
    a.stats_.vertices = count_distinct(all);
    std::size_t edges = 0;
    for (int i = 0; i < n; ++i) edges += count_distinct(on_circle[i]);
    a.stats_.edges = edges;
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(uf.find(i));
    a.stats_.components = roots.size();
    a.stats_.faces = a.stats_.edges + a.stats_.components + 1 - a.stats_.vertices;
  }
  (void)crossings;

  std::sort(events.begin(), events.end(), [](const Event& u, const Event& v) {
    if (u.p.x != v.p.x) return u.p.x < v.p.x;
    if (u.p.y != v.p.y) return u.p.y < v.p.y;
    return u.circle < v.circle;
  });
  a.stats_.events = events.size();

  // Group events at a common point.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  {
    std::vector<bool> used(events.size(), false);
    std::vector<std::size_t> order;
    for (std::size_t e = 0; e < events.size(); ++e) {
      if (used[e]) continue;
      std::size_t start = order.size();
      order.push_back(e);
      used[e] = true;
      for (std::size_t f = e + 1; f < events.size() && events[f].p.x - events[e].p.x <= eps; ++f) {
        if (!used[f] && dist(events[f].p, events[e].p) <= eps) {
          order.push_back(f);
          used[f] = true;
        }
      }
      groups.push_back({start, order.size()});
    }
    std::vector<Event> reordered;
    reordered.reserve(events.size());
    for (std::size_t e : order) reordered.push_back(events[e]);
    events.swap(reordered);
  }

  std::vector<int> arcs;                 // status, bottom to top
  std::vector<std::multiset<int>> tau{{}};  // cells: tau[k] lies below arcs[k]

  auto ids_of = [&]() {
    std::vector<int> ids(tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k) ids[k] = tau[k].empty() ? -1 : *tau[k].begin();
    return ids;
  };
  auto cross = [](std::multiset<int>& t, int arc) {
    // Moving upward across a lower arc enters the disk; across an upper arc leaves it.
    if (arc % 2 == 1) {
      t.insert(arc / 2);
    } else {
      auto it = t.find(arc / 2);
      if (it != t.end()) t.erase(it);
    }
  };

  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto [gb, ge] = groups[g];
    const Point2 p = events[gb].p;
    double x_next = std::numeric_limits<double>::infinity();
    for (std::size_t h = g + 1; h < groups.size(); ++h) {
      if (events[groups[h].first].p.x > p.x) {
        x_next = events[groups[h].first].p.x;
        break;
      }
    }
    const double xr = std::isfinite(x_next) ? 0.5 * (p.x + x_next) : p.x + 1.0;

    std::vector<int> starting, ending;
    for (std::size_t e = gb; e < ge; ++e) {
      if (events[e].kind == 0) starting.push_back(events[e].circle);
      if (events[e].kind == 1) ending.push_back(events[e].circle);
    }

    // Block of status arcs through p.
    const double tol = 16.0 * eps;
    std::size_t lo = arcs.size(), hi = 0;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const Circle& c = a.set_.circle(std::size_t(arcs[k] / 2));
      if (std::fabs(dist(p, c.center) - c.radius) > tol) continue;
      bool upper = arcs[k] % 2 == 0;
      if ((upper && p.y < c.center.y - tol) || (!upper && p.y > c.center.y + tol)) continue;
      lo = std::min(lo, k);
      hi = std::max(hi, k + 1);
    }
    if (lo >= hi) {
      lo = hi = std::size_t(std::partition_point(arcs.begin(), arcs.end(), [&](int arc) {
                              return a.arc_y(arc, p.x) < p.y;
                            }) -
                            arcs.begin());
    }

    std::vector<int> block(arcs.begin() + lo, arcs.begin() + hi);
    const bool pure_swap = starting.empty() && ending.empty() && block.size() == 2;
    for (int c : ending) {
      block.erase(std::remove_if(block.begin(), block.end(), [&](int arc) { return arc / 2 == c; }),
                  block.end());
    }
    for (int c : starting) {
      block.push_back(2 * c);
      block.push_back(2 * c + 1);
    }
    std::sort(block.begin(), block.end(), [&](int u, int v) {
      double yu = a.arc_y(u, xr), yv = a.arc_y(v, xr);
      if (yu != yv) return yu < yv;
      return u < v;
    });

    if (pure_swap) {
      // Only the cell between the two arcs changes: undo the old lower arc,
      // apply the new one.
      std::multiset<int>& mid = tau[lo + 1];
      int old_lower = arcs[lo];
      if (old_lower % 2 == 1) {
        auto it = mid.find(old_lower / 2);
        if (it != mid.end()) mid.erase(it);
      } else {
        mid.insert(old_lower / 2);
      }
      cross(mid, block[0]);
      arcs[lo] = block[0];
      arcs[lo + 1] = block[1];
    } else {
      // Cells lo..hi (below, between and above the old block) are replaced
      // by the cells around the new block.
      std::vector<std::multiset<int>> fresh{tau[lo]};
      std::multiset<int> running = tau[lo];
      for (int arc : block) {
        cross(running, arc);
        fresh.push_back(running);
      }
      tau.erase(tau.begin() + lo, tau.begin() + hi + 1);
      tau.insert(tau.begin() + lo, fresh.begin(), fresh.end());
      arcs.erase(arcs.begin() + lo, arcs.begin() + hi);
      arcs.insert(arcs.begin() + lo, block.begin(), block.end());
    }

    if (std::isfinite(x_next) &&
        (g + 1 == groups.size() || events[groups[g + 1].first].p.x > p.x)) {
      a.slab_x_.push_back(p.x);
      a.slab_arcs_.push_back(arcs);
      a.slab_ids_.push_back(ids_of());
    }
  }
  if (!a.slab_x_.empty()) a.slab_x_.push_back(events[groups.back().first].p.x);
  a.stats_.slabs = a.slab_arcs_.size();
  return a;
}

std::optional<std::size_t> LcqArrangement::locate_in_slab(std::size_t slab, Point2 q,
                                                          std::vector<int>& candidates) const {
  const auto& arcs = slab_arcs_[slab];
  const auto& ids = slab_ids_[slab];
  std::size_t cell = std::size_t(
      std::partition_point(arcs.begin(), arcs.end(), [&](int arc) { return arc_y(arc, q.x) <= q.y; }) -
      arcs.begin());
  candidates.push_back(ids[cell]);
  const double tol = 4.0 * eps_geom();
  // On an arc: the cells on both sides are candidates.
  if (cell > 0 && q.y - arc_y(arcs[cell - 1], q.x) <= tol) candidates.push_back(ids[cell - 1]);
  if (cell < arcs.size() && arc_y(arcs[cell], q.x) - q.y <= tol) candidates.push_back(ids[cell + 1]);
  return ids[cell] < 0 ? std::nullopt : std::optional<std::size_t>(std::size_t(ids[cell]));
}

std::optional<std::size_t> LcqArrangement::query_rank(Point2 q) const {
  if (slab_arcs_.empty()) return std::nullopt;
  const double tol = 4.0 * eps_geom();
  if (q.x < slab_x_.front() - tol || q.x > slab_x_.back() + tol) return std::nullopt;
  std::size_t s = std::size_t(std::upper_bound(slab_x_.begin(), slab_x_.end(), q.x) - slab_x_.begin());
  s = s == 0 ? 0 : s - 1;
  s = std::min(s, slab_arcs_.size() - 1);
  std::vector<int> cand;
  locate_in_slab(s, q, cand);
  if (s > 0 && q.x - slab_x_[s] <= tol) locate_in_slab(s - 1, q, cand);
  if (s + 1 < slab_arcs_.size() && slab_x_[s + 1] - q.x <= tol) locate_in_slab(s + 1, q, cand);
  std::optional<std::size_t> best;
  for (int r : cand) {
    if (r < 0) continue;
    if (!circle_contains(set_.circle(std::size_t(r)), q)) continue;
    if (!best || std::size_t(r) < *best) best = std::size_t(r);
  }
  return best;
}

QueryAnswer LcqArrangement::query(Point2 q) const {
  auto r = query_rank(q);
  if (!r) return QueryAnswer::null();
  return QueryAnswer::bounded(set_.circle(*r), set_.id(*r));
}

}  // namespace esq
