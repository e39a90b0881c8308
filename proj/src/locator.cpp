#include "esq/locator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace esq {

void PlanarLocator::add_upper_boundary(const Curve& curve, double t0, double t1, int label) {
  Point2 p0 = curve_point(curve, t0);
  Point2 p1 = curve_point(curve, t1);
  if (p0.x == p1.x) return;  // vertical pieces never bound a region from above
  if (p1.x < p0.x) {
    std::swap(t0, t1);
    std::swap(p0, p1);
  }
  pieces_.push_back({curve, t0, t1, p0.x, p1.x, label});
  built_ = false;
}

void PlanarLocator::add_region_boundary(const Curve& curve, bool ccw, int label) {
  for (auto [ta, tb] : x_monotone_ranges(curve)) {
    double xa = curve_point(curve, ta).x;
    double xb = curve_point(curve, tb).x;
    if (xa == xb) continue;
    bool leftward = xb < xa;
    if (leftward == ccw) add_upper_boundary(curve, ta, tb, label);
  }
}

double PlanarLocator::y_at(const Piece& piece, double x) const {
  if (const auto* l = std::get_if<LineCurve>(&piece.curve)) {
    Point2 a = l->a, b = l->b;
    if (a.x == b.x) return std::max(a.y, b.y);
    double s = (x - a.x) / (b.x - a.x);
    return a.y + s * (b.y - a.y);
  }
  double lo = piece.t0, hi = piece.t1;  // x increases from lo to hi
  for (int it = 0; it < 64; ++it) {
    double mid = 0.5 * (lo + hi);
    if (curve_point(piece.curve, mid).x < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return curve_point(piece.curve, 0.5 * (lo + hi)).y;
}

void PlanarLocator::insert(int node, int lo, int hi, int piece, int a, int b) {
  if (b <= lo || hi <= a) return;
  if (a <= lo && hi <= b) {
    nodes_[node].push_back(piece);
    return;
  }
  int mid = (lo + hi) / 2;
  insert(2 * node, lo, mid, piece, a, b);
  insert(2 * node + 1, mid, hi, piece, a, b);
}

void PlanarLocator::build() {
  xs_.clear();
  for (const auto& p : pieces_) {
    xs_.push_back(p.x0);
    xs_.push_back(p.x1);
  }
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
  nodes_.assign(xs_.size() < 2 ? 0 : 4 * xs_.size(), {});
  if (xs_.size() < 2) {
    built_ = true;
    return;
  }
  const int m = int(xs_.size()) - 1;
  auto index_of = [&](double x) {
    return int(std::lower_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
  };
  for (int i = 0; i < int(pieces_.size()); ++i) {
    insert(1, 0, m, i, index_of(pieces_[i].x0), index_of(pieces_[i].x1));
  }
  // Sort each node's pieces bottom to top at the node's mid abscissa.
  std::vector<std::pair<int, std::pair<int, int>>> stack{{1, {0, m}}};
  std::vector<double> keys;
  while (!stack.empty()) {
    auto [node, range] = stack.back();
    stack.pop_back();
    auto [lo, hi] = range;
    auto& list = nodes_[node];
    if (!list.empty()) {
      double xm = 0.5 * (xs_[lo] + xs_[hi]);
      std::vector<std::pair<double, int>> keyed;
      keyed.reserve(list.size());
      for (int p : list) keyed.push_back({y_at(pieces_[p], xm), p});
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t k = 0; k < list.size(); ++k) list[k] = keyed[k].second;
    }
    if (hi - lo > 1) {
      int mid = (lo + hi) / 2;
      stack.push_back({2 * node, {lo, mid}});
      stack.push_back({2 * node + 1, {mid, hi}});
    }
  }
  built_ = true;
}

int PlanarLocator::locate(Point2 q) const {
  if (xs_.size() < 2 || q.x < xs_.front() || q.x >= xs_.back()) return kOutside;
  const int m = int(xs_.size()) - 1;
  const int leaf = int(std::upper_bound(xs_.begin(), xs_.end(), q.x) - xs_.begin()) - 1;
  double best_y = std::numeric_limits<double>::infinity();
  int best_label = kOutside;
  int node = 1, lo = 0, hi = m;
  while (true) {
    const auto& list = nodes_[node];
    // First piece strictly above q.
    std::size_t a = 0, b = list.size();
    while (a < b) {
      std::size_t mid = (a + b) / 2;
      if (y_at(pieces_[list[mid]], q.x) > q.y) {
        b = mid;
      } else {
        a = mid + 1;
      }
    }
    if (a < list.size()) {
      double y = y_at(pieces_[list[a]], q.x);
      if (y < best_y) {
        best_y = y;
        best_label = pieces_[list[a]].label;
      }
    }
    if (hi - lo <= 1) break;
    int mid = (lo + hi) / 2;
    if (leaf < mid) {
      node = 2 * node;
      hi = mid;
    } else {
      node = 2 * node + 1;
      lo = mid;
    }
  }
  return best_label;
}

}  // namespace esq
