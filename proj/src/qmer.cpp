#include "esq/qmer.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace esq {

namespace {

void validate(std::span<const Point2> points, const AxisRect& region) {
  if (!(region.xmin < region.xmax && region.ymin < region.ymax)) {
    throw GeometryError(ErrorKind::DegenerateInput, "empty region");
  }
  std::vector<double> xs, ys;
  for (Point2 p : points) {
    if (!region.strictly_contains(p)) {
      throw GeometryError(ErrorKind::PreconditionViolated, "point not strictly inside the region");
    }
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() || std::adjacent_find(ys.begin(), ys.end()) != ys.end()) {
    throw GeometryError(ErrorKind::DegenerateInput, "points share an x or y coordinate");
  }
}

}  // namespace

bool mer_before(const AxisRect& a, const AxisRect& b) {
  if (a.area() != b.area()) return a.area() > b.area();
  return std::tie(a.xmin, a.ymin, a.xmax, a.ymax) < std::tie(b.xmin, b.ymin, b.xmax, b.ymax);
}

std::vector<AxisRect> enumerate_mers(std::span<const Point2> points, const AxisRect& region) {
  validate(points, region);
  std::vector<Point2> by_x(points.begin(), points.end());
  std::sort(by_x.begin(), by_x.end(), [](Point2 a, Point2 b) { return a.x < b.x; });
  const int n = int(by_x.size());
  std::vector<AxisRect> out;

  for (int i = 0; i < n; ++i) {
    const Point2 p = by_x[i];
    // Left side on p: the staircase of points to the right.
    double lo = region.ymin, hi = region.ymax;
    for (int j = i + 1; j < n; ++j) {
      const Point2 r = by_x[j];
      if (r.y <= lo || r.y >= hi) continue;
      out.push_back({p.x, r.x, lo, hi});
      (r.y > p.y ? hi : lo) = r.y;
    }
    out.push_back({p.x, region.xmax, lo, hi});

    // Right side on p, left side on the region boundary.
    lo = region.ymin, hi = region.ymax;
    for (int j = i - 1; j >= 0; --j) {
      const Point2 l = by_x[j];
      if (l.y <= lo || l.y >= hi) continue;
      (l.y > p.y ? hi : lo) = l.y;
    }
    out.push_back({region.xmin, p.x, lo, hi});
  }

  // Full-width slabs between consecutive heights.
  std::vector<double> ys{region.ymin, region.ymax};
  for (Point2 p : points) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  for (std::size_t k = 0; k + 1 < ys.size(); ++k) out.push_back({region.xmin, region.xmax, ys[k], ys[k + 1]});
  return out;
}

MerIndex MerIndex::build(std::span<const Point2> points, const AxisRect& region) {
  MerIndex idx;
  idx.region_ = region;
  idx.mers_ = enumerate_mers(points, region);
  std::sort(idx.mers_.begin(), idx.mers_.end(), mer_before);

  idx.xs_ = {region.xmin, region.xmax};
  idx.ys_ = {region.ymin, region.ymax};
  for (Point2 p : points) {
    idx.xs_.push_back(p.x);
    idx.ys_.push_back(p.y);
  }
  std::sort(idx.xs_.begin(), idx.xs_.end());
  std::sort(idx.ys_.begin(), idx.ys_.end());

  // Report-and-delete over cell centers: per row, the columns not yet assigned.
  const std::size_t cols = idx.columns(), rows = idx.rows();
  idx.cell_.assign(cols * rows, -1);
  std::vector<std::set<std::size_t>> open(rows);
  for (auto& row : open) {
    for (std::size_t i = 0; i < cols; ++i) row.insert(row.end(), i);
  }
  auto line = [](const std::vector<double>& v, double x) {
    return std::size_t(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  std::size_t left = cols * rows;
  for (std::size_t m = 0; m < idx.mers_.size() && left > 0; ++m) {
    const AxisRect& r = idx.mers_[m];
    const std::size_t c0 = line(idx.xs_, r.xmin), c1 = line(idx.xs_, r.xmax);
    const std::size_t r0 = line(idx.ys_, r.ymin), r1 = line(idx.ys_, r.ymax);
    for (std::size_t j = r0; j < r1; ++j) {
      auto& row = open[j];
      for (auto it = row.lower_bound(c0); it != row.end() && *it < c1; it = row.erase(it)) {
        idx.cell_[j * cols + *it] = int(m);
        --left;
      }
    }
  }
  if (left > 0) throw GeometryError(ErrorKind::PreconditionViolated, "cell without a covering rectangle");
  return idx;
}

QueryAnswer MerIndex::query(Point2 q) const {
  if (!region_.contains(q)) throw GeometryError(ErrorKind::OutsideRegion, "query outside region");
  // Cells whose closure holds q: one or two per axis.
  auto span_of = [](const std::vector<double>& v, double x) {
    auto it = std::upper_bound(v.begin(), v.end(), x);
    std::size_t hi = std::min<std::size_t>(it - v.begin(), v.size() - 1);
    std::size_t a = hi - 1, b = hi - 1;
    if (v[hi - 1] == x && hi >= 2) a = hi - 2;
    return std::pair{a, b};
  };
  const auto [i0, i1] = span_of(xs_, q.x);
  const auto [j0, j1] = span_of(ys_, q.y);
  int best = -1;
  for (std::size_t i = i0; i <= i1; ++i) {
    for (std::size_t j = j0; j <= j1; ++j) {
      const int m = cell_mer(i, j);
      if (best < 0 || m < best) best = m;
    }
  }
  return QueryAnswer::rectangle(mers_[best], best);
}

}  // namespace esq
