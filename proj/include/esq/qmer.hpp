#pragma once

// Largest empty axis-parallel rectangle containing a query point. The region
// is cut into cells by the lines through every input point; each cell lies
// wholly inside or outside every maximal empty rectangle, so one rectangle
// per cell answers every query in it.

#include <span>
#include <vector>

#include "esq/geometry.hpp"

namespace esq {

/// All maximal empty rectangles of `points` inside `region`, by staircase
/// sweeps. Throws DegenerateInput on shared x or y coordinates or an empty
/// region, PreconditionViolated for points not strictly inside the region.
std::vector<AxisRect> enumerate_mers(std::span<const Point2> points, const AxisRect& region);

/// Order used to pick among rectangles: larger area first, then smaller
/// (xmin, ymin, xmax, ymax).
bool mer_before(const AxisRect& a, const AxisRect& b);

class MerIndex {
 public:
  static MerIndex build(std::span<const Point2> points, const AxisRect& region);

  /// Throws OutsideRegion. Points on grid lines take the best rectangle of
  /// the cells they touch.
  QueryAnswer query(Point2 q) const;

  const AxisRect& region() const { return region_; }
  /// Sorted by mer_before; the witness of an answer indexes this list.
  const std::vector<AxisRect>& mers() const { return mers_; }
  const std::vector<double>& x_lines() const { return xs_; }
  const std::vector<double>& y_lines() const { return ys_; }
  std::size_t columns() const { return xs_.size() - 1; }
  std::size_t rows() const { return ys_.size() - 1; }
  /// MER id assigned to cell (column i, row j).
  int cell_mer(std::size_t i, std::size_t j) const { return cell_[j * columns() + i]; }
  AxisRect cell(std::size_t i, std::size_t j) const { return {xs_[i], xs_[i + 1], ys_[j], ys_[j + 1]}; }

 private:
  AxisRect region_;
  std::vector<AxisRect> mers_;
  std::vector<double> xs_, ys_;
  std::vector<int> cell_;
};

}  // namespace esq
