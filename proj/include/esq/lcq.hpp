#pragma once

// Largest-circle queries: report the largest circle of a fixed set that
// contains a query point. Two interchangeable structures:
//
//  * LcqTree: balanced tree over the radius order; every node answers "is q
//    in the union of my circles" with one point location in the power
//    diagram of its circles. O(log^2 n) per query.
//  * LcqArrangement: vertical sweep over the arrangement of circle arcs that
//    labels every cell with its largest covering circle; queries are two
//    binary searches over the stored slabs.
//
// "Largest" means larger radius, then smaller id.

#include <memory>
#include <optional>
#include <vector>

#include "esq/geometry.hpp"
#include "esq/locator.hpp"

namespace esq {

/// Circles sorted non-increasing by radius (ties: smaller id first).
class CircleSet {
 public:
  CircleSet() = default;

  /// Ids default to positions in `circles`. Throws DegenerateInput for
  /// coincident circles or non-positive radii.
  static CircleSet from_circles(std::vector<Circle> circles, std::vector<long> ids = {});

  std::size_t size() const { return circles_.size(); }
  bool empty() const { return circles_.empty(); }
  const Circle& circle(std::size_t rank) const { return circles_[rank]; }
  long id(std::size_t rank) const { return ids_[rank]; }
  const std::vector<Circle>& circles() const { return circles_; }

  /// Throws DegenerateInput if three circles pass through one point.
  void validate_no_triple_points() const;

 private:
  std::vector<Circle> circles_;
  std::vector<long> ids_;
};

/// Membership structure: power diagram of a group of circles plus a point
/// locator over its cells.
class PowerDiagram {
 public:
  PowerDiagram(const CircleSet& set, std::size_t lo, std::size_t hi);

  /// Rank (within the whole CircleSet) of the circle whose power cell holds q,
  /// or -1 outside the diagram's bounding box.
  long owner(Point2 q) const;
  bool union_contains(Point2 q) const;

  /// Non-empty cells as ccw polygons, indexed like cell_ranks().
  const std::vector<std::vector<Point2>>& cells() const { return cells_; }
  const std::vector<std::size_t>& cell_ranks() const { return cell_ranks_; }

 private:
  std::vector<std::vector<Point2>> cells_;
  std::vector<std::size_t> cell_ranks_;
  std::vector<Circle> cell_circles_;
  PlanarLocator locator_;
};

class LcqTree {
 public:
  struct Node {
    std::size_t lo = 0;  // rank range [lo, hi)
    std::size_t hi = 0;
    int left = -1;
    int right = -1;
    int depth = 1;
    std::unique_ptr<PowerDiagram> diagram;  // null for leaves
  };

  static LcqTree build(CircleSet set);

  /// BoundedCircle with witness = circle id, or Null.
  QueryAnswer query(Point2 q) const;
  /// Rank of the answer circle, if any.
  std::optional<std::size_t> query_rank(Point2 q) const;

  int depth() const;
  const CircleSet& circles() const { return set_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return nodes_.empty() ? -1 : 0; }
  bool node_contains(int node, Point2 q) const;

 private:
  int build_node(std::size_t lo, std::size_t hi, int depth);

  CircleSet set_;
  std::vector<Node> nodes_;
};

struct ArrangementStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t faces = 0;  // including the unbounded face
  std::size_t events = 0;
  std::size_t slabs = 0;
};

class LcqArrangement {
 public:
  /// Throws DegenerateInput when three circles share a point.
  static LcqArrangement build(CircleSet set);

  QueryAnswer query(Point2 q) const;
  std::optional<std::size_t> query_rank(Point2 q) const;

  const CircleSet& circles() const { return set_; }
  const ArrangementStats& stats() const { return stats_; }

 private:
  // Arc a belongs to circle a / 2; even arcs are upper halves.
  double arc_y(int arc, double x) const;
  std::optional<std::size_t> locate_in_slab(std::size_t slab, Point2 q,
                                            std::vector<int>& candidates) const;

  CircleSet set_;
  std::vector<double> slab_x_;               // slab s spans [slab_x_[s], slab_x_[s+1])
  std::vector<std::vector<int>> slab_arcs_;  // bottom to top
  std::vector<std::vector<int>> slab_ids_;   // rank per cell, -1 for none
  ArrangementStats stats_;
};

}  // namespace esq
