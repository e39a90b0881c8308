#pragma once

// Largest empty circle containing a query point inside a convex polygon.

#include "esq/medial_axis.hpp"
#include "esq/mountains.hpp"

namespace esq {

class ConvexQmecIndex {
 public:
  /// Throws NotConvex, or DegenerateInput from the medial axis.
  static ConvexQmecIndex build(const Polygon& poly);

  /// UnboundedCircle for q outside or on the boundary. The witness is the
  /// axis arc holding the answer center.
  QueryAnswer query(Point2 q) const;
  AxisPoint query_point(Point2 q) const;

  const MedialAxis& axis() const { return axis_; }
  const MountainForest& mountains() const { return forest_; }
  /// Global incenter node.
  int root() const { return forest_.mountains().front().peak; }

 private:
  MedialAxis axis_;
  MountainForest forest_;
};

}  // namespace esq
