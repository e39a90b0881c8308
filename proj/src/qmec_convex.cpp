#include "esq/qmec_convex.hpp"

namespace esq {

ConvexQmecIndex ConvexQmecIndex::build(const Polygon& poly) {
  if (!poly.is_convex()) throw GeometryError(ErrorKind::NotConvex, "polygon is not convex");
  ConvexQmecIndex idx;
  idx.axis_ = MedialAxis::build(poly);
  idx.forest_ = MountainForest::build(idx.axis_);
  if (idx.forest_.mountains().size() != 1) {
    throw GeometryError(ErrorKind::DegenerateInput, "convex medial axis has an interior valley");
  }
  return idx;
}

AxisPoint ConvexQmecIndex::query_point(Point2 q) const {
  // The spoke through q ends at an axis point whose MEC contains q; the
  // answer lies on the rising path from there to the incenter.
  const auto at = axis_.locate(q);
  AxisPoint y = at.region >= 0 ? axis_.ray_point(at, q) : axis_.ray_point(q);
  if (!mec_contains(y, q)) y = axis_.nearest_point(q);
  return forest_.rising_search(axis_, 0, y, q);
}

QueryAnswer ConvexQmecIndex::query(Point2 q) const {
  // Inside a convex polygon the located site distance is the clearance, so
  // the inside test costs one point location instead of an edge scan.
  const auto at = axis_.locate(q);
  if (at.region < 0 || at.clearance <= eps_geom()) return QueryAnswer::unbounded();
  AxisPoint y = axis_.ray_point(at, q);
  if (!mec_contains(y, q)) y = axis_.nearest_point(q);
  const AxisPoint x = forest_.rising_search(axis_, 0, y, q);
  return QueryAnswer::bounded(x.mec(), x.arc);
}

}  // namespace esq
