#pragma once

// Largest empty circle containing a query point inside a simple polygon.
//
// A centroid decomposition of the medial axis drives the query. At every
// centroid v we keep the guiding circles: MECs centered in v's subtree that
// overlap MEC_v, are reached from v without passing a larger MEC, and have
// a radius from the node radii of the subtree. If q lies in MEC_v the
// largest guiding circles containing q point at the mountains holding the
// answer; otherwise q's TAG entry names the child subtree to descend into.

#include <vector>

#include "esq/lcq.hpp"
#include "esq/medial_axis.hpp"
#include "esq/mountains.hpp"

namespace esq {

struct GuidingCircle {
  AxisPoint at;               // radius is exactly the guiding radius
  int node = -1;              // axis node, or -1 for a point inside an arc
  std::vector<int> mountains;
};

struct CentroidNode {
  int centroid = -1;  // axis node
  int level = 0;
  int parent = -1;
  std::vector<int> nodes;  // the component of the axis this centroid splits
  std::vector<int> arcs;   // arcs with at least one end in `nodes`
  std::vector<int> children;
  std::vector<double> radii;  // guiding radii, ascending
  std::vector<GuidingCircle> guiding;
  LcqTree lcq;  // over `guiding`; circle ids index into it
  std::size_t max_same_radius = 0;
};

struct SimpleQueryStats {
  int levels = 0;              // centroid levels visited
  std::size_t same_radius = 0; // guiding circles of the answer radius containing q
  std::size_t mountains = 0;   // mountains searched
  bool fallback = false;       // no centroid MEC contained q
};

class SimpleQmecIndex {
 public:
  /// Throws NotSimple from polygon construction, DegenerateInput when the
  /// medial axis fails or two internal nodes share a clearance.
  static SimpleQmecIndex build(const Polygon& poly);

  QueryAnswer query(Point2 q, SimpleQueryStats* stats = nullptr) const;
  /// q strictly inside. Throws OutsidePolygon.
  AxisPoint query_point(Point2 q, SimpleQueryStats* stats = nullptr) const;
  /// Largest MEC containing q when q lies in the MEC of centroid node t.
  AxisPoint qic(int t, Point2 q, SimpleQueryStats* stats = nullptr) const;

  const MedialAxis& axis() const { return axis_; }
  const MountainForest& mountains() const { return forest_; }
  const std::vector<CentroidNode>& tree() const { return tree_; }
  int depth() const { return depth_; }
  /// Child centroid node per level for the arc, -1 where the descent stops.
  const std::vector<int>& tag(int arc) const { return tag_[arc]; }
  std::size_t max_same_radius() const;

 private:
  void build_guiding(CentroidNode& t) const;

  MedialAxis axis_;
  MountainForest forest_;
  std::vector<CentroidNode> tree_;
  std::vector<std::vector<int>> tag_;
  int depth_ = 0;
};

}  // namespace esq
