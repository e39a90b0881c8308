#pragma once

// Largest empty circle containing a query point, among circles avoiding a
// planar point set. The largest vertex MEC holding q is found by LCQ; the
// answer is that circle or the best circle on one of the vertex's
// overlapping edges (or on the ray of an artificial vertex).

#include <vector>

#include "esq/exec.hpp"
#include "esq/lcq.hpp"
#include "esq/point_voronoi.hpp"

namespace esq {

struct PointsQueryStats {
  int vertex = -1;           // LCQ answer
  std::size_t edges_scanned = 0;
};

class PointsQmecIndex {
 public:
  static PointsQmecIndex build(std::span<const Point2> points, Exec exec = Exec::Parallel);

  /// UnboundedCircle for q outside or on the hull boundary. The witness is
  /// the Voronoi edge (or vertex, when the vertex MEC itself wins) id;
  /// vertex witnesses are offset by the edge count.
  QueryAnswer query(Point2 q, PointsQueryStats* stats = nullptr) const;

  const VoronoiDiagram& diagram() const { return vd_; }
  const LcqTree& lcq() const { return lcq_; }
  /// Overlapping edges of a finite vertex.
  const std::vector<int>& overlapping(int v) const { return overlap_[v]; }
  std::size_t max_overlapping() const;

 private:
  VoronoiDiagram vd_;
  LcqTree lcq_;
  std::vector<std::vector<int>> overlap_;
};

/// Overlapping edges of finite vertex v by breadth-first search through
/// vertices with smaller MECs.
std::vector<int> compute_overlapping_edges(const VoronoiDiagram& vd, int v);

}  // namespace esq
