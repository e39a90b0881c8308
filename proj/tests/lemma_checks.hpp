#pragma once

// Brute-force checks of the structural lemmas, shared by the unit tests and
// the acceptance binary.

#include <vector>

#include "esq/medial_axis.hpp"
#include "esq/point_voronoi.hpp"
#include "esq/qmec_simple.hpp"

namespace esq::lemmas {

/// Points on the boundary of the lens a ∩ b; empty unless the circles cross.
std::vector<Point2> lens_samples(const Circle& a, const Circle& b, int count);

struct PathAudit {
  int pairs = 0;              // overlapping finite vertex pairs examined
  int wrong_count = 0;        // pairs without exactly one lens-holding path
  int procedure_failures = 0; // unique_path left the lens or missed c2
};

/// For every ordered pair of finite Voronoi vertices whose MECs overlap,
/// enumerates the simple paths on which every vertex MEC holds the lens.
/// Rays meet at a hub standing for the point at infinity.
PathAudit audit_unique_paths(const VoronoiDiagram& vd, int lens_points = 200);

/// Number of connected pieces of {x on the axis : q in MEC_x}, sampled at
/// `per_arc` interior points per arc plus the nodes and the ray point of q.
int mq_components(const MedialAxis& axis, Point2 q, int per_arc = 500);

/// Centroid-tree nodes with a child component larger than half (rounded up)
/// of the parent component, plus nodes whose children do not partition it.
int centroid_split_violations(const SimpleQmecIndex& idx);

}  // namespace esq::lemmas
