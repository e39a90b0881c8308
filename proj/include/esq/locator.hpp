#pragma once

// Point location in a planar subdivision whose region boundaries are
// x-monotone curve pieces.
//
// Each region contributes the pieces of its *upper* boundary, tagged with
// the region's label. The region containing q is the label of the nearest
// tagged piece above q. Pieces live in a segment tree over x; each tree node
// keeps the pieces spanning its whole x-interval sorted bottom to top, so a
// query costs O(log^2 n) with O(n log n) storage.

#include <vector>

#include "esq/curve.hpp"

namespace esq {

class PlanarLocator {
 public:
  static constexpr int kOutside = -1;

  /// Adds the part of `curve` on t in [t0, t1] (must be x-monotone) as an
  /// upper boundary of region `label`.
  void add_upper_boundary(const Curve& curve, double t0, double t1, int label);

  /// Splits `curve` into x-monotone pieces and keeps those along which the
  /// region lies below. `ccw` gives the traversal sense of the boundary the
  /// curve belongs to.
  void add_region_boundary(const Curve& curve, bool ccw, int label);

  void build();

  int locate(Point2 q) const;

  std::size_t piece_count() const { return pieces_.size(); }

 private:
  struct Piece {
    Curve curve;
    double t0 = 0.0;
    double t1 = 1.0;
    double x0 = 0.0;  // x at the left end
    double x1 = 0.0;
    int label = kOutside;
  };

  double y_at(const Piece& piece, double x) const;
  void insert(int node, int lo, int hi, int piece, int a, int b);

  std::vector<Piece> pieces_;
  std::vector<double> xs_;
  std::vector<std::vector<int>> nodes_;
  bool built_ = false;
};

}  // namespace esq
