#pragma once

// Orientation and incircle signs. A floating-point filter answers most
// calls; when its error bound cannot certify the sign, the determinant is
// re-evaluated exactly with floating-point expansions.

#include "esq/geometry.hpp"

namespace esq {

/// +1 when c lies left of the directed line a->b, -1 right, 0 collinear.
int orient2d(Point2 a, Point2 b, Point2 c);

/// +1 when d lies strictly inside the circle through a, b, c (ccw), -1
/// outside, 0 cocircular.
int incircle(Point2 a, Point2 b, Point2 c, Point2 d);

/// Raw determinant value for orient2d (twice the signed triangle area).
double orient2d_value(Point2 a, Point2 b, Point2 c);

}  // namespace esq
