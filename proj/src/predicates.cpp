#include "esq/predicates.hpp"

#include <cmath>
#include <vector>

namespace esq {
namespace {

// Nonoverlapping expansion: components in increasing magnitude whose exact
// sum is the represented value.
class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(double v) {
    if (v != 0.0) terms_.push_back(v);
  }

  static Expansion difference(double a, double b) {
    double x = a - b;
    double bv = a - x;
    double av = x + bv;
    double br = bv - b;
    double ar = a - av;
    Expansion e;
    e.push(ar + br);
    e.push(x);
    return e;
  }

  Expansion operator+(const Expansion& other) const {
    Expansion out = *this;
    for (double t : other.terms_) out.grow(t);
    return out;
  }

  Expansion operator-(const Expansion& other) const {
    Expansion out = *this;
    for (double t : other.terms_) out.grow(-t);
    return out;
  }

  Expansion operator*(const Expansion& other) const {
    Expansion out;
    for (double b : other.terms_) {
      for (double a : terms_) {
        double x = a * b;
        double y = std::fma(a, b, -x);
        out.grow(y);
        out.grow(x);
      }
    }
    return out;
  }

  int sign() const {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (*it > 0.0) return 1;
      if (*it < 0.0) return -1;
    }
    return 0;
  }

 private:
  void push(double v) {
    if (v != 0.0) terms_.push_back(v);
  }

  // Shewchuk's grow-expansion with zero elimination.
  void grow(double b) {
    std::vector<double> next;
    next.reserve(terms_.size() + 1);
    double q = b;
    for (double e : terms_) {
      double x = q + e;
      double bv = x - q;
      double av = x - bv;
      double br = e - bv;
      double ar = q - av;
      double h = ar + br;
      if (h != 0.0) next.push_back(h);
      q = x;
    }
    if (q != 0.0) next.push_back(q);
    terms_ = std::move(next);
  }

  std::vector<double> terms_;
};

Expansion product(double a, double b) {
  return Expansion(a) * Expansion(b);
}

int orient_exact(Point2 a, Point2 b, Point2 c) {
  Expansion det = product(a.x, b.y) - product(a.x, c.y) - product(c.x, b.y) -
                  product(a.y, b.x) + product(a.y, c.x) + product(c.y, b.x);
  return det.sign();
}

int incircle_exact(Point2 a, Point2 b, Point2 c, Point2 d) {
  Expansion adx = Expansion::difference(a.x, d.x);
  Expansion ady = Expansion::difference(a.y, d.y);
  Expansion bdx = Expansion::difference(b.x, d.x);
  Expansion bdy = Expansion::difference(b.y, d.y);
  Expansion cdx = Expansion::difference(c.x, d.x);
  Expansion cdy = Expansion::difference(c.y, d.y);
  Expansion alift = adx * adx + ady * ady;
  Expansion blift = bdx * bdx + bdy * bdy;
  Expansion clift = cdx * cdx + cdy * cdy;
  Expansion det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                  clift * (adx * bdy - bdx * ady);
  return det.sign();
}

}  // namespace

double orient2d_value(Point2 a, Point2 b, Point2 c) {
  return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
}

int orient2d(Point2 a, Point2 b, Point2 c) {
  double left = (a.x - c.x) * (b.y - c.y);
  double right = (a.y - c.y) * (b.x - c.x);
  double det = left - right;
  double bound = 3.3306690738754716e-16 * (std::fabs(left) + std::fabs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orient_exact(a, b, c);
}

int incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
  double adx = a.x - d.x, ady = a.y - d.y;
  double bdx = b.x - d.x, bdy = b.y - d.y;
  double cdx = c.x - d.x, cdy = c.y - d.y;
  double bc = bdx * cdy - cdx * bdy;
  double ca = cdx * ady - adx * cdy;
  double ab = adx * bdy - bdx * ady;
  double alift = adx * adx + ady * ady;
  double blift = bdx * bdx + bdy * bdy;
  double clift = cdx * cdx + cdy * cdy;
  double det = alift * bc + blift * ca + clift * ab;
  double permanent = (std::fabs(bdx * cdy) + std::fabs(cdx * bdy)) * alift +
                     (std::fabs(cdx * ady) + std::fabs(adx * cdy)) * blift +
                     (std::fabs(adx * bdy) + std::fabs(bdx * ady)) * clift;
  double bound = 1.1102230246251577e-15 * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return incircle_exact(a, b, c, d);
}

}  // namespace esq
