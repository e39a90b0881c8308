#include "esq/oracles.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <tuple>

namespace esq {

QueryAnswer oracle_lcq(std::span<const Circle> circles, Point2 q, std::span<const long> ids) {
  long best = -1;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    if (!circle_contains(circles[i], q)) continue;
    if (best < 0) {
      best = long(i);
      continue;
    }
    const Circle& b = circles[std::size_t(best)];
    long id_i = ids.empty() ? long(i) : ids[i];
    long id_b = ids.empty() ? best : ids[std::size_t(best)];
    if (circles[i].radius > b.radius || (circles[i].radius == b.radius && id_i < id_b)) {
      best = long(i);
    }
  }
  if (best < 0) return QueryAnswer::null();
  return QueryAnswer::bounded(circles[std::size_t(best)],
                              ids.empty() ? best : ids[std::size_t(best)]);
}

// ---------------------------------------------------------------------------
// Point sets

QueryAnswer oracle_qmec_points(std::span<const Point2> points, Point2 q) {
  Polygon hull = convex_hull(points);
  if (point_in_polygon(hull, q) != Location::Inside) return QueryAnswer::unbounded();
  const double eps = eps_geom();
  const std::size_t n = points.size();
  auto empty = [&](const Circle& c) {
    for (Point2 p : points) {
      if (dist(p, c.center) < c.radius - eps) return false;
    }
    return true;
  };
  std::optional<Circle> best;
  auto offer = [&](const Circle& c) {
    if (best && c.radius <= best->radius) return;
    if (!circle_contains(c, q) || !empty(c)) return;
    best = c;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      try {
        offer(circumcircle(points[i], points[j], q));
      } catch (const GeometryError&) {
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        try {
          offer(circumcircle(points[i], points[j], points[k]));
        } catch (const GeometryError&) {
        }
      }
    }
  }
  if (!best) throw GeometryError(ErrorKind::DegenerateInput, "no empty circle contains q");
  return QueryAnswer::bounded(*best);
}

// ---------------------------------------------------------------------------
// Convex polygons

ConvexOracle::ConvexOracle(Polygon poly) : poly_(std::move(poly)) {
  const std::size_t n = poly_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Point2 nrm = inward_normal(poly_, i);
    normal_.push_back(nrm);
    offset_.push_back(dot(nrm, poly_.vertex(i)));
  }
  // dot(n_i, c) - r = b_i for three edges, solved by Cramer's rule.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::array<std::size_t, 3> e{i, j, k};
        double m[3][3], rhs[3];
        for (int r = 0; r < 3; ++r) {
          m[r][0] = normal_[e[r]].x;
          m[r][1] = normal_[e[r]].y;
          m[r][2] = -1.0;
          rhs[r] = offset_[e[r]];
        }
        auto det3 = [](double a[3][3]) {
          return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                 a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                 a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        };
        double d = det3(m);
        if (std::fabs(d) < 1e-14) continue;
        double sol[3];
        for (int c = 0; c < 3; ++c) {
          double t[3][3];
          for (int r = 0; r < 3; ++r) {
            for (int cc = 0; cc < 3; ++cc) t[r][cc] = cc == c ? rhs[r] : m[r][cc];
          }
          sol[c] = det3(t) / d;
        }
        Circle circ{{sol[0], sol[1]}, sol[2]};
        if (circ.radius > 0.0 && empty_circle(circ)) tangent3_.push_back(circ);
      }
    }
  }
}

bool ConvexOracle::empty_circle(const Circle& c) const {
  const double tol = 1e-9 * std::max(1.0, c.radius);
  for (std::size_t i = 0; i < normal_.size(); ++i) {
    if (dot(normal_[i], c.center) - offset_[i] < c.radius - tol) return false;
  }
  return true;
}

QueryAnswer ConvexOracle::query(Point2 q) const {
  if (point_in_polygon(poly_, q) != Location::Inside) return QueryAnswer::unbounded();
  std::optional<Circle> best;
  auto offer = [&](const Circle& c) {
    if (!(c.radius > 0.0)) return;
    if (best && c.radius <= best->radius) return;
    if (!circle_contains(c, q) || !empty_circle(c)) return;
    best = c;
  };
  for (const Circle& c : tangent3_) offer(c);
  const std::size_t n = normal_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Point2 a = normal_[i], b = normal_[j];
      double det = cross(a, b);
      std::vector<std::pair<Point2, double>> sols;  // center, radius
      if (std::fabs(det) > 1e-12) {
        // c(r) = c0 + r v solves dot(a,c) = bi + r, dot(b,c) = bj + r.
        auto solve = [&](double u, double w) {
          return Point2{(u * b.y - w * a.y) / det, (a.x * w - b.x * u) / det};
        };
        Point2 c0 = solve(offset_[i], offset_[j]);
        Point2 v = solve(1.0, 1.0);
        Point2 d0 = c0 - q;
        double qa = dot(v, v) - 1.0, qb = 2.0 * dot(d0, v), qc = dot(d0, d0);
        if (std::fabs(qa) < 1e-14) {
          if (std::fabs(qb) > 1e-14) sols.push_back({c0 + (-qc / qb) * v, -qc / qb});
        } else {
          double disc = qb * qb - 4.0 * qa * qc;
          if (disc >= 0.0) {
            double s = std::sqrt(disc);
            for (double r : {(-qb + s) / (2.0 * qa), (-qb - s) / (2.0 * qa)}) {
              sols.push_back({c0 + r * v, r});
            }
          }
        }
      } else if (dot(a, b) < 0.0) {
        // Parallel edges facing each other: the circle lies on the midline.
        double r = 0.5 * (-offset_[i] - offset_[j]);
        if (r <= 0.0) continue;
        Point2 p0 = (offset_[i] + r) * a;
        Point2 t = perp(a);
        Point2 d0 = p0 - q;
        double qb = 2.0 * dot(d0, t), qc = dot(d0, d0) - r * r;
        double disc = qb * qb - 4.0 * qc;
        if (disc >= 0.0) {
          double s = std::sqrt(disc);
          for (double u : {(-qb + s) / 2.0, (-qb - s) / 2.0}) sols.push_back({p0 + u * t, r});
        }
      }
      for (auto [c, r] : sols) offer(Circle{c, r});
    }
  }
  if (!best) {
    // q strictly inside always admits a circle; fall back to the one centered at q.
    best = Circle{q, clearance(poly_, q)};
  }
  return QueryAnswer::bounded(*best);
}

QueryAnswer oracle_qmec_convex(const Polygon& poly, Point2 q) { return ConvexOracle(poly).query(q); }

// ---------------------------------------------------------------------------
// Simple polygons

namespace {

using Site = detail::BoundarySite;

std::vector<Site> boundary_sites(const Polygon& poly) {
  std::vector<Site> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Site e;
    e.n = inward_normal(poly, i);
    e.o = dot(e.n, poly.vertex(i));
    out.push_back(e);
    Site v;
    v.point = true;
    v.p = poly.vertex(i);
    out.push_back(v);
  }
  return out;
}

// Roots of a s^2 + b s + c = 0.
std::vector<double> roots(double a, double b, double c) {
  const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c), 1e-300});
  if (std::fabs(a) <= 1e-14 * scale) {
    if (std::fabs(b) <= 1e-14 * scale) return {};
    return {-c / b};
  }
  double disc = b * b - 4 * a * c;
  if (disc < 0) {
    if (disc < -1e-12 * b * b) return {};
    disc = 0;
  }
  double sq = std::sqrt(disc);
  return {(-b - sq) / (2 * a), (-b + sq) / (2 * a)};
}

// Centers equidistant (with positive distance) from three sites.
std::vector<Point2> equidistant(const Site& s1, const Site& s2, const Site& s3) {
  std::array<const Site*, 3> s{&s1, &s2, &s3};
  std::stable_partition(s.begin(), s.end(), [](const Site* x) { return !x->point; });
  const int lines = int(!s[0]->point) + int(!s[1]->point) + int(!s[2]->point);
  std::vector<Point2> out;
  // x = x0 + t w with distance r0 + t k to the point site p.
  auto on_line = [&](Point2 x0, Point2 w, double r0, double k, Point2 p) {
    Point2 d = x0 - p;
    for (double t : roots(dot(w, w) - k * k, 2 * (dot(w, d) - r0 * k), dot(d, d) - r0 * r0)) {
      out.push_back(x0 + t * w);
    }
  };
  if (lines == 3) {
    // n_i . x - r = o_i
    const Site &a = *s[0], &b = *s[1], &c = *s[2];
    // Eliminate r against a: (n_b - n_a).x = o_b - o_a, (n_c - n_a).x = o_c - o_a.
    Point2 u = b.n - a.n, v = c.n - a.n;
    double det = cross(u, v);
    if (std::fabs(det) < 1e-12) return out;
    double e = b.o - a.o, f = c.o - a.o;
    out.push_back({(e * v.y - f * u.y) / det, (u.x * f - v.x * e) / det});
  } else if (lines == 2) {
    const Site &a = *s[0], &b = *s[1];
    Point2 u = a.n - b.n;  // u.x = o_a - o_b
    double len = norm(u);
    if (len < 1e-12) return out;
    Point2 x0 = ((a.o - b.o) / (len * len)) * u;
    Point2 w = (1.0 / len) * perp(u);
    on_line(x0, w, a.d(x0), dot(a.n, w), s[2]->p);
  } else if (lines == 1) {
    const Site& l = *s[0];
    Point2 p1 = s[1]->p, p2 = s[2]->p;
    Point2 u = p2 - p1;
    if (norm(u) < 1e-12) return out;
    Point2 m = 0.5 * (p1 + p2), w = (1.0 / norm(u)) * perp(u);
    on_line(m, w, l.d(m), dot(l.n, w), p1);
  } else {
    try {
      out.push_back(circumcircle(s[0]->p, s[1]->p, s[2]->p).center);
    } catch (const GeometryError&) {
    }
  }
  return out;
}

}  // namespace

std::optional<Circle> SimpleOracle::empty_circle_at(Point2 c, double r) const {
  const AxisRect& b = box_;
  const double tol = 1e-9 * std::max(b.xmax - b.xmin, b.ymax - b.ymin);
  if (!(r > tol) || point_in_polygon(poly_, c) != Location::Inside) return std::nullopt;
  if (boundary_distance(poly_, c) < r - tol) return std::nullopt;
  return Circle{c, r};
}

SimpleOracle::SimpleOracle(Polygon poly, int grid) : poly_(std::move(poly)), grid_(grid) {
  box_ = poly_.bounding_box();
  hx_ = (box_.xmax - box_.xmin) / grid_;
  hy_ = (box_.ymax - box_.ymin) / grid_;
  clear_.assign(std::size_t(grid_) * grid_, -1.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid_; ++i) {
    for (int j = 0; j < grid_; ++j) {
      Point2 c{box_.xmin + (i + 0.5) * hx_, box_.ymin + (j + 0.5) * hy_};
      if (point_in_polygon(poly_, c) == Location::Inside) {
        clear_[std::size_t(i) * grid_ + j] = boundary_distance(poly_, c);
      }
    }
  }
  // Empty circles pinned by three boundary sites.
  sites_ = boundary_sites(poly_);
  const int m = int(sites_.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        for (Point2 c : equidistant(sites_[i], sites_[j], sites_[k])) {
          if (auto circle = empty_circle_at(c, sites_[i].d(c))) pinned_.push_back(*circle);
        }
      }
    }
  }
}

QueryAnswer SimpleOracle::query(Point2 q) const {
  if (point_in_polygon(poly_, q) != Location::Inside) {
    throw GeometryError(ErrorKind::OutsidePolygon, "query point not strictly inside polygon");
  }
  // Feasible value at c, or -1.
  auto value = [&](Point2 c) {
    if (point_in_polygon(poly_, c) != Location::Inside) return -1.0;
    double r = boundary_distance(poly_, c);
    return dist(c, q) <= r ? r : -1.0;
  };

  Circle best{q, value(q)};
  auto offer = [&](Point2 c, double r) {
    if (r > best.radius) best = Circle{c, r};
  };

  // Seeds: the best feasible cells, spread out by non-maximum suppression.
  std::vector<std::pair<double, int>> feasible;
  for (int i = 0; i < grid_; ++i) {
    for (int j = 0; j < grid_; ++j) {
      double r = clear_[std::size_t(i) * grid_ + j];
      if (r < 0.0) continue;
      Point2 c{box_.xmin + (i + 0.5) * hx_, box_.ymin + (j + 0.5) * hy_};
      if (dist(c, q) <= r) feasible.push_back({r, i * grid_ + j});
    }
  }
  std::sort(feasible.begin(), feasible.end(), std::greater<>());
  std::vector<Point2> seeds{q};
  std::vector<std::pair<int, int>> taken;
  for (auto [r, cell] : feasible) {
    if (seeds.size() > 32) break;
    int i = cell / grid_, j = cell % grid_;
    bool near = false;
    for (auto [a, b] : taken) near = near || (std::abs(a - i) <= 3 && std::abs(b - j) <= 3);
    if (near) continue;
    taken.push_back({i, j});
    seeds.push_back({box_.xmin + (i + 0.5) * hx_, box_.ymin + (j + 0.5) * hy_});
  }

  for (Point2 c : seeds) {
    double v = value(c);
    if (v < 0.0) continue;
    double h = std::max(hx_, hy_);
    for (int it = 0; it < 400 && h > 1e-7; ++it) {
      Point2 arg = c;
      double top = v;
      int reach = 0;
      for (int di = -4; di <= 4; ++di) {
        for (int dj = -4; dj <= 4; ++dj) {
          if (di == 0 && dj == 0) continue;
          Point2 p{c.x + di * h, c.y + dj * h};
          double w = value(p);
          if (w > top) {
            top = w;
            arg = p;
            reach = std::max(std::abs(di), std::abs(dj));
          }
        }
      }
      c = arg;
      v = top;
      if (reach < 4) h *= 0.5;
    }
    offer(c, v);
  }

  // The feasible set is star-shaped around q (clearance is 1-Lipschitz), so
  // along each ray it is an interval [0, t*]. Its boundary carries circles
  // through q of radius t*.
  const double diag = std::hypot(box_.xmax - box_.xmin, box_.ymax - box_.ymin);
  auto radial = [&](double theta) {
    Point2 u{std::cos(theta), std::sin(theta)};
    double lo = 0.0, hi = diag;
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      if (value(q + mid * u) >= 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  };
  constexpr int kRays = 1024;
  std::vector<std::pair<double, double>> rays;
  for (int k = 0; k < kRays; ++k) {
    double theta = 2.0 * M_PI * k / kRays;
    rays.push_back({radial(theta), theta});
  }
  std::sort(rays.begin(), rays.end(), std::greater<>());
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int k = 0; k < 8 && k < kRays; ++k) {
    double lo = rays[k].second - 2.0 * M_PI / kRays, hi = rays[k].second + 2.0 * M_PI / kRays;
    for (int it = 0; it < 40; ++it) {
      double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
      if (radial(m1) > radial(m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    double theta = 0.5 * (lo + hi);
    double t = radial(theta);
    Point2 c = q + t * Point2{std::cos(theta), std::sin(theta)};
    offer(c, value(c));
    Point2 c0 = q + rays[k].first * Point2{std::cos(rays[k].second), std::sin(rays[k].second)};
    offer(c0, value(c0));
  }

  // Exact candidates: circles pinned by three sites, and circles through q
  // pinned by two sites. Ridges of the clearance function stall the local
  // search above; these settle its last digits.
  for (const Circle& c : pinned_) {
    if (dist(c.center, q) <= c.radius) offer(c.center, c.radius);
  }
  Site qs;
  qs.point = true;
  qs.p = q;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    for (std::size_t j = i + 1; j < sites_.size(); ++j) {
      for (Point2 c : equidistant(sites_[i], sites_[j], qs)) {
        double r = dist(c, q);
        if (r > best.radius && empty_circle_at(c, r)) offer(c, r);
      }
    }
  }
  return QueryAnswer::bounded(best);
}

QueryAnswer oracle_qmec_simple(const Polygon& poly, Point2 q) { return SimpleOracle(poly).query(q); }

// ---------------------------------------------------------------------------
// Rectangles

std::vector<AxisRect> brute_force_mers(std::span<const Point2> points, const AxisRect& region) {
  std::vector<double> xs{region.xmin, region.xmax}, ys{region.ymin, region.ymax};
  for (Point2 p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<AxisRect> out;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      for (std::size_t c = 0; c < ys.size(); ++c) {
        for (std::size_t d = c + 1; d < ys.size(); ++d) {
          AxisRect r{xs[a], xs[b], ys[c], ys[d]};
          bool empty = true, left = r.xmin == region.xmin, right = r.xmax == region.xmax,
               bottom = r.ymin == region.ymin, top = r.ymax == region.ymax;
          for (Point2 p : points) {
            if (r.strictly_contains(p)) {
              empty = false;
              break;
            }
            bool in_y = p.y > r.ymin && p.y < r.ymax;
            bool in_x = p.x > r.xmin && p.x < r.xmax;
            left = left || (in_y && p.x == r.xmin);
            right = right || (in_y && p.x == r.xmax);
            bottom = bottom || (in_x && p.y == r.ymin);
            top = top || (in_x && p.y == r.ymax);
          }
          if (empty && left && right && bottom && top) out.push_back(r);
        }
      }
    }
  }
  return out;
}

QueryAnswer oracle_qmer(std::span<const Point2> points, const AxisRect& region, Point2 q) {
  if (!region.contains(q)) throw GeometryError(ErrorKind::OutsideRegion, "query outside region");
  std::optional<AxisRect> best;
  for (const AxisRect& r : brute_force_mers(points, region)) {
    if (!r.contains(q)) continue;
    if (!best || r.area() > best->area() ||
        (r.area() == best->area() && std::tie(r.xmin, r.ymin, r.xmax, r.ymax) <
                                         std::tie(best->xmin, best->ymin, best->xmax, best->ymax))) {
      best = r;
    }
  }
  return best ? QueryAnswer::rectangle(*best) : QueryAnswer::null();
}

}  // namespace esq
