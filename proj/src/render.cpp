#include "esq/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace esq {

Overlay overlay_from_string(const std::string& s) {
  if (s == "none") return Overlay::None;
  if (s == "axis") return Overlay::Axis;
  if (s == "voronoi") return Overlay::Voronoi;
  if (s == "grid") return Overlay::Grid;
  throw std::invalid_argument("unknown overlay '" + s + "'");
}

namespace {

struct Svg {
  std::ostringstream body;
  double unit = 1.0;  // nominal stroke width

  void line(Point2 a, Point2 b, const char* color, double w) {
    body << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y << "\" stroke=\""
         << color << "\" stroke-width=\"" << w * unit << "\"/>\n";
  }
  void polyline(const std::vector<Point2>& pts, const char* color, double w, bool closed) {
    body << (closed ? "<polygon" : "<polyline") << " points=\"";
    for (Point2 p : pts) body << p.x << ',' << p.y << ' ';
    body << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << w * unit << "\"/>\n";
  }
  void rect(const AxisRect& r, const char* color, double w) {
    body << "<rect x=\"" << r.xmin << "\" y=\"" << r.ymin << "\" width=\"" << r.xmax - r.xmin << "\" height=\""
         << r.ymax - r.ymin << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << w * unit << "\"/>\n";
  }
  void site(Point2 p) {
    const double s = 2 * unit;
    body << "<rect x=\"" << p.x - s << "\" y=\"" << p.y - s << "\" width=\"" << 2 * s << "\" height=\"" << 2 * s
         << "\" fill=\"black\"/>\n";
  }
  void cross(Point2 p) {
    const double s = 3 * unit;
    line(p - Point2{s, s}, p + Point2{s, s}, "blue", 1);
    line(p - Point2{s, -s}, p + Point2{s, -s}, "blue", 1);
  }
};

}  // namespace

std::string render_svg(const Engine& e, const std::vector<Point2>& queries, const std::vector<QueryAnswer>& answers,
                       Overlay overlay) {
  const Instance& in = e.instance();
  AxisRect box{0, 1, 0, 1};
  if (in.region) {
    box = *in.region;
  } else if (!in.coords.empty()) {
    box = {in.coords[0].x, in.coords[0].x, in.coords[0].y, in.coords[0].y};
    for (Point2 p : in.coords) {
      box.xmin = std::min(box.xmin, p.x), box.xmax = std::max(box.xmax, p.x);
      box.ymin = std::min(box.ymin, p.y), box.ymax = std::max(box.ymax, p.y);
    }
  }
  for (Point2 q : queries) {
    box.xmin = std::min(box.xmin, q.x), box.xmax = std::max(box.xmax, q.x);
    box.ymin = std::min(box.ymin, q.y), box.ymax = std::max(box.ymax, q.y);
  }
  const double span = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-9});
  const double pad = 0.1 * span;
  Svg s;
  s.unit = span / 400;

  if (overlay == Overlay::Axis && (in.mode == Mode::Convex || in.mode == Mode::Simple)) {
    const MedialAxis& ax = in.mode == Mode::Convex ? e.get<ConvexQmecIndex>().axis() : e.get<SimpleQmecIndex>().axis();
    for (std::size_t a = 0; a < ax.arcs().size(); ++a) {
      std::vector<Point2> pts;
      for (int k = 0; k <= 16; ++k) pts.push_back(ax.at(int(a), k / 16.0).pos);
      s.polyline(pts, "green", 1, false);
    }
  }
  if (overlay == Overlay::Voronoi && in.mode == Mode::Points) {
    const auto& vd = e.get<PointsQmecIndex>().diagram();
    for (const auto& ed : vd.edges()) {
      Point2 a = vd.vertex(ed.a).pos, b = ed.unbounded ? a + (2 * span) * ed.dir : vd.vertex(ed.b).pos;
      s.line(a, b, "green", 1);
    }
  }
  if (overlay == Overlay::Grid && in.mode == Mode::Rect) {
    const auto& idx = e.get<MerIndex>();
    for (double x : idx.x_lines()) s.line({x, box.ymin}, {x, box.ymax}, "lightgray", 0.5);
    for (double y : idx.y_lines()) s.line({box.xmin, y}, {box.xmax, y}, "lightgray", 0.5);
  }

  if (in.mode == Mode::Convex || in.mode == Mode::Simple) {
    s.polyline(in.coords, "black", 1.5, true);
  } else {
    if (in.region) s.rect(*in.region, "black", 1.5);
    for (Point2 p : in.coords) s.site(p);
  }
  for (const auto& a : answers) {
    if (a.kind == QueryAnswer::Kind::BoundedCircle) {
      s.body << "<circle cx=\"" << a.circle->center.x << "\" cy=\"" << a.circle->center.y << "\" r=\""
             << a.circle->radius << "\" fill=\"none\" stroke=\"red\" stroke-width=\"" << s.unit << "\"/>\n";
    } else if (a.kind == QueryAnswer::Kind::Rectangle) {
      s.rect(*a.rect, "red", 1);
    }
  }
  for (Point2 q : queries) s.cross(q);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << box.xmin - pad << ' ' << -(box.ymax + pad) << ' '
      << (box.xmax - box.xmin) + 2 * pad << ' ' << (box.ymax - box.ymin) + 2 * pad
      << "\" width=\"800\" height=\"800\">\n<g transform=\"scale(1,-1)\">\n"
      << s.body.str() << "</g>\n</svg>";
  return out.str();
}

}  // namespace esq
