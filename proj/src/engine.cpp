#include "esq/engine.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace esq {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Convex:
      return "convex";
    case Mode::Simple:
      return "simple";
    case Mode::Points:
      return "points";
    case Mode::Rect:
      return "rect";
  }
  return "?";
}

Mode mode_from_string(const std::string& s) {
  if (s == "convex") return Mode::Convex;
  if (s == "simple") return Mode::Simple;
  if (s == "points") return Mode::Points;
  if (s == "rect") return Mode::Rect;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

Instance jittered(const Instance& in, std::uint64_t seed) {
  Instance out = in;
  if (in.coords.empty()) return out;
  double xmin = in.coords[0].x, xmax = xmin, ymin = in.coords[0].y, ymax = ymin;
  for (Point2 p : in.coords) {
    xmin = std::min(xmin, p.x), xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y), ymax = std::max(ymax, p.y);
  }
  const double mag = 1e-9 * std::hypot(xmax - xmin, ymax - ymin);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-mag, mag);
  for (auto& p : out.coords) p = p + Point2{u(rng), u(rng)};
  return out;
}

namespace {

std::variant<ConvexQmecIndex, SimpleQmecIndex, PointsQmecIndex, MerIndex> make_index(const Instance& in, Exec exec) {
  switch (in.mode) {
    case Mode::Convex:
      return ConvexQmecIndex::build(Polygon::from_ring(in.coords));
    case Mode::Simple:
      return SimpleQmecIndex::build(Polygon::from_ring(in.coords));
    case Mode::Points:
      return PointsQmecIndex::build(in.coords, exec);
    case Mode::Rect:
      if (!in.region) throw GeometryError(ErrorKind::PreconditionViolated, "rect mode needs a region");
      return MerIndex::build(in.coords, *in.region);
  }
  throw GeometryError(ErrorKind::PreconditionViolated, "bad mode");
}

}  // namespace

Engine Engine::build(const Instance& in, Exec exec) {
  Engine e;
  e.instance_ = in;
  try {
    e.index_ = make_index(in, exec);
  } catch (const GeometryError& err) {
    if (err.kind() != ErrorKind::DegenerateInput || !in.jitter_seed) throw;
    e.instance_ = jittered(in, *in.jitter_seed);
    e.jittered_ = true;
    e.index_ = make_index(e.instance_, exec);
  }
  return e;
}

QueryAnswer Engine::query(Point2 q) const {
  return std::visit([&](const auto& idx) { return idx.query(q); }, index_);
}

std::vector<QueryAnswer> Engine::query_all(std::span<const Point2> qs, Exec exec) const {
  return std::visit([&](const auto& idx) { return query_batch(idx, qs, exec); }, index_);
}

int Engine::depth() const {
  switch (instance_.mode) {
    case Mode::Convex:
      return get<ConvexQmecIndex>().mountains().max_depth();
    case Mode::Simple:
      return get<SimpleQmecIndex>().depth();
    case Mode::Points:
      return get<PointsQmecIndex>().lcq().depth();
    case Mode::Rect:
      return 1;
  }
  return 0;
}

}  // namespace esq
