#pragma once

// One front end over the four query structures, used by the CLI, the
// self-test harness and the benchmarks.

#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "esq/exec.hpp"
#include "esq/qmec_convex.hpp"
#include "esq/qmec_points.hpp"
#include "esq/qmec_simple.hpp"
#include "esq/qmer.hpp"

namespace esq {

enum class Mode { Convex, Simple, Points, Rect };

std::string to_string(Mode m);
/// Throws std::invalid_argument on an unknown name.
Mode mode_from_string(const std::string& s);

struct Instance {
  Mode mode = Mode::Convex;
  std::vector<Point2> coords;
  std::optional<AxisRect> region;  // rect mode only
  std::optional<std::uint64_t> jitter_seed;
};

/// Perturbs every coordinate by at most 1e-9 times the bounding-box diameter.
Instance jittered(const Instance& in, std::uint64_t seed);

class Engine {
 public:
  /// Builds the index for the instance. On DegenerateInput with a jitter
  /// seed, retries once on the jittered instance.
  static Engine build(const Instance& in, Exec exec = Exec::Parallel);

  QueryAnswer query(Point2 q) const;
  std::vector<QueryAnswer> query_all(std::span<const Point2> qs, Exec exec) const;

  Mode mode() const { return instance_.mode; }
  /// The instance actually indexed (jittered when the retry fired).
  const Instance& instance() const { return instance_; }
  bool was_jittered() const { return jittered_; }
  /// Depth of the main search structure: root paths for convex, the
  /// centroid tree for simple, the LCQ tree for points, 1 for rect.
  int depth() const;

  template <class T>
  const T& get() const { return std::get<T>(index_); }

 private:
  Instance instance_;
  bool jittered_ = false;
  std::variant<ConvexQmecIndex, SimpleQmecIndex, PointsQmecIndex, MerIndex> index_;
};

/// Runs query(q) over the batch in input order. Exceptions from queries are
/// rethrown after the loop (the first by index).
template <class Index>
std::vector<QueryAnswer> query_batch(const Index& idx, std::span<const Point2> qs, Exec exec) {
  const long n = long(qs.size());
  std::vector<QueryAnswer> out(qs.size());
  std::vector<std::exception_ptr> err(qs.size());
#pragma omp parallel for schedule(dynamic, 64) if (exec == Exec::Parallel)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = idx.query(qs[i]);
    } catch (...) {
      err[i] = std::current_exception();
    }
  }
  for (const auto& e : err) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace esq
