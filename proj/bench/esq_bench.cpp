// Serial vs OpenMP timings for index builds and batch queries.
//
//   esq_bench [--mode points] [--n 256 512 1024] [--queries 20000] [--seed 1] [--reps 3]
//
// Prints one CSV row per (mode, n). Exits 1 if the two policies ever give
// different answers.

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "esq/bench.hpp"
#include "esq/engine.hpp"

using namespace esq;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same(const QueryAnswer& a, const QueryAnswer& b) {
  if (a.kind != b.kind || a.witness != b.witness) return false;
  if (a.circle.has_value() != b.circle.has_value() || a.rect != b.rect) return false;
  return !a.circle || (a.circle->center == b.circle->center && a.circle->radius == b.circle->radius);
}

struct Timing {
  double build_ms = 0;
  double batch_ms = 0;
};

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel benchmark"};
  std::string mode_name = "points";
  std::vector<int> sizes{128, 256, 512, 1024};
  int queries = 20000;
  int reps = 3;
  std::uint64_t seed = 1;
  app.add_option("--mode", mode_name, "convex, simple, points or rect");
  app.add_option("--n", sizes, "input sizes");
  app.add_option("--queries", queries, "batch size");
  app.add_option("--reps", reps, "repetitions, best time kept")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  Mode mode;
  try {
    mode = mode_from_string(mode_name);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  std::printf("# threads=%d\n", omp_get_max_threads());
  std::printf("mode,n,build_serial_ms,build_parallel_ms,batch_serial_ms,batch_parallel_ms,queries\n");
  bool agree = true;
  for (int n : sizes) {
    Instance in;
    std::optional<Engine> probe;
    for (int attempt = 0; !probe && attempt < 10; ++attempt) {
      in = bench_instance(mode, n, seed, attempt);
      try {
        probe = Engine::build(in, Exec::Serial);
      } catch (const GeometryError&) {
      }
    }
    if (!probe) {
      std::fprintf(stderr, "no usable instance for n=%d\n", n);
      return 3;
    }
    Timing s, p;
    s.build_ms = best_of(reps, [&] { probe = Engine::build(in, Exec::Serial); });
    std::optional<Engine> par;
    p.build_ms = best_of(reps, [&] { par = Engine::build(in, Exec::Parallel); });

    double x0 = in.coords[0].x, x1 = x0, y0 = in.coords[0].y, y1 = y0;
    for (Point2 c : in.coords) {
      x0 = std::min(x0, c.x), x1 = std::max(x1, c.x), y0 = std::min(y0, c.y), y1 = std::max(y1, c.y);
    }
    if (in.region) x0 = in.region->xmin, x1 = in.region->xmax, y0 = in.region->ymin, y1 = in.region->ymax;
    std::mt19937_64 rng(seed + std::uint64_t(n));
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    std::vector<Point2> qs(std::size_t(std::max(queries, 1)));
    for (auto& q : qs) q = {ux(rng), uy(rng)};

    std::vector<QueryAnswer> a, b;
    s.batch_ms = best_of(reps, [&] { a = probe->query_all(qs, Exec::Serial); });
    p.batch_ms = best_of(reps, [&] { b = par->query_all(qs, Exec::Parallel); });
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (!same(a[i], b[i])) {
        std::fprintf(stderr, "n=%d: serial and parallel answers differ at query %zu\n", n, i);
        agree = false;
        break;
      }
    }
    std::printf("%s,%d,%.3f,%.3f,%.3f,%.3f,%zu\n", mode_name.c_str(), n, s.build_ms, p.build_ms,
                s.batch_ms, p.batch_ms, qs.size());
  }
  return agree ? 0 : 1;
}
