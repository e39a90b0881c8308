#include "esq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "esq/generators.hpp"

namespace esq {

Instance bench_instance(Mode mode, int n, std::uint64_t seed, int attempt) {
  std::mt19937_64 rng(seed * 1000003 + std::uint64_t(n) * 31 + std::uint64_t(attempt));
  Instance in;
  in.mode = mode;
  switch (mode) {
    case Mode::Convex:
      in.coords = gen::random_convex(rng, n).vertices();
      break;
    case Mode::Simple:
      in.coords = gen::random_star(rng, n).vertices();
      break;
    case Mode::Points:
      in.coords = gen::random_points(rng, n);
      break;
    case Mode::Rect:
      in.region = AxisRect{0, 1, 0, 1};
      in.coords = gen::random_points_in(rng, n, *in.region);
      break;
  }
  return in;
}

BenchRecord run_bench(Mode mode, int n, std::uint64_t seed, Exec exec, int queries) {
  using clock = std::chrono::steady_clock;
  auto ns = [](clock::duration d) { return long(std::chrono::duration_cast<std::chrono::nanoseconds>(d).count()); };
  Instance in;
  std::optional<Engine> eng;
  long build_ns = 0;
  for (int attempt = 0; !eng; ++attempt) {
    in = bench_instance(mode, n, seed, attempt);
    try {
      const auto t0 = clock::now();
      eng = Engine::build(in, exec);
      build_ns = ns(clock::now() - t0);
    } catch (const GeometryError&) {
      if (attempt == 9) throw;
    }
  }
  AxisRect box{in.coords[0].x, in.coords[0].x, in.coords[0].y, in.coords[0].y};
  for (Point2 p : in.coords) {
    box.xmin = std::min(box.xmin, p.x), box.xmax = std::max(box.xmax, p.x);
    box.ymin = std::min(box.ymin, p.y), box.ymax = std::max(box.ymax, p.y);
  }
  if (in.region) box = *in.region;
  std::mt19937_64 rng(seed + 17);
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax), uy(box.ymin, box.ymax);
  std::vector<Point2> qs;
  for (int k = 0; k < queries; ++k) qs.push_back({ux(rng), uy(rng)});
  std::vector<long> times;
  times.reserve(qs.size());
  for (Point2 q : qs) {
    const auto t0 = clock::now();
    volatile auto kind = eng->query(q).kind;
    (void)kind;
    times.push_back(ns(clock::now() - t0));
  }
  std::sort(times.begin(), times.end());
  long double sum = 0;
  for (long t : times) sum += t;
  BenchRecord r;
  r.mode = to_string(mode);
  r.n = n;
  r.seed = seed;
  r.build_ns = build_ns;
  r.mean_query_ns = long(sum / times.size());
  r.p99_query_ns = times[std::size_t(0.99 * double(times.size() - 1))];
  r.queries = long(times.size());
  r.depth = eng->depth();
  return r;
}

std::string bench_csv_header() { return "mode,n,seed,build_ns,mean_query_ns,p99_query_ns,queries,depth"; }

std::string to_csv(const BenchRecord& r) {
  std::ostringstream s;
  s << r.mode << ',' << r.n << ',' << r.seed << ',' << r.build_ns << ',' << r.mean_query_ns << ',' << r.p99_query_ns
    << ',' << r.queries << ',' << r.depth;
  return s.str();
}

std::vector<BenchRecord> parse_bench_csv(const std::string& text) {
  std::vector<BenchRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == bench_csv_header()) continue;
    std::istringstream row(line);
    std::vector<std::string> f;
    for (std::string cell; std::getline(row, cell, ',');) f.push_back(cell);
    if (f.size() != 8) throw std::invalid_argument("bad CSV row: " + line);
    BenchRecord r;
    r.mode = f[0];
    r.n = std::stoi(f[1]);
    r.seed = std::stoull(f[2]);
    r.build_ns = std::stol(f[3]);
    r.mean_query_ns = std::stol(f[4]);
    r.p99_query_ns = std::stol(f[5]);
    r.queries = std::stol(f[6]);
    r.depth = std::stoi(f[7]);
    if (r.build_ns < 0 || r.mean_query_ns < 0 || r.p99_query_ns < 0 || r.queries <= 0) {
      throw std::invalid_argument("invalid record: " + line);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace esq
