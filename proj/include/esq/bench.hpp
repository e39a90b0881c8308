#pragma once

// Build and query timings for one random instance per size.

#include <cstdint>
#include <string>
#include <vector>

#include "esq/engine.hpp"

namespace esq {

struct BenchRecord {
  std::string mode;
  int n = 0;
  std::uint64_t seed = 0;
  long build_ns = 0;
  long mean_query_ns = 0;
  long p99_query_ns = 0;
  long queries = 0;
  int depth = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Random instance of the mode with n input elements; seeded per (seed, n).
Instance bench_instance(Mode mode, int n, std::uint64_t seed, int attempt = 0);

/// Builds (retrying degenerate draws a few times) and times `queries` random
/// queries inside the bounding box. Throws GeometryError if every draw fails.
BenchRecord run_bench(Mode mode, int n, std::uint64_t seed, Exec exec, int queries = 2000);

std::string bench_csv_header();
std::string to_csv(const BenchRecord& r);
/// Parses rows produced by to_csv (header line optional). Throws std::invalid_argument.
std::vector<BenchRecord> parse_bench_csv(const std::string& text);

}  // namespace esq
