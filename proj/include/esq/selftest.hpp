#pragma once

// Randomized index-versus-oracle comparisons shared by the command line
// self-test and the acceptance suite.

#include <cstdint>
#include <ostream>
#include <string>

namespace esq {

struct SelftestOptions {
  std::string mode;  // lcq, convex, simple, points or rect
  int n_max = 32;
  int trials = 100;
  std::uint64_t seed = 1;
  int queries = 20;
  std::string lcq = "both";  // tree, sweep or both
  bool constructed = true;   // simple mode: lead with the multi-mountain set
  std::ostream* log = nullptr;
};

struct SelftestReport {
  int trials = 0;
  long queries = 0;
  long mismatches = 0;
  long skipped = 0;        // degenerate random instances
  double max_deviation = 0.0;  // relative radius error, or 1 per wrong answer
  std::size_t max_sr = 0;  // |S_r|
  std::size_t max_sq = 0;  // |S_q|
  std::size_t max_ov = 0;  // |O_v|
  std::size_t max_mountains = 0;  // mountains searched by one simple query
  int max_depth = 0;
  bool depth_ok = true;  // depth <= ceil(log2 n) + 1 where asserted
  std::string first_failure;

  bool ok() const { return mismatches == 0 && depth_ok; }
};

/// Throws std::invalid_argument for an unknown mode.
SelftestReport run_selftest(const SelftestOptions& opt);

}  // namespace esq
