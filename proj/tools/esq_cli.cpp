// Command-line driver: query, selftest, bench, render.

#include <iostream>

#include <CLI11.hpp>

#include "esq/bench.hpp"
#include "esq/engine.hpp"
#include "esq/instance_io.hpp"
#include "esq/render.hpp"
#include "esq/selftest.hpp"

using namespace esq;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kIo = 2, kDegenerate = 3 };

struct Args {
  std::string mode, instance, queries, out, csv, svg, overlay = "none", lcq = "both";
  std::uint64_t seed = 1;
  std::vector<int> n{32};
  int trials = 100;
  bool serial = false;
};

Exec exec_of(const Args& a) { return a.serial ? Exec::Serial : Exec::Parallel; }

// Per-query errors (a point outside a rect region) are recorded in place.
json answers_json(const Engine& e, const std::vector<Point2>& qs, Exec exec) {
  std::vector<json> out(qs.size());
  const long n = long(qs.size());
#pragma omp parallel for schedule(dynamic, 64) if (exec == Exec::Parallel)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = answer_to_json(e.query(qs[i]));
    } catch (const GeometryError& err) {
      out[i] = {{"kind", "error"}, {"error", to_string(err.kind())}, {"message", err.what()}};
    }
  }
  return {{"mode", to_string(e.mode())}, {"jittered", e.was_jittered()}, {"answers", out}};
}

int cmd_query(const Args& a) {
  Instance in;
  std::vector<Point2> qs;
  try {
    in = instance_from_json(read_json(a.instance));
    if (!a.queries.empty()) qs = queries_from_json(read_json(a.queries));
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  std::optional<Engine> eng;
  try {
    eng = Engine::build(in, exec_of(a));
  } catch (const GeometryError& e) {
    std::cerr << "error: invalid " << to_string(in.mode) << " instance: " << e.what() << '\n';
    return kDegenerate;
  }
  const std::string doc = answers_json(*eng, qs, exec_of(a)).dump(2);
  if (a.out.empty()) {
    std::cout << doc << '\n';
    return kOk;
  }
  try {
    write_text(a.out, doc);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}

int cmd_selftest(const Args& a) {
  if (!a.instance.empty()) {
    // Validate a given instance and compare it on random queries.
    Instance in;
    try {
      in = instance_from_json(read_json(a.instance));
    } catch (const FormatError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kIo;
    }
    try {
      Engine::build(in, exec_of(a));
    } catch (const GeometryError& e) {
      std::cerr << "error: invalid " << to_string(in.mode) << " instance: " << e.what() << '\n';
      return kDegenerate;
    }
    std::cout << "instance ok\n";
    return kOk;
  }
  SelftestOptions opt;
  opt.mode = a.mode;
  opt.n_max = a.n.front();
  opt.trials = a.trials;
  opt.seed = a.seed;
  opt.lcq = a.lcq;
  opt.queries = a.mode == "lcq" ? 50 : 20;
  opt.log = &std::cout;
  SelftestReport r;
  try {
    r = run_selftest(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  }
  std::cout << "summary: trials=" << r.trials << " skipped=" << r.skipped << " queries=" << r.queries
            << " mismatches=" << r.mismatches << " max_dev=" << r.max_deviation << " max|S_r|=" << r.max_sr
            << " max|S_q|=" << r.max_sq << " max|O_v|=" << r.max_ov << " max_K=" << r.max_mountains
            << " max_depth=" << r.max_depth << '\n';
  if (!r.ok()) {
    std::cout << "reproduce: " << r.first_failure << '\n';
    return kMismatch;
  }
  return kOk;
}

int cmd_bench(const Args& a) {
  Mode m;
  try {
    m = mode_from_string(a.mode);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  std::string csv = bench_csv_header();
  for (int n : a.n) {
    try {
      csv += '\n' + to_csv(run_bench(m, n, a.seed, exec_of(a)));
    } catch (const GeometryError& e) {
      std::cerr << "error: no valid instance for n=" << n << ": " << e.what() << '\n';
      return kDegenerate;
    }
  }
  if (a.csv.empty()) {
    std::cout << csv << '\n';
    return kOk;
  }
  try {
    write_text(a.csv, csv);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}

int cmd_render(const Args& a);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largest empty circle and rectangle queries"};
  app.require_subcommand(1);
  Args a;
  auto common = [&](CLI::App* c) {
    c->add_option("--mode", a.mode, "convex | simple | points | rect (selftest also: lcq)");
    c->add_option("--instance", a.instance, "instance document");
    c->add_option("--queries", a.queries, "query document");
    c->add_option("--seed", a.seed, "random seed");
    c->add_flag("--serial", a.serial, "run the serial reference kernels");
  };
  auto* q = app.add_subcommand("query", "answer a batch of queries");
  common(q);
  q->add_option("--out", a.out, "answers document (default stdout)");
  auto* st = app.add_subcommand("selftest", "compare indices against brute-force oracles");
  common(st);
  st->add_option("--n", a.n, "largest instance size")->expected(1);
  st->add_option("--trials", a.trials, "number of random instances");
  st->add_option("--lcq", a.lcq, "LCQ variant to check")->check(CLI::IsMember({"tree", "sweep", "both"}));
  auto* b = app.add_subcommand("bench", "time builds and queries over instance sizes");
  common(b);
  b->add_option("--n", a.n, "instance sizes")->expected(1, 64);
  b->add_option("--csv", a.csv, "CSV output (default stdout)");
  auto* r = app.add_subcommand("render", "draw an instance and its answers as SVG");
  common(r);
  r->add_option("--svg", a.svg, "SVG output (default stdout)");
  r->add_option("--overlay", a.overlay, "extra structure to draw")
      ->check(CLI::IsMember({"none", "axis", "voronoi", "grid"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIo;
  }
  if (q->parsed()) {
    if (a.instance.empty()) return std::cerr << "error: query needs --instance\n", kIo;
    return cmd_query(a);
  }
  if (st->parsed()) {
    if (a.mode.empty() && a.instance.empty()) return std::cerr << "error: selftest needs --mode\n", kIo;
    return cmd_selftest(a);
  }
  if (b->parsed()) {
    if (a.mode.empty()) return std::cerr << "error: bench needs --mode\n", kIo;
    return cmd_bench(a);
  }
  if (a.instance.empty()) return std::cerr << "error: render needs --instance\n", kIo;
  return cmd_render(a);
}

namespace {

int cmd_render(const Args& a) {
  Instance in;
  std::vector<Point2> qs;
  try {
    in = instance_from_json(read_json(a.instance));
    if (!a.queries.empty()) qs = queries_from_json(read_json(a.queries));
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  std::optional<Engine> eng;
  try {
    eng = Engine::build(in, exec_of(a));
  } catch (const GeometryError& e) {
    std::cerr << "error: invalid " << to_string(in.mode) << " instance: " << e.what() << '\n';
    return kDegenerate;
  }
  std::vector<QueryAnswer> answers;
  for (Point2 q : qs) {
    try {
      answers.push_back(eng->query(q));
    } catch (const GeometryError&) {
      answers.push_back(QueryAnswer::null());
    }
  }
  const std::string svg = render_svg(*eng, qs, answers, overlay_from_string(a.overlay));
  if (a.svg.empty()) {
    std::cout << svg << '\n';
    return kOk;
  }
  try {
    write_text(a.svg, svg);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}

}  // namespace
