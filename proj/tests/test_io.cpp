#include <doctest.h>

#include <cmath>

#include "esq/bench.hpp"
#include "esq/instance_io.hpp"

using namespace esq;
using nlohmann::json;

TEST_CASE("instance documents round trip") {
  Instance in;
  in.mode = Mode::Rect;
  in.coords = {{0.25, 0.5}, {0.125, 0.75}};
  in.region = AxisRect{0, 1, 0, 2};
  in.jitter_seed = 9;
  const Instance back = instance_from_json(json::parse(instance_to_json(in).dump()));
  CHECK(back.mode == in.mode);
  CHECK(back.coords == in.coords);
  CHECK(back.region == in.region);
  CHECK(back.jitter_seed == in.jitter_seed);

  // Key order does not matter.
  auto j = json::parse(R"({"coordinates": [[0,0],[1,0],[0,1]], "mode": "points"})");
  CHECK(instance_from_json(j).mode == Mode::Points);
  CHECK_FALSE(instance_from_json(j).region.has_value());
}

TEST_CASE("malformed documents raise FormatError") {
  for (const char* text : {R"([])", R"({"coordinates": []})", R"({"mode": "hexagon", "coordinates": []})",
                           R"({"mode": "rect", "coordinates": []})", R"({"mode": "points", "coordinates": [[1]]})",
                           R"({"mode": "points", "coordinates": [["a", 1]]})",
                           R"({"mode": "points", "coordinates": [], "jitter_seed": 0.5})"}) {
    CHECK_THROWS_AS(instance_from_json(json::parse(text)), FormatError);
  }
  CHECK_THROWS_AS(queries_from_json(json::parse(R"({"points": []})")), FormatError);
  CHECK_THROWS_AS(answer_from_json(json::parse(R"({"kind": "square"})")), FormatError);
  CHECK_THROWS_AS(answer_from_json(json::parse(R"({"radius": 1})")), FormatError);
  CHECK_THROWS_AS(read_json("/nonexistent/file.json"), FormatError);
}

TEST_CASE("answers round trip") {
  const std::vector<QueryAnswer> answers{QueryAnswer::bounded({{0.5, 0.25}, 0.125}, 3), QueryAnswer::unbounded(),
                                         QueryAnswer::rectangle({0, 1, 0.5, 2}, 7), QueryAnswer::null()};
  for (const auto& a : answers) {
    const QueryAnswer b = answer_from_json(json::parse(answer_to_json(a).dump()));
    CHECK(b.kind == a.kind);
    CHECK(b.witness == a.witness);
    CHECK(b.rect == a.rect);
    CHECK(b.circle.has_value() == a.circle.has_value());
    if (a.circle) {
      CHECK(b.circle->center == a.circle->center);
      CHECK(b.circle->radius == a.circle->radius);
    }
  }
  const std::vector<Point2> qs{{1, 2}, {-0.5, 1e-300}};
  CHECK(queries_from_json(queries_to_json(qs)) == qs);
}

TEST_CASE("bench CSV round trip") {
  std::vector<BenchRecord> rs(2);
  rs[0] = {"points", 64, 1, 2000000, 3000, 9000, 2000, 8};
  rs[1] = {"rect", 8, 5, 100, 20, 30, 2000, 1};
  std::string text = bench_csv_header() + "\n";
  for (const auto& r : rs) text += to_csv(r) + "\n";
  CHECK(parse_bench_csv(text) == rs);
  CHECK(parse_bench_csv(to_csv(rs[1])) == std::vector<BenchRecord>{rs[1]});
  CHECK_THROWS_AS(parse_bench_csv("points,64,1\n"), std::invalid_argument);
}

TEST_CASE("jitter is deterministic and small") {
  Instance in;
  in.mode = Mode::Points;
  in.coords = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Instance a = jittered(in, 4), b = jittered(in, 4);
  CHECK(a.coords == b.coords);
  for (std::size_t i = 0; i < in.coords.size(); ++i) {
    CHECK(a.coords[i] != in.coords[i]);
    CHECK(dist(a.coords[i], in.coords[i]) <= 2e-9 * std::sqrt(2.0));
  }
}
