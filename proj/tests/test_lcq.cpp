#include <doctest.h>

#include <cmath>
#include <random>

#include "esq/lcq.hpp"
#include "esq/oracles.hpp"

using namespace esq;

namespace {

std::vector<Circle> random_circles(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0, 10), r(0.3, 3);
  std::vector<Circle> cs;
  for (int i = 0; i < n; ++i) cs.push_back({{u(rng), u(rng)}, r(rng)});
  return cs;
}

long expected_id(const std::vector<Circle>& cs, Point2 q) {
  auto a = oracle_lcq(cs, q);
  return a.kind == QueryAnswer::Kind::Null ? -1 : *a.witness;
}

long answer_id(const QueryAnswer& a) {
  return a.kind == QueryAnswer::Kind::Null ? -1 : *a.witness;
}

}  // namespace

TEST_CASE("circle set ordering and validation") {
  auto s = CircleSet::from_circles({{{0, 0}, 1}, {{5, 0}, 3}, {{9, 0}, 3}});
  CHECK(s.id(0) == 1);
  CHECK(s.id(1) == 2);
  CHECK(s.id(2) == 0);
  CHECK_THROWS_AS(CircleSet::from_circles({{{0, 0}, 1}, {{0, 0}, 1}}), GeometryError);
  auto triple = CircleSet::from_circles({{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}});
  // All three pass through the origin... (0,1) with radius 1 passes through (0,0).
  CHECK_THROWS_AS(triple.validate_no_triple_points(), GeometryError);
}

TEST_CASE("lcq tree examples") {
  auto one = LcqTree::build(CircleSet::from_circles({{{0, 0}, 1}}));
  CHECK(one.depth() == 1);
  CHECK(answer_id(one.query({0.2, 0.2})) == 0);
  CHECK(one.query({3, 3}).kind == QueryAnswer::Kind::Null);

  std::mt19937_64 rng(1);
  auto eight = LcqTree::build(CircleSet::from_circles(random_circles(rng, 8)));
  CHECK(eight.depth() <= 4);

  auto nested = LcqTree::build(CircleSet::from_circles({{{0, 0}, 3}, {{0, 0.5}, 1}}, {1, 2}));
  CHECK(answer_id(nested.query({0, 0.5})) == 1);

  auto two = LcqTree::build(CircleSet::from_circles({{{0, 0}, 3}, {{10, 0}, 1}}));
  auto a = two.query({10, 0});
  CHECK(answer_id(a) == 1);
  CHECK(a.circle->radius == 1.0);
  CHECK(two.query({20, 20}).kind == QueryAnswer::Kind::Null);
}

TEST_CASE("lcq tree matches linear scan and is balanced") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 12);
  for (int trial = 0; trial < 20; ++trial) {
    auto cs = random_circles(rng, 50);
    auto t = LcqTree::build(CircleSet::from_circles(cs));
    CHECK(t.depth() <= int(std::ceil(std::log2(50.0))) + 1);
    for (const auto& node : t.nodes()) {
      if (node.left < 0) continue;
      const auto& l = t.nodes()[node.left];
      const auto& r = t.nodes()[node.right];
      CHECK(l.hi - l.lo >= r.hi - r.lo);
      CHECK(l.hi - l.lo - (r.hi - r.lo) <= 1);
    }
    for (int k = 0; k < 100; ++k) {
      Point2 q{u(rng), u(rng)};
      CHECK(answer_id(t.query(q)) == expected_id(cs, q));
      // Descent soundness: going right means q is outside every left circle.
      int v = t.root();
      if (!t.node_contains(v, q)) continue;
      while (t.nodes()[v].left >= 0) {
        const auto& nd = t.nodes()[v];
        if (t.node_contains(nd.left, q)) {
          v = nd.left;
          continue;
        }
        const auto& l = t.nodes()[nd.left];
        for (std::size_t i = l.lo; i < l.hi; ++i) CHECK_FALSE(circle_contains(t.circles().circle(i), q));
        v = nd.right;
      }
    }
  }
}

TEST_CASE("lcq arrangement examples") {
  auto disjoint = LcqArrangement::build(CircleSet::from_circles({{{0, 0}, 1}, {{5, 0}, 1}}));
  CHECK(disjoint.stats().faces == 3);
  CHECK(answer_id(disjoint.query({0, 0})) == 0);
  CHECK(answer_id(disjoint.query({5, 0.5})) == 1);
  CHECK(disjoint.query({2.5, 0}).kind == QueryAnswer::Kind::Null);

  auto lens = LcqArrangement::build(CircleSet::from_circles({{{0, 0}, 1}, {{1, 0}, 1}}));
  CHECK(lens.stats().faces == 4);
  CHECK(answer_id(lens.query({0.5, 0})) == 0);
  CHECK(answer_id(lens.query({1.5, 0})) == 1);
  CHECK(lens.query({9, 9}).kind == QueryAnswer::Kind::Null);
  // Boundary point shared by the lens and the right crescent.
  CHECK(answer_id(lens.query({1.0, 0.0})) == 0);
  CHECK(answer_id(lens.query({0.5, std::sqrt(3.0) / 2})) == 0);
}

TEST_CASE("lcq arrangement matches linear scan and the tree") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 12);
  for (int trial = 0; trial < 30; ++trial) {
    auto cs = random_circles(rng, 20);
    auto set = CircleSet::from_circles(cs);
    auto arr = LcqArrangement::build(set);
    auto tree = LcqTree::build(set);
    CHECK(arr.stats().faces <= 20 * 20 + 20 + 2);
    for (int k = 0; k < 200; ++k) {
      Point2 q{u(rng), u(rng)};
      long want = expected_id(cs, q);
      CHECK(answer_id(arr.query(q)) == want);
      CHECK(answer_id(tree.query(q)) == want);
    }
  }
}

TEST_CASE("oracle_lcq") {
  std::vector<Circle> none;
  CHECK(oracle_lcq(none, {0, 0}).kind == QueryAnswer::Kind::Null);
  std::vector<Circle> one{{{0, 0}, 1}};
  CHECK(*oracle_lcq(one, {0.5, 0}).witness == 0);
  std::vector<Circle> nest{{{0, 0}, 1}, {{0, 0}, 2}, {{0, 0}, 3}};
  CHECK(oracle_lcq(nest, {0, 0}).circle->radius == 3.0);
}
