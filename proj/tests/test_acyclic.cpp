#include <doctest.h>

#include <random>

#include "lintur/constructions.hpp"
#include "lintur/patterns.hpp"
#include "oracles.hpp"

using namespace lintur;

TEST_SUITE("acyclic") {

TEST_CASE("examples") {
  for (const TreePattern& p : {path_pattern(5), star_pattern(4), e4_plus_pattern(), s3_plus_pattern()}) {
    const Hypergraph h = p.realize();
    const AcyclicityResult a = is_acyclic(h);
    CHECK(a.acyclic);
    CHECK(validate_construction_order(h, a.order));
  }
  CHECK_FALSE(is_acyclic(steiner_2_4_13()).acyclic);
  CHECK(is_acyclic(Hypergraph(4, 8, {Edge{0, 1, 2, 3}, Edge{4, 5, 6, 7}})).acyclic);
  CHECK(is_acyclic(Hypergraph(4, 3)).acyclic);
  // A triangle of quadruples: each edge meets the other two in two vertices.
  const Hypergraph tri(4, 9, {Edge{0, 1, 2, 3}, Edge{3, 4, 5, 6}, Edge{6, 7, 8, 0}});
  CHECK_FALSE(is_acyclic(tri).acyclic);
  CHECK_THROWS_AS(is_acyclic(Hypergraph(4, 6, {Edge{0, 1, 2, 3}, Edge{0, 1, 4, 5}})), InputError);
}

TEST_CASE("construction order validation") {
  const Hypergraph h = path_pattern(3).realize();
  const std::vector<std::size_t> good{1, 0, 2};
  CHECK(validate_construction_order(h, good));
  const Hypergraph tri(4, 9, {Edge{0, 1, 2, 3}, Edge{3, 4, 5, 6}, Edge{6, 7, 8, 0}});
  const std::vector<std::size_t> bad{0, 1, 2};
  CHECK_FALSE(validate_construction_order(tri, bad));
  const std::vector<std::size_t> short_order{0, 1};
  CHECK_FALSE(validate_construction_order(h, short_order));
  const std::vector<std::size_t> repeated{0, 0, 1};
  CHECK_FALSE(validate_construction_order(h, repeated));
}

TEST_CASE("property: reverse peeling agrees with exhaustive order search") {
  std::mt19937_64 rng(31);
  int instances = 0, acyclic = 0;
  for (int t = 0; t < 400; ++t) {
    const int r = t % 2 ? 3 : 4;
    const int n = r + 2 + static_cast<int>(rng() % 8);
    Hypergraph h = oracle::random_linear(rng, r, n, 3 + static_cast<int>(rng() % 12));
    if (h.edge_count() > 6) {
      std::vector<Edge> first(h.edges().begin(), h.edges().begin() + 6);
      h = Hypergraph(r, n, first);
    }
    const AcyclicityResult res = is_acyclic(h);
    CHECK(res.acyclic == oracle::acyclic_by_subsets(h));
    if (res.acyclic) {
      ++acyclic;
      CHECK(validate_construction_order(h, res.order));
    }
    ++instances;
  }
  CHECK(instances >= 200);
  CHECK(acyclic > 20);
  CHECK(acyclic < instances - 20);
}

}  // TEST_SUITE
