#include <doctest.h>

#include <random>

#include "algcon/clique.hpp"
#include "algcon/errors.hpp"
#include "algcon/graph.hpp"
#include "oracles.hpp"

using namespace algcon;

TEST_CASE("clique numbers of named graphs") {
  for (int n = 1; n <= 10; ++n) CHECK(clique_number(complete(n)) == n);
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r <= n; ++r) CHECK(clique_number(turan(n, r)) == r);
  CHECK(clique_number(oracle::petersen()) == 2);
  CHECK(clique_number(empty_graph(4)) == 1);
  CHECK(clique_number(cycle(5)) == 2);
  const auto w = max_clique(kite(9, 4));
  CHECK(w.omega == 4);
  CHECK(w.vertices == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("max clique agrees with subset brute force (n <= 6)") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << triangle_bits(n)); ++c) {
      const Graph g = decode({n, c});
      const auto w = max_clique(g);
      REQUIRE(w.omega == oracle::brute_force_clique_number(g));
      REQUIRE(static_cast<int>(w.vertices.size()) == w.omega);
      std::uint32_t mask = 0;
      for (auto v : w.vertices) mask |= 1U << v;
      CHECK(oracle::subset_is_clique(g, mask));
    }
}

TEST_CASE("clique number is label invariant and additive under join") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = oracle::random_graph(rng, 1 + trial % 9, 0.5);
    const Graph b = oracle::random_graph(rng, 1 + trial % 7, 0.4);
    CHECK(clique_number(a.relabeled(oracle::random_permutation(rng, a.order()))) == clique_number(a));
    CHECK(clique_number(join(a, b)) == clique_number(a) + clique_number(b));
    CHECK(clique_number(disjoint_union(a, b)) == std::max(clique_number(a), clique_number(b)));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 14 + trial % 10, 0.5);
    const Graph h = g.induced(std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(clique_number(h) == oracle::brute_force_clique_number(h));
  }
}

TEST_CASE("K_r freeness") {
  CHECK(is_kr_free(turan(9, 3), 4));
  CHECK_FALSE(is_kr_free(kite(9, 4), 4));
  CHECK(is_kr_free(empty_graph(5), 2));
  CHECK_FALSE(is_kr_free(empty_graph(5), 1));
  CHECK_THROWS_AS(is_kr_free(complete(3), 0), InvalidParameter);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.5);
    const int w = clique_number(g);
    for (int r = 1; r <= g.order() + 1; ++r) CHECK(is_kr_free(g, r) == (r > w));
  }
}

TEST_CASE("complete multipartite containment") {
  const int p2222[] = {2, 2, 2, 2}, p111[] = {1, 1, 1}, p222[] = {2, 2, 2}, p331[] = {3, 3, 1};
  CHECK(contains_complete_multipartite(turan(8, 4), p2222));
  CHECK_FALSE(contains_complete_multipartite(cycle(5), p111));
  // Each 3-vertex part of K_{3,3,1} is independent, so it can feed only one part of size 2.
  CHECK_FALSE(contains_complete_multipartite(complete_multipartite(p331), p222));
  CHECK_FALSE(oracle::brute_force_multipartite(complete_multipartite(p331), {2, 2, 2}));
  const int p221[] = {2, 2, 1};
  CHECK(contains_complete_multipartite(complete_multipartite(p331), p221));
  const int p33[] = {3, 3};
  CHECK_FALSE(contains_complete_multipartite(turan(5, 2), p33));
  const int p9[] = {9};
  CHECK_THROWS_AS(contains_complete_multipartite(complete(10), p9), GuardExceeded);
  const int p54[] = {5, 4};
  CHECK_THROWS_AS(contains_complete_multipartite(complete(6), p54), GuardExceeded);
  const int p43[] = {4, 3};
  CHECK_FALSE(contains_complete_multipartite(complete(6), p43));
}

TEST_CASE("multipartite containment agrees with brute force") {
  const std::vector<std::vector<int>> shapes = {{1, 1}, {2, 1}, {2, 2}, {1, 1, 1}, {2, 1, 1},
                                                {3, 1}, {2, 2, 1}, {3, 2}, {2, 2, 2}, {1, 1, 1, 1}};
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 5;
    const Graph g = oracle::random_graph(rng, n, 0.55);
    for (const auto& s : shapes) CHECK(contains_complete_multipartite(g, s) == oracle::brute_force_multipartite(g, s));
  }
}
