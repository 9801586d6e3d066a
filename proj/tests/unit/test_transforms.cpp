#include <doctest.h>

#include <random>

#include "algcon/errors.hpp"
#include "algcon/graph.hpp"
#include "algcon/spectra.hpp"
#include "algcon/transforms.hpp"

using namespace algcon;

namespace {

TailSpec tail_of(Vertex root, const std::vector<Vertex>& vs) { return {root, vs}; }

// Base graph b with two pendant paths of lengths k and l hung at roots ru and rv.
struct Tailed {
  Graph g;
  TailSpec p, q;
};

Tailed hang(const Graph& base, Vertex ru, int k, Vertex rv, int l) {
  Tailed t{attach_path(attach_path(base, ru, k), rv, l), {ru, {}}, {rv, {}}};
  for (int i = 0; i < k; ++i) t.p.vertices.push_back(base.order() + i);
  for (int i = 0; i < l; ++i) t.q.vertices.push_back(base.order() + k + i);
  return t;
}

}  // namespace

TEST_CASE("tail validation") {
  const Graph bull = tailed_clique({3, 1, 1});
  CHECK_NOTHROW(validate_tail(bull, tail_of(0, {3})));
  CHECK_THROWS_AS(validate_tail(bull, tail_of(0, {})), InvalidParameter);
  CHECK_THROWS_AS(validate_tail(bull, tail_of(0, {2})), InvalidParameter);  // clique vertex, degree 2 but not a leaf
  CHECK_THROWS_AS(validate_tail(bull, tail_of(1, {3})), InvalidParameter);
  const Graph k = kite(6, 3);
  CHECK_NOTHROW(validate_tail(k, tail_of(0, {3, 4, 5})));
  CHECK_THROWS_AS(validate_tail(k, tail_of(0, {3, 4})), InvalidParameter);
}

TEST_CASE("grafting the bull gives two kites") {
  const Graph bull = tailed_clique({3, 1, 1});
  const auto [a, b] = graft_endpoints(bull, tail_of(0, {3}), tail_of(1, {4}));
  CHECK(a.order() == 5);
  CHECK(a.edge_count() == bull.edge_count());
  CHECK(is_isomorphic(a, kite(5, 3)));
  CHECK(is_isomorphic(b, kite(5, 3)));
  CHECK_THROWS_AS(graft_endpoints(bull, tail_of(0, {3}), tail_of(0, {3})), InvalidParameter);
}

TEST_CASE("sliding") {
  // K_1 with two tails of length 1 is P_3; sliding moves one leaf to the end of the other tail.
  const Tailed p3 = hang(complete(1), 0, 1, 0, 1);
  const Graph slid = slide_tail(p3.g, p3.p, p3.q);
  CHECK(slid == Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}}));

  // Repeated sliding ends with a single tail of length k + l.
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= k; ++l) {
      Tailed t = hang(complete(4), 0, k, 0, l);
      Graph g = t.g;
      while (!t.q.vertices.empty()) {
        g = slide_tail(g, t.p, t.q);
        t.p.vertices.push_back(t.q.vertices.back());
        t.q.vertices.pop_back();
        CHECK(g.edge_count() == t.g.edge_count());
        if (t.q.vertices.empty()) break;
      }
      CHECK(is_isomorphic(g, kite(4 + k + l, 4)));
    }

  const Tailed bad = hang(complete(3), 0, 1, 0, 2);
  CHECK_THROWS_AS(slide_tail(bad.g, bad.p, bad.q), InvalidParameter);
}

TEST_CASE("switching") {
  const auto [v, u] = switch_clique_attachment({3, 1, 1});
  CHECK(is_isomorphic(v, kite(5, 3)));
  CHECK(is_isomorphic(u, kite(5, 3)));
  for (int r = 3; r <= 5; ++r)
    for (int k = 1; k <= 4; ++k)
      for (int l = 1; l <= 4; ++l) {
        const auto [toward_v, toward_u] = switch_clique_attachment({r, k, l});
        CHECK(toward_v.edge_count() == tailed_clique({r, k, l}).edge_count());
        CHECK(is_isomorphic(toward_v, tailed_clique({r, k + 1, l - 1})));
        CHECK(is_isomorphic(toward_u, tailed_clique({r, k - 1, l + 1})));
      }
  CHECK_THROWS_AS(switch_clique_attachment({3, 2, 0}), InvalidParameter);
}

TEST_CASE("switch inequality and monotonicity on the grid") {
  for (int r = 3; r <= 5; ++r)
    for (int total = 2; total <= 10; ++total)
      for (int l = 1; 2 * l <= total; ++l) {
        const int k = total - l;
        const auto c = check_switch({r, k, l});
        CHECK(c.holds);
        const double next = algebraic_connectivity(tailed_clique({r, k + 1, l - 1}));
        CHECK(c.alpha_base > next + tol::kStrict);
        CHECK(c.alpha_base > algebraic_connectivity(kite(r + total, r)) + tol::kStrict);
      }
}

TEST_CASE("grafting inequality on sampled bases") {
  // A long path hung far from the two roots pushes both tail ends to one sign.
  std::mt19937_64 rng(12);
  int asserted = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int b = 3 + trial % 4;
    Graph core = complete(b);
    std::bernoulli_distribution coin(0.3);
    for (const auto& [x, y] : complete(b).edges())
      if (coin(rng)) core.remove_edge(x, y);
    if (!is_connected(core)) continue;
    const Graph base = attach_path(core, b - 1, trial % 2 ? 8 : 2);
    const int k = 1 + trial % 3, l = 1 + (trial / 3) % 3;
    const Tailed t = hang(base, 0, k, 1, l);
    const auto c = check_graft(t.g, t.p, t.q);
    if (c.hypothesis_holds) {
      ++asserted;
      CHECK(c.conclusion_holds);
    }
  }
  CHECK(asserted > 10);
}

TEST_CASE("sliding inequality on sampled bases") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int b = 1 + trial % 5;
    Graph base = complete(b);
    std::bernoulli_distribution coin(0.3);
    for (const auto& [x, y] : complete(b).edges())
      if (coin(rng)) base.remove_edge(x, y);
    if (!is_connected(base)) continue;
    const int l = 1 + trial % 3, k = l + (trial / 3) % 3;
    const Tailed t = hang(base, 0, k, 0, l);
    const auto c = check_slide(t.g, t.p, t.q);
    CHECK(c.holds);
  }
}

TEST_CASE("fiedler sign structure") {
  const auto a = fiedler_sign_report({3, 2, 2});
  CHECK_FALSE(a.skipped);
  CHECK(a.tail_end_product < 0);
  CHECK(a.ok);
  const auto b = fiedler_sign_report({4, 3, 1});
  CHECK(b.hub_spread <= tol::kMultiplicity);
  CHECK(b.tail_end_product < -tol::kStrict);
  CHECK(b.ok);
  for (int r = 3; r <= 5; ++r)
    for (int k = 1; k <= 9; ++k)
      for (int l = 1; l <= k && k + l <= 10; ++l) {
        const auto rep = fiedler_sign_report({r, k, l});
        CHECK(rep.ok);
        if (!rep.skipped) {
          CHECK(rep.hub_spread <= tol::kMultiplicity);
          CHECK(rep.tail_end_product < -tol::kStrict);
        }
      }
}

TEST_CASE("theta kite beats kite") {
  const auto c = theta_vs_kite(3, 1);
  CHECK(c.alpha_kite == doctest::Approx(1.0));
  CHECK(c.strict);
  CHECK(theta_vs_kite(4, 3).strict);
  for (int r = 3; r <= 5; ++r)
    for (int k = 1; k <= 8; ++k) CHECK(theta_vs_kite(r, k).strict);
}

TEST_CASE("kite minimality chain") {
  const auto c37 = kite_minimality_chain(3, 7);
  REQUIRE(c37.entries.size() == 2);
  CHECK(c37.entries[0].k == 2);
  CHECK(c37.entries[1].k == 3);
  CHECK(c37.strictly_decreasing);
  CHECK(c37.above_kite);
  CHECK(kite_minimality_chain(4, 8).strictly_decreasing);
  for (int r = 3; r <= 6; ++r) {
    const auto c = kite_minimality_chain(r, r + 2);
    REQUIRE(c.entries.size() == 1);
    CHECK(c.entries[0].k == 1);
    CHECK(c.above_kite);
  }
  CHECK_THROWS_AS(kite_minimality_chain(3, 4), InvalidParameter);
}

TEST_CASE("tailed clique sweep") {
  const int orders[] = {3, 4};
  const auto rows = tailed_clique_sweep(orders, 3);
  CHECK(rows.size() == 2 * (1 + 2 + 2));
  for (const auto& row : rows) CHECK(row.k >= row.l);
  const auto csv = sweep_csv(rows);
  CHECK(csv.rfind("r,k,l,alpha\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rows.size()) + 1);
}
