#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "algcon/bounds.hpp"
#include "algcon/clique.hpp"
#include "algcon/errors.hpp"
#include "algcon/graph.hpp"
#include "algcon/spectra.hpp"
#include "oracles.hpp"

using namespace algcon;

TEST_CASE("clique lower bound") {
  CHECK(clique_lower_bound(6, 4.0) == doctest::Approx(3.0));
  CHECK(clique_lower_bound(4, 1.0) == doctest::Approx(4.0 / 3.0));
  CHECK(clique_lower_bound(10, 1e-9) == doctest::Approx(1.0));
  CHECK_THROWS_AS(clique_lower_bound(4, 0.0), StructuralError);
  CHECK_THROWS_AS(clique_lower_bound(4, 4.0), NotApplicable);
}

TEST_CASE("clique upper bound") {
  CHECK(clique_upper_bound(4, 1.0) == doctest::Approx(4.0));
  for (int n = 2; n <= 10; ++n) CHECK(clique_upper_bound(n, n) >= n);
  const double a5 = oracle::path_spectrum(5)[3];
  CHECK(clique_upper_bound(5, a5) >= 2.0);
  CHECK_THROWS_AS(clique_upper_bound(4, 0.0), StructuralError);
}

TEST_CASE("kite alpha floor") {
  CHECK(kite_alpha_floor(4, 3) == doctest::Approx(0.5));
  CHECK(kite_alpha_floor(10, 2) == doctest::Approx(4.0 / 90.0));
  CHECK(kite_alpha_floor(10, 2) <= oracle::path_spectrum(10)[8]);
  for (int n = 2; n <= 20; ++n)
    for (int r = 2; r <= n; ++r) CHECK(kite_alpha_floor(n, r) <= algebraic_connectivity(kite(n, r)) + 1e-9);
}

TEST_CASE("degree chain examples") {
  const auto t = degree_chain(turan(6, 3));
  CHECK(t.alpha == doctest::Approx(4.0));
  CHECK(t.nu == 4);
  CHECK(t.delta == 4);
  CHECK(t.avg_degree == doctest::Approx(4.0));
  CHECK(t.holds);

  const auto p = degree_chain(path(4));
  CHECK(p.alpha == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(p.nu == 1);
  CHECK(p.delta == 1);
  CHECK(p.avg_degree == doctest::Approx(1.5));

  const auto s = degree_chain(star(4));
  CHECK(s.alpha == doctest::Approx(1.0));
  CHECK(s.nu == 1);
  CHECK(s.avg_degree == doctest::Approx(1.6));
  CHECK(s.holds);

  CHECK_THROWS_AS(degree_chain(complete(4)), NotApplicable);
  CHECK_THROWS_AS(degree_chain(empty_graph(3)), StructuralError);
}

TEST_CASE("degree chain holds exhaustively (n <= 6)") {
  for (int n = 3; n <= 6; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << triangle_bits(n)); ++c) {
      const Graph g = decode({n, c});
      if (!is_connected(g) || g.is_complete()) continue;
      const auto d = degree_chain(g);
      CHECK(d.holds);
      CHECK(d.nu == oracle::brute_force_vertex_connectivity(g));
      CHECK(std::abs(d.alpha - oracle::eigen_alpha(g)) < 1e-9);
    }
}

TEST_CASE("sandwich report examples") {
  const auto paw = sandwich_report(kite(4, 3));
  CHECK(*paw.lower == doctest::Approx(4.0 / 3.0));
  CHECK(paw.omega == 3);
  CHECK(*paw.upper == doctest::Approx(4.0));
  CHECK(*paw.lower_ceil == 2);
  CHECK(*paw.upper_floor == 4);
  CHECK(paw.flags.bounds_hold);

  const auto t = sandwich_report(turan(6, 3));
  CHECK(*t.lower == doctest::Approx(3.0));
  CHECK(*t.upper == doctest::Approx(7.0 - 4.0 / 24.0));
  CHECK(t.flags.lower_equality);
  CHECK_FALSE(t.flags.upper_equality);

  const auto k = sandwich_report(kite(6, 3));
  CHECK(*k.lower < 3.0);
  CHECK(k.omega == 3);
  CHECK(*k.upper >= 3.0);

  const auto c = sandwich_report(complete(5));
  CHECK(c.flags.complete);
  CHECK(c.omega == 5);
  CHECK_FALSE(c.lower.has_value());

  const auto d = sandwich_report(disjoint_union(complete(2), complete(2)));
  CHECK_FALSE(d.flags.connected);
  CHECK(d.alpha == 0.0);
  CHECK_FALSE(d.upper.has_value());
}

TEST_CASE("sandwich bounds hold exhaustively (n <= 6)") {
  int equality = 0;
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << triangle_bits(n)); ++c) {
      const Graph g = decode({n, c});
      if (!is_connected(g) || g.is_complete()) continue;
      const auto rep = sandwich_report(g);
      REQUIRE(rep.flags.bounds_hold);
      CHECK(*rep.lower_ceil <= rep.omega);
      CHECK(rep.omega <= *rep.upper_floor);
      if (rep.flags.lower_equality) {
        ++equality;
        bool turan_match = false;
        for (int r = 2; r < n; ++r)
          if (n % r == 0 && is_isomorphic(g, turan(n, r))) turan_match = true;
        CHECK(turan_match);
      }
    }
  CHECK(equality > 0);
}

TEST_CASE("report serialisation") {
  const auto rep = sandwich_report(turan(6, 3));
  const auto j = nlohmann::json::parse(to_json(rep));
  CHECK(j["n"] == 6);
  CHECK(j["omega"] == 3);
  CHECK(j["lower"].get<double>() == doctest::Approx(3.0));
  const auto header = bounds_csv_header();
  const auto row = to_csv_row(rep);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
  const auto jc = nlohmann::json::parse(to_json(sandwich_report(complete(3))));
  CHECK(jc["lower"].is_null());
}
