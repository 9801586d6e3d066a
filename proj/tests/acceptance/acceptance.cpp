// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if all pass.
//   algcon_acceptance [data-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "algcon/clique.hpp"
#include "algcon/graph.hpp"
#include "algcon/graph6.hpp"
#include "algcon/scan.hpp"
#include "algcon/spectra.hpp"
#include "algcon/transforms.hpp"
#include "oracles.hpp"

using namespace algcon;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  double limit_s = 0.0;  // 0 means no runtime limit
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

ScanOptions scan_opts(int guard = kDefaultGuard) {
  return {guard, static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))};
}

// 1. alpha(T_{n,r}) = n - ceil(n/r) for 2 <= r < n <= 30.
Outcome turan_formula() {
  double worst = 0;
  int cases = 0;
  for (int n = 3; n <= 30; ++n)
    for (int r = 2; r < n; ++r, ++cases) worst = std::max(worst, std::abs(algebraic_connectivity(turan(n, r)) - (n - ceil_div(n, r))));
  std::ostringstream d;
  d << cases << " (n,r) pairs, max |error| " << worst;
  return {worst <= 1e-8, d.str(), 10.0};
}

// 2. alpha(T_{7,3}) = alpha(K_{3,3,1}) = 4.
Outcome equal_alpha_pair() {
  const int parts[] = {3, 3, 1};
  const double a = algebraic_connectivity(turan(7, 3));
  const double b = algebraic_connectivity(complete_multipartite(parts));
  std::ostringstream d;
  d.precision(15);
  d << "alpha(T_{7,3}) = " << a << ", alpha(K_{3,3,1}) = " << b;
  return {std::abs(a - 4) <= 1e-8 && std::abs(b - 4) <= 1e-8, d.str()};
}

// 3. Upper extremal theorem, exhaustive for 2 <= r < n <= 7.
Outcome max_theorem() {
  bool ok = true;
  std::ostringstream d;
  std::uint64_t scanned = 0;
  int certs = 0;
  for (int n = 3; n <= 7; ++n)
    for (int r = 2; r < n; ++r) {
      const auto cert = verify_max_theorem(n, r, scan_opts());
      const int t = n % r;
      const std::string want = (t == 0 || t == r - 1) ? "turan-unique" : "join-decomposition";
      const bool good = cert.passed() && cert.rule == want && std::abs(cert.achieved - (n - ceil_div(n, r))) <= 1e-6;
      if (!good) d << "[(" << n << "," << r << ") failed] ";
      ok = ok && good;
      scanned += cert.graphs_scanned;
      ++certs;
    }
  d << certs << " certificates, " << scanned << " K_{r+1}-free non-complete graphs";
  return {ok, d.str(), 300.0};
}

// 4. Lower extremal theorem, exhaustive for 2 <= r <= n <= 7.
Outcome min_theorem() {
  bool ok = true;
  std::ostringstream d;
  std::uint64_t scanned = 0;
  int certs = 0;
  for (int n = 2; n <= 7; ++n)
    for (int r = 2; r <= n; ++r) {
      const auto cert = verify_min_theorem(n, r, scan_opts());
      const bool good = cert.passed() && cert.achievers.size() == 1 &&
                        is_isomorphic(decode(cert.achievers[0].code), kite(n, r));
      if (!good) d << "[(" << n << "," << r << ") failed] ";
      ok = ok && good;
      scanned += cert.graphs_scanned;
      ++certs;
    }
  d << certs << " certificates, " << scanned << " connected graphs with the prescribed clique number";
  return {ok, d.str(), 300.0};
}

// 5. Sandwich bound with lower equality exactly at T_{n,r}, r | n.
Outcome sandwich() {
  bool ok = true;
  std::ostringstream d;
  std::uint64_t scanned = 0, classes = 0;
  for (int n = 3; n <= 7; ++n) {
    const auto rep = verify_sandwich(n, scan_opts());
    if (!rep.ok) d << "[n=" << n << " violations " << rep.violations.size() << "] ";
    // Independent count of the expected equality classes.
    std::size_t expected = 0;
    for (int r = 2; r < n; ++r) expected += n % r == 0;
    if (rep.lower_equality_classes.size() != expected) d << "[n=" << n << " equality classes differ] ";
    ok = ok && rep.ok && rep.lower_equality_ok && rep.lower_equality_classes.size() == expected;
    scanned += rep.graphs_scanned;
    classes += rep.lower_equality_classes.size();
  }
  d << scanned << " connected non-complete graphs, " << classes << " lower-equality classes, all Turan with r | n";
  return {ok, d.str()};
}

// 6. Switching monotonicity, kite minimality, theta beats kite.
Outcome rewrite_monotonicity() {
  int checks = 0, bad = 0;
  for (int r = 3; r <= 5; ++r) {
    for (int total = 2; total <= 10; ++total) {
      const double kite_alpha = algebraic_connectivity(kite(r + total, r));
      for (int l = 1; 2 * l <= total; ++l) {
        const int k = total - l;
        const double a = algebraic_connectivity(tailed_clique({r, k, l}));
        const double next = algebraic_connectivity(tailed_clique({r, k + 1, l - 1}));
        checks += 2;
        bad += !(a > next + 1e-9);
        bad += !(a > kite_alpha + 1e-9);
      }
    }
    for (int k = 1; k <= 10; ++k, ++checks)
      bad += !(algebraic_connectivity(theta_kite(r, k)) > algebraic_connectivity(kite(r + k, r)) + 1e-9);
  }
  std::ostringstream d;
  d << checks << " strict inequalities, " << bad << " failed";
  return {bad == 0, d.str(), 30.0};
}

// 7. Fiedler structure on the same grid, simple-alpha instances only.
Outcome fiedler_structure() {
  int checked = 0, skipped = 0, bad = 0;
  for (int r = 3; r <= 5; ++r)
    for (int k = 1; k <= 9; ++k)
      for (int l = 1; l <= k && k + l <= 10; ++l) {
        const auto rep = fiedler_sign_report({r, k, l});
        if (rep.skipped) {
          ++skipped;
          continue;
        }
        ++checked;
        bad += !(rep.hub_spread <= 1e-7 && rep.tail_end_product < -1e-9);
      }
  std::ostringstream d;
  d << checked << " simple instances checked, " << skipped << " degenerate reported, " << bad << " failed";
  return {bad == 0 && checked > 0, d.str()};
}

// 8. Eigensolver and clique solver against independent oracles.
Outcome oracle_equivalence() {
  double path_err = 0;
  for (int n = 2; n <= 50; ++n) {
    const auto got = laplacian_eigenvalues(path(n));
    const auto want = oracle::path_spectrum(n);
    for (int i = 0; i < n; ++i) path_err = std::max(path_err, std::abs(got[i] - want[i]));
  }

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order(2, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  double comp_err = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const double a = algebraic_connectivity(g);
    const double lam = oracle::eigen_laplacian_spectrum(complement(g)).front();  // lambda_1 of the complement
    comp_err = std::max(comp_err, std::abs(a - (g.order() - lam)));
  }

  int clique_bad = 0;
  std::uint64_t clique_cases = 0;
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << triangle_bits(n)); ++c, ++clique_cases) {
      const Graph g = decode({n, c});
      clique_bad += max_clique(g).omega != oracle::brute_force_clique_number(g);
    }

  std::ostringstream d;
  d << "path spectra n<=50 max err " << path_err << "; complement identity on 1000 random graphs max err " << comp_err
    << "; max_clique vs brute force " << clique_cases << " graphs, " << clique_bad << " mismatches";
  return {path_err <= 1e-8 && comp_err <= 1e-8 && clique_bad == 0, d.str()};
}

// 9. Trend alpha(T_{n,r})/n against 1 - 1/r, integer arithmetic.
Outcome trend() {
  bool ok = true;
  std::size_t rows = 0;
  for (int r = 2; r <= 6; ++r) {
    const auto t = erdos_stone_trend(r, 10000);
    ok = ok && t.ok;
    for (const auto& row : t.rows) {
      const int n = row.n;
      const int alpha = n - ceil_div(n, r);
      // (1 - 1/r) - alpha/n = (n(r-1) - r alpha) / (r n); exact iff numerator 0, below 1/n iff numerator < r.
      const long num = static_cast<long>(n) * (r - 1) - static_cast<long>(r) * alpha;
      ok = ok && row.alpha == alpha && num >= 0 && num < r && (n % r == 0) == (num == 0) && row.exact == (num == 0);
      ++rows;
    }
  }
  std::ostringstream d;
  d << rows << " rows for r = 2..6, n <= 10000";
  return {ok, d.str()};
}

// 10. Supersaturation at desk scale.
Outcome supersaturation() {
  struct Case {
    int n, r, k;
  };
  bool ok = true;
  std::ostringstream d;
  for (const Case c : {Case{7, 3, 1}, Case{6, 2, 2}, Case{8, 2, 2}}) {
    const auto rep = verify_supersaturation(c.n, c.r, c.k, 0.05, scan_opts(8));
    ok = ok && rep.ok && rep.violations.empty();
    d << "(" << c.n << "," << c.r << "," << c.k << "): " << rep.qualifying << " qualifying, " << rep.violations.size()
      << " violations" << (rep.vacuous ? " (vacuous)" : "") << "; ";
  }
  return {ok, d.str(), 120.0};
}

// 11. graph6 round trips.
Outcome graph6_round_trip(const std::string& data_dir) {
  std::uint64_t exhaustive = 0, bad = 0;
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << triangle_bits(n)); ++c, ++exhaustive) {
      const Graph g = decode({n, c});
      bad += !(parse_graph6(write_graph6(g)) == g);
    }
  std::ostringstream d;
  d << exhaustive << " graphs n<=6, " << bad << " mismatches";
  std::ifstream corpus(data_dir + "/networkx_n8.g6");
  if (!corpus) {
    d << "; external n=8 corpus not found in " << data_dir;
    return {bad == 0, d.str()};
  }
  std::uint64_t lines = 0, corpus_bad = 0;
  for (std::string line; std::getline(corpus, line);) {
    if (line.empty()) continue;
    ++lines;
    const Graph g = parse_graph6(line);
    corpus_bad += g.order() != 8 || write_graph6(g) != line;
  }
  d << "; networkx n=8 corpus " << lines << " records, " << corpus_bad << " mismatches";
  return {bad == 0 && lines > 0 && corpus_bad == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : ALGCON_TEST_DATA_DIR;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Turan alpha formula, 2 <= r < n <= 30", turan_formula},
      {"alpha(T_{7,3}) = alpha(K_{3,3,1}) = 4", equal_alpha_pair},
      {"max alpha theorem exhaustive n <= 7", max_theorem},
      {"min alpha theorem exhaustive n <= 7", min_theorem},
      {"sandwich bound exhaustive n <= 7", sandwich},
      {"rewrite monotonicity grid", rewrite_monotonicity},
      {"Fiedler sign structure grid", fiedler_structure},
      {"oracle equivalence", oracle_equivalence},
      {"asymptotic trend table", trend},
      {"supersaturation desk scale", supersaturation},
      {"graph6 round trip", [&] { return graph6_round_trip(data_dir); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = out.limit_s == 0.0 || secs < out.limit_s;
    const bool pass = out.pass && in_time;
    failures += !pass;
    std::printf("criterion %2zu %s  %-40s %8.2fs%s  %s\n", i + 1, pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                in_time ? "" : " (over time limit)", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
