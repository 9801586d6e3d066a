#include "algcon/scan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "algcon/clique.hpp"
#include "algcon/errors.hpp"
#include "algcon/graph6.hpp"
#include "algcon/spectra.hpp"

namespace algcon {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_guard(int n, int guard) {
  if (guard < 1 || guard > kMaxGuard)
    throw InvalidParameter("enumeration guard must be in [1, " + std::to_string(kMaxGuard) + "], got " +
                           std::to_string(guard));
  if (n < 1) throw InvalidParameter("enumeration order must be positive");
  if (n > guard)
    throw GuardExceeded("refusing to enumerate order " + std::to_string(n) + " above guard " + std::to_string(guard) +
                        "; raise the guard explicitly");
}

std::uint64_t code_count(int n) { return std::uint64_t{1} << triangle_bits(n); }

// Splits [0, total) into `jobs` contiguous ranges, scans them concurrently and returns the
// partial results in range order so that merging is independent of scheduling.
template <class Partial, class Visit>
std::vector<Partial> run_partitioned(std::uint64_t total, int jobs, Visit visit) {
  jobs = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, std::max<std::uint64_t>(total, 1)));
  std::vector<Partial> parts(jobs);
  const std::uint64_t base = total / jobs;
  const std::uint64_t extra = total % jobs;
  auto range_begin = [&](std::uint64_t j) { return base * j + std::min(j, extra); };
  auto work = [&](int j) {
    const std::uint64_t end = range_begin(j + 1);
    for (std::uint64_t c = range_begin(j); c < end; ++c) visit(c, parts[j]);
  };
  if (jobs == 1) {
    work(0);
    return parts;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> threads;
    for (int j = 0; j < jobs; ++j)
      threads.emplace_back([&, j] {
        try {
          work(j);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
  return parts;
}

struct ExtremePartial {
  std::uint64_t examined = 0;
  std::uint64_t scanned = 0;
  std::uint64_t prefiltered = 0;
  bool any = false;
  double best = 0.0;
  std::vector<std::pair<Graph, double>> candidates;
  std::vector<Graph> counterexamples;
  std::vector<Graph> characterization_failures;
};

struct MaxProblem {
  int n;
  int r;
  double bound;
  bool join_rule;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

MaxProblem max_problem(int n, int r) {
  if (r < 2 || r >= n)
    throw InvalidParameter("max theorem needs 2 <= r < n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  const int t = n % r;
  return {n, r, static_cast<double>(n - ceil_div(n, r)), t != 0 && t != r - 1};
}

void visit_max(const Graph& g, const MaxProblem& p, ExtremePartial& acc) {
  ++acc.examined;
  if (g.order() != p.n || g.is_complete() || !is_kr_free(g, p.r + 1)) return;
  ++acc.scanned;
  // alpha <= min degree off K_n, and every graph passing the join rule has min degree >= bound.
  if (g.min_degree() < p.bound - tol::kEquality) {
    ++acc.prefiltered;
    return;
  }
  const double a = algebraic_connectivity(g);
  if (!acc.any || a > acc.best) acc.best = a;
  acc.any = true;
  if (a > p.bound + tol::kCompare) acc.counterexamples.push_back(g);
  if (a >= p.bound - tol::kEquality) {
    acc.candidates.emplace_back(g, a);
  } else if (p.join_rule && check_join_characterization(g, p.n, p.r).holds) {
    acc.characterization_failures.push_back(g);
  }
}

struct MinProblem {
  int n;
  int r;
  double bound;
};

MinProblem min_problem(int n, int r) {
  if (r < 2 || r > n)
    throw InvalidParameter("min theorem needs 2 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  return {n, r, algebraic_connectivity(kite(n, r))};
}

void visit_min(const Graph& g, const MinProblem& p, ExtremePartial& acc) {
  ++acc.examined;
  if (g.order() != p.n || !is_connected(g) || clique_number(g) != p.r) return;
  ++acc.scanned;
  const double a = algebraic_connectivity(g);
  if (!acc.any || a < acc.best) acc.best = a;
  acc.any = true;
  if (a < p.bound - tol::kCompare) acc.counterexamples.push_back(g);
  if (a <= p.bound + tol::kEquality) acc.candidates.emplace_back(g, a);
}

std::vector<std::string> to_graph6_list(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(write_graph6(g));
  return out;
}

// Representatives of the isomorphism classes among `graphs`, first occurrence kept.
template <class T, class GetGraph>
std::vector<T> dedup_isomorphic(const std::vector<T>& items, GetGraph get) {
  std::vector<T> reps;
  for (const auto& item : items) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const T& r) { return is_isomorphic(get(r), get(item)); });
    if (!seen) reps.push_back(item);
  }
  return reps;
}

ExtremalCertificate merge(std::vector<ExtremePartial> parts, int n, int r, bool maximise, double bound) {
  ExtremalCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.mode = maximise ? "max" : "min";
  cert.bound = bound;
  bool any = false;
  std::vector<std::pair<Graph, double>> candidates;
  std::vector<Graph> counterexamples, failures;
  for (auto& p : parts) {
    cert.graphs_examined += p.examined;
    cert.graphs_prefiltered += p.prefiltered;
    cert.graphs_scanned += p.scanned;
    if (p.any && (!any || (maximise ? p.best > cert.achieved : p.best < cert.achieved))) cert.achieved = p.best;
    any = any || p.any;
    std::move(p.candidates.begin(), p.candidates.end(), std::back_inserter(candidates));
    std::move(p.counterexamples.begin(), p.counterexamples.end(), std::back_inserter(counterexamples));
    std::move(p.characterization_failures.begin(), p.characterization_failures.end(), std::back_inserter(failures));
  }
  if (!any) cert.achieved = std::numeric_limits<double>::quiet_NaN();

  std::erase_if(candidates, [&](const auto& c) { return std::abs(c.second - cert.achieved) > tol::kEquality; });
  for (const auto& [g, a] : dedup_isomorphic(candidates, [](const auto& c) -> const Graph& { return c.first; }))
    cert.achievers.push_back({encode(g), write_graph6(g), a});
  cert.counterexamples = to_graph6_list(counterexamples);
  cert.characterization_failures = to_graph6_list(failures);
  return cert;
}

void characterize_max(ExtremalCertificate& cert) {
  const int n = cert.n, r = cert.r;
  const Graph reference = turan(n, r);
  const int t = n % r;
  if (t == 0 || t == r - 1) {
    cert.rule = "turan-unique";
    cert.characterization_ok = cert.achievers.size() == 1 && is_isomorphic(decode(cert.achievers[0].code), reference);
    return;
  }
  cert.rule = "join-decomposition";
  bool all_decompose = true;
  bool turan_present = false;
  for (const auto& a : cert.achievers) {
    const Graph g = decode(a.code);
    all_decompose = all_decompose && check_join_characterization(g, n, r).holds;
    turan_present = turan_present || is_isomorphic(g, reference);
  }
  cert.characterization_ok = all_decompose && turan_present && cert.characterization_failures.empty();
}

void characterize_min(ExtremalCertificate& cert) {
  cert.rule = "kite-unique";
  cert.characterization_ok =
      cert.achievers.size() == 1 && is_isomorphic(decode(cert.achievers[0].code), kite(cert.n, cert.r));
}

}  // namespace

GraphEnumeration::GraphEnumeration(int n, GraphFilter filter, int guard)
    : n_(n), filter_(std::move(filter)), limit_(0) {
  check_guard(n, guard);
  limit_ = code_count(n);
}

GraphEnumeration::iterator::iterator(const GraphEnumeration* owner, std::uint64_t code)
    : owner_(owner), code_(code) {
  settle();
}

void GraphEnumeration::iterator::settle() {
  current_.reset();
  for (; code_ < owner_->limit_; ++code_) {
    Graph g = decode({owner_->n_, code_});
    if (!owner_->filter_ || owner_->filter_(g)) {
      current_.emplace(std::move(g));
      return;
    }
  }
}

GraphEnumeration::iterator& GraphEnumeration::iterator::operator++() {
  ++code_;
  settle();
  return *this;
}

GraphEnumeration enumerate_graphs(int n, GraphFilter filter, int guard) {
  return GraphEnumeration(n, std::move(filter), guard);
}

bool ExtremalCertificate::passed() const {
  return graphs_scanned > 0 && counterexamples.empty() && characterization_failures.empty() && characterization_ok &&
         std::abs(achieved - bound) <= tol::kEquality;
}

std::string to_json(const ExtremalCertificate& c) {
  ordered_json j;
  j["n"] = c.n;
  j["r"] = c.r;
  j["mode"] = c.mode;
  j["source"] = c.source;
  j["bound"] = c.bound;
  j["achieved"] = std::isnan(c.achieved) ? ordered_json(nullptr) : ordered_json(c.achieved);
  j["graphs_scanned"] = c.graphs_scanned;
  j["graphs_examined"] = c.graphs_examined;
  j["graphs_prefiltered"] = c.graphs_prefiltered;
  ordered_json achievers = ordered_json::array();
  for (const auto& a : c.achievers)
    achievers.push_back(ordered_json{{"code", a.code.code}, {"graph6", a.graph6}, {"alpha", a.alpha}});
  j["achievers"] = std::move(achievers);
  j["rule"] = c.rule;
  j["characterization_ok"] = c.characterization_ok;
  j["counterexamples"] = c.counterexamples;
  j["characterization_failures"] = c.characterization_failures;
  j["passed"] = c.passed();
  return j.dump(2);
}

JoinDecomposition join_decomposition(const Graph& g) {
  JoinDecomposition d;
  d.vertex_sets = connected_components(complement(g));
  for (const auto& vs : d.vertex_sets) d.factors.push_back(g.induced(vs));
  return d;
}

JoinCharacterization check_join_characterization(const Graph& g, int n, int r) {
  if (g.order() != n) throw InvalidParameter("graph order does not match n");
  if (r < 2 || r >= n) throw InvalidParameter("join characterization needs 2 <= r < n");
  const int k = n / r;
  const int t = n % r;
  if (t == 0 || t == r - 1)
    throw NotApplicable("join characterization applies only to n = kr + t with 0 < t < r - 1 (n=" +
                        std::to_string(n) + ", r=" + std::to_string(r) + ")");

  JoinCharacterization out;
  out.decomposition = join_decomposition(g);
  const auto& factors = out.decomposition.factors;
  std::vector<int> candidates;
  for (int i = 0; i < static_cast<int>(factors.size()); ++i)
    if (factors[i].order() == k + 1 && factors[i].edge_count() == 0) candidates.push_back(i);
  if (static_cast<int>(candidates.size()) < t) return out;

  // Lexicographic t-subsets of the candidate factors.
  std::vector<int> pick(t);
  for (int i = 0; i < t; ++i) pick[i] = i;
  const int m = static_cast<int>(candidates.size());
  while (true) {
    std::vector<bool> taken(n, false);
    std::vector<int> selected;
    for (int i : pick) {
      selected.push_back(candidates[i]);
      for (auto v : out.decomposition.vertex_sets[candidates[i]]) taken[v] = true;
    }
    std::vector<Vertex> rest;
    for (int v = 0; v < n; ++v)
      if (!taken[v]) rest.push_back(v);
    const Graph h = g.induced(rest);
    if (static_cast<int>(rest.size()) == n - (k + 1) * t && is_kr_free(h, r + 1 - t)) {
      const double a = algebraic_connectivity(h);
      if (a >= n - (k + 1) * (t + 1) - tol::kCompare) {
        out.holds = true;
        out.edgeless_factors = std::move(selected);
        out.remainder = std::move(rest);
        out.remainder_alpha = a;
        return out;
      }
    }
    int i = t - 1;
    while (i >= 0 && pick[i] == m - t + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

ExtremalCertificate verify_max_theorem(int n, int r, const ScanOptions& options) {
  check_guard(n, options.guard);
  const MaxProblem p = max_problem(n, r);
  auto parts = run_partitioned<ExtremePartial>(code_count(n), options.jobs, [&](std::uint64_t c, ExtremePartial& acc) {
    visit_max(decode({n, c}), p, acc);
  });
  auto cert = merge(std::move(parts), n, r, true, p.bound);
  cert.source = "enumeration";
  characterize_max(cert);
  return cert;
}

ExtremalCertificate verify_max_theorem(std::span<const Graph> corpus, int n, int r, const std::string& provenance) {
  const MaxProblem p = max_problem(n, r);
  std::vector<ExtremePartial> parts(1);
  for (const auto& g : corpus) visit_max(g, p, parts[0]);
  auto cert = merge(std::move(parts), n, r, true, p.bound);
  cert.source = "corpus:" + provenance;
  characterize_max(cert);
  return cert;
}

ExtremalCertificate verify_min_theorem(int n, int r, const ScanOptions& options) {
  check_guard(n, options.guard);
  const MinProblem p = min_problem(n, r);
  auto parts = run_partitioned<ExtremePartial>(code_count(n), options.jobs, [&](std::uint64_t c, ExtremePartial& acc) {
    visit_min(decode({n, c}), p, acc);
  });
  auto cert = merge(std::move(parts), n, r, false, p.bound);
  cert.source = "enumeration";
  characterize_min(cert);
  return cert;
}

ExtremalCertificate verify_min_theorem(std::span<const Graph> corpus, int n, int r, const std::string& provenance) {
  const MinProblem p = min_problem(n, r);
  std::vector<ExtremePartial> parts(1);
  for (const auto& g : corpus) visit_min(g, p, parts[0]);
  auto cert = merge(std::move(parts), n, r, false, p.bound);
  cert.source = "corpus:" + provenance;
  characterize_min(cert);
  return cert;
}

TrendTable erdos_stone_trend(int r, int n_max) {
  if (r < 2) throw InvalidParameter("trend needs r >= 2");
  if (n_max < r) throw InvalidParameter("trend needs n_max >= r");
  TrendTable table;
  table.r = r;
  table.ok = true;
  for (int n = r; n <= n_max; ++n) {
    const std::int64_t c = ceil_div(n, r);
    TrendRow row;
    row.n = n;
    row.alpha = static_cast<int>(n - c);
    row.ratio = static_cast<double>(row.alpha) / n;
    // (1 - 1/r) - (n - c)/n = (rc - n) / (rn)
    const std::int64_t gap = r * c - n;
    row.exact = gap == 0;
    row.within = gap >= 0 && gap < r;
    table.ok = table.ok && row.within && (n % r != 0 || row.exact);
    table.rows.push_back(row);
  }
  return table;
}

namespace {

struct SuperPartial {
  std::uint64_t examined = 0;
  std::uint64_t prefiltered = 0;
  std::uint64_t qualifying = 0;
  std::vector<Graph> violations;
};

struct SuperProblem {
  int n, r, k;
  double epsilon;
  double threshold;
  int min_delta;  // alpha <= delta for non-complete graphs
  int min_edges;
  std::vector<int> parts;
};

SuperProblem super_problem(int n, int r, int k, double epsilon) {
  if (r < 2 || k < 1) throw InvalidParameter("supersaturation needs r >= 2 and k >= 1");
  if (k * r > kMultipartiteGuard) throw GuardExceeded("supersaturation needs kr <= 8");
  if (!(epsilon > 0.0)) throw InvalidParameter("supersaturation needs epsilon > 0");
  SuperProblem p{n, r, k, epsilon, 0.0, 0, 0, std::vector<int>(r, k)};
  p.threshold = n - ceil_div(n, r) + epsilon * n;
  p.min_delta = static_cast<int>(std::ceil(p.threshold - tol::kCompare));
  p.min_edges = std::min(triangle_bits(n), (n * p.min_delta + 1) / 2);
  return p;
}

void visit_super(const Graph& g, const SuperProblem& p, SuperPartial& acc) {
  if (!g.is_complete() && g.min_degree() < p.min_delta) {
    ++acc.prefiltered;
    return;
  }
  if (algebraic_connectivity(g) < p.threshold - tol::kCompare) return;
  ++acc.qualifying;
  if (!contains_complete_multipartite(g, p.parts)) acc.violations.push_back(g);
}

SupersaturationReport finish_super(const SuperProblem& p, const std::vector<SuperPartial>& parts) {
  SupersaturationReport rep;
  rep.n = p.n;
  rep.r = p.r;
  rep.k = p.k;
  rep.epsilon = p.epsilon;
  rep.threshold = p.threshold;
  std::vector<Graph> violations;
  for (const auto& part : parts) {
    rep.graphs_examined += part.examined;
    rep.prefiltered += part.prefiltered;
    rep.qualifying += part.qualifying;
    violations.insert(violations.end(), part.violations.begin(), part.violations.end());
  }
  rep.violations = to_graph6_list(violations);
  rep.vacuous = rep.qualifying == 0;
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace

SupersaturationReport verify_supersaturation(int n, int r, int k, double epsilon, const ScanOptions& options) {
  check_guard(n, options.guard);
  const SuperProblem p = super_problem(n, r, k, epsilon);
  auto parts = run_partitioned<SuperPartial>(code_count(n), options.jobs, [&](std::uint64_t c, SuperPartial& acc) {
    ++acc.examined;
    // The code's popcount is the edge count; 2e >= n * delta.
    if (std::popcount(c) < p.min_edges) {
      ++acc.prefiltered;
      return;
    }
    visit_super(decode({n, c}), p, acc);
  });
  return finish_super(p, parts);
}

SupersaturationReport verify_supersaturation(std::span<const Graph> corpus, int n, int r, int k, double epsilon) {
  const SuperProblem p = super_problem(n, r, k, epsilon);
  std::vector<SuperPartial> parts(1);
  for (const auto& g : corpus) {
    if (g.order() != n) continue;
    ++parts[0].examined;
    visit_super(g, p, parts[0]);
  }
  return finish_super(p, parts);
}

namespace {

struct SandwichPartial {
  std::uint64_t scanned = 0;
  std::vector<Graph> violations;
  std::vector<Graph> equality;
};

}  // namespace

SandwichScanReport verify_sandwich(int n, const ScanOptions& options) {
  check_guard(n, options.guard);
  if (n < 3) throw InvalidParameter("sandwich scan needs n >= 3 (smaller orders have no connected non-complete graph)");
  auto parts = run_partitioned<SandwichPartial>(code_count(n), options.jobs, [&](std::uint64_t c, SandwichPartial& acc) {
    const Graph g = decode({n, c});
    if (g.is_complete() || !is_connected(g)) return;
    ++acc.scanned;
    const int omega = clique_number(g);
    const double a = algebraic_connectivity(g);
    const double lower = n / (n - a);
    const double upper = n + 1.0 - 4.0 / (n * a);
    constexpr double slack = 1e-9;
    if (lower > omega + slack || omega > upper + slack) acc.violations.push_back(g);
    if (std::abs(omega - lower) <= tol::kEquality) acc.equality.push_back(g);
  });

  SandwichScanReport rep;
  rep.n = n;
  std::vector<Graph> violations, equality;
  for (auto& p : parts) {
    rep.graphs_scanned += p.scanned;
    violations.insert(violations.end(), p.violations.begin(), p.violations.end());
    equality.insert(equality.end(), p.equality.begin(), p.equality.end());
  }
  rep.violations = to_graph6_list(violations);
  const auto classes = dedup_isomorphic(equality, [](const Graph& g) -> const Graph& { return g; });
  rep.lower_equality_classes = to_graph6_list(classes);

  std::vector<Graph> expected;
  for (int r = 2; r < n; ++r)
    if (n % r == 0) expected.push_back(turan(n, r));
  rep.lower_equality_ok =
      classes.size() == expected.size() && std::all_of(expected.begin(), expected.end(), [&](const Graph& t) {
        return std::any_of(classes.begin(), classes.end(), [&](const Graph& c) { return is_isomorphic(c, t); });
      });
  rep.ok = rep.violations.empty() && rep.lower_equality_ok;
  return rep;
}

std::string to_json(const TrendTable& table) {
  ordered_json j;
  j["r"] = table.r;
  j["limit"] = 1.0 - 1.0 / table.r;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows)
    rows.push_back(ordered_json{{"n", row.n}, {"alpha", row.alpha}, {"ratio", row.ratio}, {"exact", row.exact},
                                {"within", row.within}});
  j["rows"] = std::move(rows);
  j["ok"] = table.ok;
  return j.dump(2);
}

std::string to_json(const SupersaturationReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["r"] = r.r;
  j["k"] = r.k;
  j["epsilon"] = r.epsilon;
  j["threshold"] = r.threshold;
  j["graphs_examined"] = r.graphs_examined;
  j["prefiltered"] = r.prefiltered;
  j["qualifying"] = r.qualifying;
  j["violations"] = r.violations;
  j["vacuous"] = r.vacuous;
  j["ok"] = r.ok;
  return j.dump(2);
}

std::string to_json(const SandwichScanReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["graphs_scanned"] = r.graphs_scanned;
  j["violations"] = r.violations;
  j["lower_equality_classes"] = r.lower_equality_classes;
  j["lower_equality_ok"] = r.lower_equality_ok;
  j["ok"] = r.ok;
  return j.dump(2);
}

}  // namespace algcon
