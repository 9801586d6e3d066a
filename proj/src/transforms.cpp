#include "algcon/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "algcon/errors.hpp"
#include "algcon/spectra.hpp"

namespace algcon {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

std::uint64_t tail_mask(const TailSpec& t) {
  std::uint64_t m = 0;
  for (auto v : t.vertices) m |= std::uint64_t{1} << v;
  return m;
}

void validate_pair(const Graph& g, const TailSpec& p, const TailSpec& q) {
  validate_tail(g, p);
  validate_tail(g, q);
  require((tail_mask(p) & tail_mask(q)) == 0, "tails overlap");
  require(!((tail_mask(p) >> q.root) & 1U) && !((tail_mask(q) >> p.root) & 1U), "a tail contains the other root");
}

}  // namespace

void validate_tail(const Graph& g, const TailSpec& tail) {
  const int n = g.order();
  require(tail.root >= 0 && tail.root < n, "tail root out of range");
  require(!tail.vertices.empty(), "tail must have at least one vertex");
  std::uint64_t seen = std::uint64_t{1} << tail.root;
  Vertex prev = tail.root;
  for (std::size_t i = 0; i < tail.vertices.size(); ++i) {
    const Vertex v = tail.vertices[i];
    require(v >= 0 && v < n, "tail vertex out of range");
    require(!((seen >> v) & 1U), "tail repeats a vertex");
    seen |= std::uint64_t{1} << v;
    require(g.adjacent(prev, v), "consecutive tail vertices are not adjacent");
    const bool last = i + 1 == tail.vertices.size();
    require(g.degree(v) == (last ? 1 : 2), "tail vertex has extra attachments");
    prev = v;
  }
}

std::pair<Graph, Graph> graft_endpoints(const Graph& g, const TailSpec& p, const TailSpec& q) {
  validate_pair(g, p, q);
  require(p.root != q.root, "grafting needs distinct roots");
  Graph first = g;
  first.remove_edge(p.root, p.vertices.front());
  first.add_edge(p.vertices.front(), q.vertices.back());
  Graph second = g;
  second.remove_edge(q.root, q.vertices.front());
  second.add_edge(p.vertices.back(), q.vertices.front());
  return {std::move(first), std::move(second)};
}

Graph slide_tail(const Graph& g, const TailSpec& p, const TailSpec& q) {
  validate_pair(g, p, q);
  require(p.root == q.root, "sliding needs both tails at the same root");
  require(p.length() >= q.length(), "sliding needs |p| >= |q|");
  const Vertex moved = q.vertices.back();
  const Vertex before = q.length() >= 2 ? q.vertices[q.vertices.size() - 2] : q.root;
  Graph out = g;
  out.remove_edge(before, moved);
  out.add_edge(p.vertices.back(), moved);
  return out;
}

std::pair<Graph, Graph> switch_clique_attachment(const TailedCliqueSpec& spec) {
  require(spec.r >= 3, "switching needs r >= 3");
  require(spec.k >= 1 && spec.l >= 1, "switching is undefined when a tail is empty");
  const Graph g = tailed_clique(spec);
  const auto lay = tailed_clique_layout(spec);
  Graph toward_v = g;
  Graph toward_u = g;
  for (auto w : lay.hubs) {
    toward_v.remove_edge(lay.u, w);
    toward_v.add_edge(lay.tail_v.front(), w);
    toward_u.remove_edge(lay.v, w);
    toward_u.add_edge(lay.tail_u.front(), w);
  }
  return {std::move(toward_v), std::move(toward_u)};
}

GraftCheck check_graft(const Graph& g, const TailSpec& p, const TailSpec& q) {
  auto [first, second] = graft_endpoints(g, p, q);
  const auto x = fiedler_vector(g);
  GraftCheck c;
  c.alpha_base = x.alpha;
  c.alpha_first = algebraic_connectivity(first);
  c.alpha_second = algebraic_connectivity(second);
  c.multiplicity = x.multiplicity;
  c.tail_end_product = x.values[p.vertices.back()] * x.values[q.vertices.back()];
  // A product at rounding level is an exact zero of the true vector.
  c.hypothesis_holds = x.simple() && c.tail_end_product >= -1e-12;
  const double lo = std::min(c.alpha_first, c.alpha_second);
  c.conclusion_holds = c.alpha_base >= lo - tol::kCompare;
  c.equality = std::abs(c.alpha_base - lo) <= tol::kEquality;
  return c;
}

SlideCheck check_slide(const Graph& g, const TailSpec& p, const TailSpec& q) {
  const Graph slid = slide_tail(g, p, q);
  const auto x = fiedler_vector(g);
  SlideCheck c;
  c.alpha_base = x.alpha;
  c.alpha_slid = algebraic_connectivity(slid);
  c.multiplicity = x.multiplicity;
  c.holds = c.alpha_base >= c.alpha_slid - tol::kCompare;
  c.strict = c.alpha_base > c.alpha_slid + tol::kStrict;
  c.strictness_predicted =
      x.simple() && (std::abs(x.values[p.vertices.front()]) > 1e-9 || std::abs(x.values[q.vertices.front()]) > 1e-9);
  return c;
}

SwitchCheck check_switch(const TailedCliqueSpec& spec) {
  auto [toward_v, toward_u] = switch_clique_attachment(spec);
  SwitchCheck c;
  c.alpha_base = algebraic_connectivity(tailed_clique(spec));
  c.alpha_longer_u = algebraic_connectivity(toward_v);
  c.alpha_longer_v = algebraic_connectivity(toward_u);
  c.holds = c.alpha_base > std::min(c.alpha_longer_u, c.alpha_longer_v) + tol::kStrict;
  return c;
}

FiedlerSignReport fiedler_sign_report(const TailedCliqueSpec& spec) {
  require(spec.r >= 3 && spec.k >= 1 && spec.l >= 1, "sign report needs r >= 3 and k, l >= 1");
  const auto lay = tailed_clique_layout(spec);
  auto f = fiedler_vector(tailed_clique(spec));

  FiedlerSignReport rep;
  rep.spec = spec;
  rep.alpha = f.alpha;
  rep.multiplicity = f.multiplicity;
  rep.skipped = !f.simple();

  auto& x = f.values;
  const Vertex w1 = lay.hubs.front();
  const Vertex uk = lay.tail_u.back();
  const Vertex vl = lay.tail_v.back();
  const bool flip = x[w1] < -1e-12 || (std::abs(x[w1]) <= 1e-12 && x[uk] < 0);
  if (flip)
    for (double& y : x) y = -y;

  double lo = x[w1], hi = x[w1];
  for (auto w : lay.hubs) {
    lo = std::min(lo, x[w]);
    hi = std::max(hi, x[w]);
  }
  rep.hub_spread = hi - lo;
  rep.tail_end_product = x[uk] * x[vl];

  const bool u_positive = x[uk] > 0;
  const Vertex root = u_positive ? lay.u : lay.v;
  const auto& tail = u_positive ? lay.tail_u : lay.tail_v;
  bool monotone = x[w1] < x[root] && x[root] < x[tail.front()];
  for (std::size_t i = 1; i < tail.size(); ++i) monotone = monotone && x[tail[i - 1]] < x[tail[i]];
  rep.tail_monotone = monotone;

  rep.ok = rep.skipped || (rep.hub_spread <= tol::kMultiplicity && rep.tail_end_product < -tol::kStrict && monotone);
  rep.fiedler = std::move(x);
  return rep;
}

ThetaKiteComparison theta_vs_kite(int r, int k) {
  require(r >= 3 && k >= 1, "theta/kite comparison needs r >= 3 and k >= 1");
  ThetaKiteComparison c;
  c.alpha_theta = algebraic_connectivity(theta_kite(r, k));
  c.alpha_kite = algebraic_connectivity(kite(r + k, r));
  c.strict = c.alpha_theta > c.alpha_kite + tol::kStrict;
  return c;
}

KiteChain kite_minimality_chain(int r, int n) {
  require(r >= 3, "kite chain needs r >= 3");
  require(n >= r + 2, "kite chain needs n >= r + 2");
  KiteChain chain;
  chain.r = r;
  chain.n = n;
  const int total = n - r;
  for (int k = (total + 1) / 2; k <= total - 1; ++k) {
    const int l = total - k;
    chain.entries.push_back({k, l, algebraic_connectivity(tailed_clique({r, k, l}))});
  }
  chain.kite_alpha = algebraic_connectivity(kite(n, r));
  chain.strictly_decreasing = true;
  for (std::size_t i = 1; i < chain.entries.size(); ++i)
    chain.strictly_decreasing =
        chain.strictly_decreasing && chain.entries[i - 1].alpha > chain.entries[i].alpha + tol::kStrict;
  chain.above_kite = std::all_of(chain.entries.begin(), chain.entries.end(),
                                 [&](const ChainEntry& e) { return e.alpha > chain.kite_alpha + tol::kStrict; });
  return chain;
}

std::vector<SweepRow> tailed_clique_sweep(std::span<const int> clique_orders, int max_tail_total) {
  std::vector<SweepRow> rows;
  for (int r : clique_orders)
    for (int total = 1; total <= max_tail_total; ++total)
      for (int l = 0; 2 * l <= total; ++l) {
        const int k = total - l;
        rows.push_back({r, k, l, algebraic_connectivity(tailed_clique({r, k, l}))});
      }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::ostringstream os;
  os.precision(17);
  os << "r,k,l,alpha\n";
  for (const auto& row : rows) os << row.r << ',' << row.k << ',' << row.l << ',' << row.alpha << '\n';
  return os.str();
}

}  // namespace algcon
