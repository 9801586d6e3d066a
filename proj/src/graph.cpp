#include "algcon/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "algcon/errors.hpp"

namespace algcon {

namespace {

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw InvalidParameter("graph order must be in [1, 64], got " + std::to_string(n));
  rows_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::uint64_t Graph::all_vertices() const noexcept { return low_bits(n_); }

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InvalidParameter("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParameter("self-loops are not allowed");
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(Vertex v) const { return std::popcount(rows_[v]); }

int Graph::min_degree() const {
  int d = n_;
  for (auto row : rows_) d = std::min(d, std::popcount(row));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (auto row : rows_) d = std::max(d, std::popcount(row));
  return d;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : rows_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

bool Graph::is_complete() const { return edge_count() == triangle_bits(n_); }

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return h;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  require(static_cast<int>(perm.size()) == n_, "permutation size must equal graph order");
  std::vector<bool> seen(n_, false);
  for (auto p : perm) {
    check_vertex(p);
    require(!seen[p], "relabeling is not a permutation");
    seen[p] = true;
  }
  Graph h(n_);
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

GraphCode encode(const Graph& g) {
  const int n = g.order();
  if (n > GraphCode::kMaxOrder)
    throw InvalidParameter("GraphCode supports orders up to 11, got " + std::to_string(n));
  GraphCode c{n, 0};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) c.code |= std::uint64_t{1} << triangle_index(i, j);
  return c;
}

Graph decode(GraphCode c) {
  if (c.n < 1 || c.n > GraphCode::kMaxOrder)
    throw InvalidParameter("GraphCode order must be in [1, 11], got " + std::to_string(c.n));
  const int bits = triangle_bits(c.n);
  if (bits < 64 && (c.code >> bits) != 0)
    throw InvalidParameter("GraphCode " + std::to_string(c.code) + " exceeds 2^" + std::to_string(bits));
  Graph g(c.n);
  int idx = 0;
  for (int j = 1; j < c.n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if ((c.code >> idx) & 1U) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
  if (n < 1) throw InvalidParameter("complete graph needs order >= 1, got " + std::to_string(n));
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) g.add_edge(i, j);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs order >= 3");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  require(!part_sizes.empty(), "at least one part is required");
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "part sizes must be positive");
    n += part_sizes[p];
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (part_of[i] != part_of[j]) g.add_edge(i, j);
  return g;
}

std::vector<int> turan_part_sizes(int n, int r) {
  if (r < 1 || r > n)
    throw InvalidParameter("Turan graph needs 1 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  const int k = n / r;
  const int t = n % r;
  std::vector<int> sizes(t, k + 1);
  sizes.insert(sizes.end(), r - t, k);
  return sizes;
}

Graph turan(int n, int r) {
  const auto sizes = turan_part_sizes(n, r);
  return complete_multipartite(sizes);
}

std::int64_t turan_edge_count(int n, int r) {
  if (r < 1 || r > n)
    throw InvalidParameter("Turan edge count needs 1 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  // (n^2 - n^2/r - t(r-t)/r) / 2, kept integral by multiplying through by r.
  const std::int64_t nn = n;
  const std::int64_t rr = r;
  const std::int64_t t = nn % rr;
  const std::int64_t numer = nn * nn * rr - nn * nn - t * (rr - t);
  return numer / (2 * rr);
}

Graph kite(int n, int r) {
  if (r < 2 || r > n)
    throw InvalidParameter("kite needs 2 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  return attach_path(complete(r), 0, n - r);
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  const int na = a.order();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < b.order(); ++j) g.add_edge(i, na + j);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  Graph g(na + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!g.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

Graph attach_path(const Graph& g, Vertex v, int k) {
  if (v < 0 || v >= g.order())
    throw InvalidParameter("attachment vertex " + std::to_string(v) + " out of range");
  require(k >= 0, "path length must be non-negative");
  const int n = g.order();
  Graph h(n + k);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  Vertex prev = v;
  for (int i = 0; i < k; ++i) {
    h.add_edge(prev, n + i);
    prev = n + i;
  }
  return h;
}

Graph tailed_clique(const TailedCliqueSpec& spec) {
  require(spec.r >= 3, "tailed clique needs r >= 3, got " + std::to_string(spec.r));
  require(spec.k >= 0 && spec.l >= 0, "tail lengths must be non-negative");
  return attach_path(attach_path(complete(spec.r), 0, spec.k), 1, spec.l);
}

TailedCliqueLayout tailed_clique_layout(const TailedCliqueSpec& spec) {
  require(spec.r >= 3 && spec.k >= 0 && spec.l >= 0, "invalid tailed clique parameters");
  TailedCliqueLayout layout;
  for (int w = 2; w < spec.r; ++w) layout.hubs.push_back(w);
  for (int i = 0; i < spec.k; ++i) layout.tail_u.push_back(spec.r + i);
  for (int i = 0; i < spec.l; ++i) layout.tail_v.push_back(spec.r + spec.k + i);
  return layout;
}

Graph theta_kite(int r, int k) {
  require(r >= 3, "theta kite needs r >= 3, got " + std::to_string(r));
  require(k >= 1, "theta kite needs k >= 1, got " + std::to_string(k));
  Graph g = attach_path(complete(r), 0, k);
  g.add_edge(1, r);
  return g;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::uint64_t unseen = g.all_vertices();
  while (unseen) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto f = frontier; f; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    std::vector<Vertex> vs;
    for (auto c = comp; c; c &= c - 1) vs.push_back(std::countr_zero(c));
    out.push_back(std::move(vs));
  }
  return out;
}

bool is_connected(const Graph& g) {
  std::uint64_t comp = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (auto f = frontier; f; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
    frontier = next & ~comp;
    comp |= next;
  }
  return comp == g.all_vertices();
}

namespace {

// Unit vertex capacities via the in/out split; edges between split nodes are uncapacitated.
class VertexSplitFlow {
 public:
  explicit VertexSplitFlow(const Graph& g) : n_(g.order()), head_(2 * n_, -1) {
    for (int v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
    for (auto [a, b] : g.edges()) {
      add_arc(out(a), in(b), kInf);
      add_arc(out(b), in(a), kInf);
    }
    base_cap_.reserve(arcs_.size());
    for (const auto& arc : arcs_) base_cap_.push_back(arc.cap);
  }

  // Maximum number of internally vertex-disjoint s-t paths, stopping early at `limit`.
  int max_flow(Vertex s, Vertex t, int limit) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = base_cap_[i];
    const int source = out(s);
    const int sink = in(t);
    int flow = 0;
    std::vector<int> parent_arc(2 * n_);
    while (flow < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      parent_arc[source] = -2;
      while (!queue.empty() && parent_arc[sink] == -1) {
        int x = queue.front();
        queue.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          int y = arcs_[a].to;
          if (arcs_[a].cap > 0 && parent_arc[y] == -1) {
            parent_arc[y] = a;
            queue.push(y);
          }
        }
      }
      if (parent_arc[sink] == -1) break;
      for (int y = sink; y != source;) {
        int a = parent_arc[y];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        y = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 2;
  struct Arc {
    int to;
    int cap;
    int next;
  };

  int in(Vertex v) const { return 2 * v; }
  int out(Vertex v) const { return 2 * v + 1; }

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> base_cap_;
};

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  VertexSplitFlow flow(g);
  int best = g.min_degree();
  for (int t = 1; t < n; ++t)
    for (int s = 0; s < t; ++s)
      if (!g.adjacent(s, t)) best = std::min(best, flow.max_flow(s, t, best));
  return best;
}

namespace {

// Colour refinement run on both graphs with a shared palette so colours are comparable.
bool refine_jointly(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
  const int n = a.order();
  ca.assign(n, 0);
  cb.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> palette;
    auto signature = [](const Graph& g, const std::vector<int>& colour, Vertex v) {
      std::vector<int> sig{colour[v]};
      for (auto nb = g.neighbours(v); nb; nb &= nb - 1) sig.push_back(colour[std::countr_zero(nb)]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (int v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      palette.emplace(sa[v], 0);
      palette.emplace(sb[v], 0);
    }
    int id = 0;
    for (auto& [sig, c] : palette) c = id++;
    std::vector<int> na(n), nb(n);
    for (int v = 0; v < n; ++v) {
      na[v] = palette[sa[v]];
      nb[v] = palette[sb[v]];
    }
    auto ha = na, hb = nb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    const auto classes = [](const std::vector<int>& c) {
      auto s = c;
      std::sort(s.begin(), s.end());
      return std::unique(s.begin(), s.end()) - s.begin();
    };
    const bool stable = classes(na) == classes(ca);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return true;
}

bool extend(const Graph& a, const Graph& b, const std::vector<int>& ca, const std::vector<int>& cb,
            const std::vector<Vertex>& order, std::size_t depth, std::vector<Vertex>& map, std::uint64_t used) {
  if (depth == order.size()) return true;
  const Vertex x = order[depth];
  for (Vertex y = 0; y < b.order(); ++y) {
    if ((used >> y) & 1U || cb[y] != ca[x]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) ok = a.adjacent(x, order[d]) == b.adjacent(y, map[order[d]]);
    if (!ok) continue;
    map[x] = y;
    if (extend(a, b, ca, cb, order, depth + 1, map, used | (std::uint64_t{1} << y))) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  std::vector<int> ca, cb;
  if (!refine_jointly(a, b, ca, cb)) return false;

  // Map rarest colour classes first, then follow adjacency so consistency checks bite early.
  const int n = a.order();
  std::map<int, int> class_size;
  for (int c : ca) ++class_size[c];
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    std::pair<int, int> best_key{-1, 0};
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (auto u : order) links += a.adjacent(u, v);
      std::pair<int, int> key{links, -class_size[ca[v]]};
      if (best == -1 || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::vector<Vertex> map(n, -1);
  return extend(a, b, ca, cb, order, 0, map, 0);
}

}  // namespace algcon
