#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace algcon {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, at most 64 vertices.
///
/// Each vertex owns one 64-bit row holding its neighbourhood, so edge tests are O(1)
/// and neighbourhood intersections are a single AND.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  /// Edgeless graph of order n, 1 <= n <= 64.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t neighbours(Vertex v) const { return rows_[v]; }
  std::uint64_t all_vertices() const noexcept;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  int min_degree() const;
  int max_degree() const;
  int edge_count() const;
  std::vector<int> degree_sequence() const;  // sorted descending
  std::vector<Edge> edges() const;           // (u, v) with u < v, ordered by v then u

  bool is_complete() const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Vertex v becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Index of the pair (i, j), i < j, in the column-major upper triangle:
/// (0,1), (0,2), (1,2), (0,3), ...
constexpr int triangle_index(int i, int j) noexcept { return j * (j - 1) / 2 + i; }
constexpr int triangle_bits(int n) noexcept { return n * (n - 1) / 2; }

/// Integer label of a labelled graph: bit triangle_index(i, j) is adj(i, j).
/// Valid for orders whose triangle fits in 64 bits (n <= 11).
struct GraphCode {
  int n = 1;
  std::uint64_t code = 0;

  static constexpr int kMaxOrder = 11;

  auto operator<=>(const GraphCode&) const = default;
};

GraphCode encode(const Graph& g);
Graph decode(GraphCode c);

// Families.

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);  // K_{1,leaves}
Graph complete_multipartite(std::span<const int> part_sizes);

/// Complete r-partite graph with n = kr + t: t parts of size k+1 come first, then r-t parts
/// of size k; vertices are numbered consecutively per part.
Graph turan(int n, int r);
std::vector<int> turan_part_sizes(int n, int r);
std::int64_t turan_edge_count(int n, int r);

/// K_r on 0..r-1 with a pendant path r, r+1, ..., n-1 hanging off vertex 0.
Graph kite(int n, int r);

Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

/// Appends k new vertices n, n+1, ..., n+k-1 forming a pendant path rooted at v.
Graph attach_path(const Graph& g, Vertex v, int k);

struct TailedCliqueSpec {
  int r = 3;  // clique order
  int k = 0;  // tail at u
  int l = 0;  // tail at v
};

/// Vertex roles inside tailed_clique / theta_kite. u = 0, v = 1, hubs w = 2..r-1.
struct TailedCliqueLayout {
  Vertex u = 0;
  Vertex v = 1;
  std::vector<Vertex> hubs;
  std::vector<Vertex> tail_u;  // u_1..u_k in path order
  std::vector<Vertex> tail_v;  // v_1..v_l in path order
};

/// K_r with a path of length k at clique vertex 0 and a path of length l at clique vertex 1.
Graph tailed_clique(const TailedCliqueSpec& spec);
TailedCliqueLayout tailed_clique_layout(const TailedCliqueSpec& spec);

/// K_r plus a path u_1..u_k (vertices r..r+k-1) whose first vertex is adjacent to clique vertices 0 and 1.
Graph theta_kite(int r, int k);

// Structure.

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);  // ordered by smallest vertex

/// Minimum vertex cut; n-1 for complete graphs and 0 when disconnected.
int vertex_connectivity(const Graph& g);

/// Exact isomorphism test by refinement-pruned backtracking. Intended for n <= 10.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace algcon
