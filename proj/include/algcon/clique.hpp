#pragma once

#include <span>
#include <vector>

#include "algcon/graph.hpp"

namespace algcon {

struct CliqueWitness {
  int omega = 0;
  std::vector<Vertex> vertices;  // ascending
};

/// Exact maximum clique by Bron-Kerbosch with pivoting, outer loop in degeneracy order.
CliqueWitness max_clique(const Graph& g);

/// Clique number alone.
int clique_number(const Graph& g);

/// True iff g has no clique on r vertices. Stops at the first r-clique found.
bool is_kr_free(const Graph& g, int r);

inline constexpr int kMultipartiteGuard = 8;

/// True iff g contains (not necessarily induced) a complete multipartite subgraph with the
/// given part sizes: vertices in different parts must be adjacent, within a part anything goes.
/// Throws GuardExceeded when the parts total more than kMultipartiteGuard vertices.
bool contains_complete_multipartite(const Graph& g, std::span<const int> parts);

}  // namespace algcon
