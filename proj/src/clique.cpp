#include "algcon/clique.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "algcon/errors.hpp"

namespace algcon {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::uint64_t remaining = g.all_vertices();
  std::vector<Vertex> order;
  order.reserve(n);
  while (remaining) {
    Vertex pick = -1;
    for (auto r = remaining; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (pick == -1 || deg[v] < deg[pick]) pick = v;
    }
    order.push_back(pick);
    remaining &= ~bit(pick);
    for (auto nb = g.neighbours(pick) & remaining; nb; nb &= nb - 1) --deg[std::countr_zero(nb)];
  }
  return order;
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& g) : g_(g) {}

  void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (!p) {
      if (!x && std::popcount(r) > std::popcount(best_)) best_ = r;
      return;
    }
    if (std::popcount(r) + std::popcount(p) <= std::popcount(best_)) return;
    Vertex pivot = -1;
    int pivot_hits = -1;
    for (auto c = p | x; c; c &= c - 1) {
      const int u = std::countr_zero(c);
      const int hits = std::popcount(p & g_.neighbours(u));
      if (hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
      }
    }
    for (auto cand = p & ~g_.neighbours(pivot); cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      run(r | bit(v), p & g_.neighbours(v), x & g_.neighbours(v));
      p &= ~bit(v);
      x |= bit(v);
    }
  }

  std::uint64_t best() const { return best_; }

 private:
  const Graph& g_;
  std::uint64_t best_ = 0;
};

bool has_clique_of_size(const Graph& g, std::uint64_t candidates, int needed) {
  if (needed <= 0) return true;
  if (std::popcount(candidates) < needed) return false;
  for (auto c = candidates; c; c &= c - 1) {
    const int v = std::countr_zero(c);
    const std::uint64_t later = c & ~bit(v) & g.neighbours(v);
    if (has_clique_of_size(g, later, needed - 1)) return true;
  }
  return false;
}

}  // namespace

CliqueWitness max_clique(const Graph& g) {
  BronKerbosch bk(g);
  std::uint64_t earlier = 0;
  std::uint64_t later = g.all_vertices();
  for (Vertex v : degeneracy_order(g)) {
    later &= ~bit(v);
    bk.run(bit(v), later & g.neighbours(v), earlier & g.neighbours(v));
    earlier |= bit(v);
  }
  CliqueWitness w;
  for (auto b = bk.best(); b; b &= b - 1) w.vertices.push_back(std::countr_zero(b));
  w.omega = static_cast<int>(w.vertices.size());
  return w;
}

int clique_number(const Graph& g) { return max_clique(g).omega; }

bool is_kr_free(const Graph& g, int r) {
  if (r < 1) throw InvalidParameter("is_kr_free needs r >= 1, got " + std::to_string(r));
  return !has_clique_of_size(g, g.all_vertices(), r);
}

bool contains_complete_multipartite(const Graph& g, std::span<const int> parts) {
  int total = 0;
  for (int p : parts) {
    if (p < 1) throw InvalidParameter("part sizes must be positive");
    total += p;
  }
  if (total > kMultipartiteGuard)
    throw GuardExceeded("multipartite containment is limited to " + std::to_string(kMultipartiteGuard) +
                        " vertices, requested " + std::to_string(total));
  if (total > g.order()) return false;

  std::vector<int> sizes(parts.begin(), parts.end());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  std::vector<int> slot_part;
  for (std::size_t p = 0; p < sizes.size(); ++p) slot_part.insert(slot_part.end(), sizes[p], static_cast<int>(p));
  const int slots = total;
  std::vector<Vertex> chosen(slots, -1);

  std::uint64_t eligible_by_part_degree[kMultipartiteGuard] = {};
  for (std::size_t p = 0; p < sizes.size(); ++p)
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) >= total - sizes[p]) eligible_by_part_degree[p] |= bit(v);

  std::function<bool(int, std::uint64_t)> place = [&](int slot, std::uint64_t used) -> bool {
    if (slot == slots) return true;
    const int part = slot_part[slot];
    std::uint64_t allowed = eligible_by_part_degree[part] & ~used;
    for (int s = 0; s < slot; ++s)
      if (slot_part[s] != part) allowed &= g.neighbours(chosen[s]);
    // Within a part, take vertices in increasing order; equal-size parts are ordered by first vertex.
    int floor_vertex = -1;
    if (slot > 0 && slot_part[slot - 1] == part) {
      floor_vertex = chosen[slot - 1];
    } else if (part > 0 && sizes[part] == sizes[part - 1]) {
      floor_vertex = chosen[slot - sizes[part - 1]];
    }
    if (floor_vertex >= 0) allowed &= ~((bit(floor_vertex) << 1) - 1);
    for (auto a = allowed; a; a &= a - 1) {
      chosen[slot] = std::countr_zero(a);
      if (place(slot + 1, used | bit(chosen[slot]))) return true;
    }
    return false;
  };
  return place(0, 0);
}

}  // namespace algcon
