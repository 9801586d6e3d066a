#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algcon/graph.hpp"

namespace algcon {

/// A pendant path root - vertices[0] - vertices[1] - ... whose last vertex is a leaf and
/// whose interior vertices touch nothing but their path neighbours.
struct TailSpec {
  Vertex root = 0;
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
};

/// Throws InvalidParameter unless `tail` is a non-empty pendant path of g.
void validate_tail(const Graph& g, const TailSpec& tail);

/// Grafting at the tail ends. With p = u u_1..u_k and q = v v_1..v_l, returns
/// (G - u u_1 + u_1 v_l, G - v v_1 + u_k v_1).
std::pair<Graph, Graph> graft_endpoints(const Graph& g, const TailSpec& p, const TailSpec& q);

/// Both tails rooted at u, |p| = k >= |q| = l >= 1: moves the last vertex of q to the end of p,
/// G - v_{l-1} v_l + u_k v_l (with v_0 = u).
Graph slide_tail(const Graph& g, const TailSpec& p, const TailSpec& q);

/// Moves the clique attachment of a tailed clique one step along a tail. Returns
/// (G - {u w_i} + {v_1 w_i}, G - {v w_i} + {u_1 w_i}), isomorphic to the (k+1, l-1) and
/// (k-1, l+1) tailed cliques. Requires k, l >= 1.
std::pair<Graph, Graph> switch_clique_attachment(const TailedCliqueSpec& spec);

struct GraftCheck {
  double alpha_base = 0.0;
  double alpha_first = 0.0;   // G'
  double alpha_second = 0.0;  // G''
  double tail_end_product = 0.0;  // X(u_k) X(v_l)
  int multiplicity = 1;
  bool hypothesis_holds = false;  // simple alpha and X(u_k) X(v_l) >= 0
  bool conclusion_holds = false;  // alpha_base >= min(first, second) - tol::kCompare
  bool equality = false;          // alpha_base == min within tol::kEquality
};

/// Evaluates the grafting inequality. The conclusion is only meaningful when hypothesis_holds.
GraftCheck check_graft(const Graph& g, const TailSpec& p, const TailSpec& q);

struct SlideCheck {
  double alpha_base = 0.0;
  double alpha_slid = 0.0;
  bool holds = false;             // alpha_base >= alpha_slid - tol::kCompare
  bool strict = false;            // alpha_base > alpha_slid + tol::kStrict
  bool strictness_predicted = false;  // X(u_1) != 0 or X(v_1) != 0 on a simple Fiedler vector
  int multiplicity = 1;
};

SlideCheck check_slide(const Graph& g, const TailSpec& p, const TailSpec& q);

struct SwitchCheck {
  double alpha_base = 0.0;
  double alpha_longer_u = 0.0;  // (k+1, l-1)
  double alpha_longer_v = 0.0;  // (k-1, l+1)
  bool holds = false;           // alpha_base > min + tol::kStrict
};

SwitchCheck check_switch(const TailedCliqueSpec& spec);

struct FiedlerSignReport {
  TailedCliqueSpec spec;
  double alpha = 0.0;
  int multiplicity = 1;
  bool skipped = false;          // alpha not simple; nothing asserted
  double hub_spread = 0.0;       // max - min of X over w_1..w_{r-2}
  double tail_end_product = 0.0;  // X(u_k) X(v_l)
  bool tail_monotone = false;    // X(w_1) < X(root) < X(t_1) < ... along the positive tail, with X(w_1) >= 0
  bool ok = false;
  std::vector<double> fiedler;   // normalised so X(w_1) >= 0
};

FiedlerSignReport fiedler_sign_report(const TailedCliqueSpec& spec);

struct ThetaKiteComparison {
  double alpha_theta = 0.0;
  double alpha_kite = 0.0;
  bool strict = false;
};

ThetaKiteComparison theta_vs_kite(int r, int k);

struct ChainEntry {
  int k = 0;
  int l = 0;
  double alpha = 0.0;
};

struct KiteChain {
  int r = 0;
  int n = 0;
  std::vector<ChainEntry> entries;  // k ascending, k >= l >= 1, k + l = n - r
  double kite_alpha = 0.0;
  bool strictly_decreasing = false;
  bool above_kite = false;
};

KiteChain kite_minimality_chain(int r, int n);

struct SweepRow {
  int r = 0;
  int k = 0;
  int l = 0;
  double alpha = 0.0;
};

/// alpha of every tailed clique with r in `clique_orders`, k >= l >= 0 and 1 <= k + l <= max_tail_total.
std::vector<SweepRow> tailed_clique_sweep(std::span<const int> clique_orders, int max_tail_total);
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace algcon
