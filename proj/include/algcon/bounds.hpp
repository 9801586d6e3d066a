#pragma once

#include <optional>
#include <string>

#include "algcon/graph.hpp"

namespace algcon {

/// n / (n - alpha). Requires 0 < alpha < n.
double clique_lower_bound(int n, double alpha);

/// n + 1 - 4 / (n alpha). Requires alpha > 0.
double clique_upper_bound(int n, double alpha);

/// 4 / (n (n - r + 1)), a floor on alpha(kite(n, r)).
double kite_alpha_floor(int n, int r);

struct DegreeChain {
  double alpha = 0.0;
  int nu = 0;
  int delta = 0;
  double avg_degree = 0.0;  // 2e / n
  bool holds = false;       // alpha <= nu <= delta <= 2e/n, alpha with tol::kCompare slack
};

/// Throws NotApplicable for complete graphs and StructuralError for disconnected ones.
DegreeChain degree_chain(const Graph& g);

struct BoundsFlags {
  bool complete = false;        // bounds inapplicable, omega = n reported directly
  bool connected = true;
  bool lower_equality = false;  // omega == lower within tol::kEquality
  bool upper_equality = false;
  bool bounds_hold = true;
  bool chain_holds = true;
};

struct BoundsReport {
  int n = 0;
  double alpha = 0.0;
  int omega = 0;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<int> lower_ceil;
  std::optional<int> upper_floor;
  int nu = 0;
  int delta = 0;
  double avg2e_n = 0.0;
  BoundsFlags flags;
};

BoundsReport sandwich_report(const Graph& g);

std::string to_json(const BoundsReport& report);
std::string bounds_csv_header();
std::string to_csv_row(const BoundsReport& report);

}  // namespace algcon
