#include "algcon/bounds.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "algcon/clique.hpp"
#include "algcon/errors.hpp"
#include "algcon/spectra.hpp"

namespace algcon {

namespace {

// Integer brackets on omega absorb rounding of the real bounds.
constexpr double kRoundingSlack = 1e-9;

}  // namespace

double clique_lower_bound(int n, double alpha) {
  if (alpha <= 0.0) throw StructuralError("clique lower bound needs alpha > 0 (connected input)");
  if (alpha > n - tol::kCompare)
    throw NotApplicable("clique lower bound is undefined for complete graphs (alpha = n); omega = n");
  return n / (n - alpha);
}

double clique_upper_bound(int n, double alpha) {
  if (alpha <= 0.0) throw StructuralError("clique upper bound needs alpha > 0 (connected input)");
  return n + 1.0 - 4.0 / (n * alpha);
}

double kite_alpha_floor(int n, int r) {
  if (r < 2 || r > n)
    throw InvalidParameter("kite alpha floor needs 2 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  return 4.0 / (static_cast<double>(n) * (n - r + 1));
}

DegreeChain degree_chain(const Graph& g) {
  if (g.is_complete()) throw NotApplicable("degree chain does not apply to complete graphs (alpha = n > n - 1)");
  if (!is_connected(g)) throw StructuralError("degree chain requires a connected graph");
  DegreeChain c;
  c.alpha = algebraic_connectivity(g);
  c.nu = vertex_connectivity(g);
  c.delta = g.min_degree();
  c.avg_degree = 2.0 * g.edge_count() / g.order();
  c.holds = c.alpha <= c.nu + tol::kCompare && c.nu <= c.delta && c.delta <= c.avg_degree;
  return c;
}

BoundsReport sandwich_report(const Graph& g) {
  BoundsReport rep;
  rep.n = g.order();
  rep.omega = clique_number(g);
  rep.delta = g.min_degree();
  rep.avg2e_n = 2.0 * g.edge_count() / rep.n;
  rep.nu = vertex_connectivity(g);
  rep.alpha = rep.n >= 2 ? algebraic_connectivity(g) : 0.0;
  rep.flags.connected = is_connected(g);

  if (g.is_complete()) {
    rep.flags.complete = true;
    rep.flags.bounds_hold = rep.omega == rep.n;
    return rep;
  }
  rep.flags.chain_holds = rep.alpha <= rep.nu + tol::kCompare && rep.nu <= rep.delta && rep.delta <= rep.avg2e_n;
  if (!rep.flags.connected) return rep;

  rep.lower = clique_lower_bound(rep.n, rep.alpha);
  rep.upper = clique_upper_bound(rep.n, rep.alpha);
  rep.lower_ceil = static_cast<int>(std::ceil(*rep.lower - kRoundingSlack));
  rep.upper_floor = static_cast<int>(std::floor(*rep.upper + kRoundingSlack));
  rep.flags.lower_equality = std::abs(rep.omega - *rep.lower) <= tol::kEquality;
  rep.flags.upper_equality = std::abs(rep.omega - *rep.upper) <= tol::kEquality;
  rep.flags.bounds_hold = *rep.lower_ceil <= rep.omega && rep.omega <= *rep.upper_floor;
  return rep;
}

std::string to_json(const BoundsReport& r) {
  nlohmann::ordered_json j;
  auto opt = [](const auto& o) { return o ? nlohmann::ordered_json(*o) : nlohmann::ordered_json(nullptr); };
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["omega"] = r.omega;
  j["lower"] = opt(r.lower);
  j["upper"] = opt(r.upper);
  j["lower_ceil"] = opt(r.lower_ceil);
  j["upper_floor"] = opt(r.upper_floor);
  j["nu"] = r.nu;
  j["delta"] = r.delta;
  j["avg2e_n"] = r.avg2e_n;
  j["flags"] = {{"complete", r.flags.complete},           {"connected", r.flags.connected},
                {"lower_equality", r.flags.lower_equality}, {"upper_equality", r.flags.upper_equality},
                {"bounds_hold", r.flags.bounds_hold},       {"chain_holds", r.flags.chain_holds}};
  return j.dump();
}

std::string bounds_csv_header() {
  return "n,alpha,omega,lower,upper,lower_ceil,upper_floor,nu,delta,avg2e_n,complete,connected,lower_equality,"
         "upper_equality,bounds_hold,chain_holds";
}

std::string to_csv_row(const BoundsReport& r) {
  std::ostringstream os;
  os.precision(17);
  auto opt = [&](const auto& o) {
    if (o) os << *o;
    os << ',';
  };
  os << r.n << ',' << r.alpha << ',' << r.omega << ',';
  opt(r.lower);
  opt(r.upper);
  opt(r.lower_ceil);
  opt(r.upper_floor);
  os << r.nu << ',' << r.delta << ',' << r.avg2e_n << ',' << r.flags.complete << ',' << r.flags.connected << ','
     << r.flags.lower_equality << ',' << r.flags.upper_equality << ',' << r.flags.bounds_hold << ','
     << r.flags.chain_holds;
  return os.str();
}

}  // namespace algcon
