// algcon: algebraic connectivity and clique number toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "algcon/bounds.hpp"
#include "algcon/clique.hpp"
#include "algcon/errors.hpp"
#include "algcon/graph.hpp"
#include "algcon/graph6.hpp"
#include "algcon/scan.hpp"
#include "algcon/spectra.hpp"
#include "algcon/transforms.hpp"

namespace {

using namespace algcon;
using ordered_json = nlohmann::ordered_json;

enum class Format { json, csv, table };

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Config {
  double tolerance = 1e-8;
  int guard = kDefaultGuard;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  Format format = Format::json;
  bool strict_g6 = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Positional graph6 text, "-" for stdin, "@path" for a file. No argument means stdin.
class GraphSource {
 public:
  GraphSource(const std::string& spec, const Config& cfg) : options_{cfg.strict_g6} {
    if (spec.empty() || spec == "-") {
      reader_ = std::make_unique<Graph6Reader>(std::cin, options_);
    } else if (spec.front() == '@') {
      file_.open(spec.substr(1));
      if (!file_) throw UsageError("cannot open " + spec.substr(1));
      reader_ = std::make_unique<Graph6Reader>(file_, options_);
    } else {
      text_.str(spec);
      reader_ = std::make_unique<Graph6Reader>(text_, options_);
    }
  }

  std::optional<Graph> next() { return reader_->next(); }

  std::vector<Graph> all() {
    std::vector<Graph> out;
    while (auto g = next()) out.push_back(std::move(*g));
    return out;
  }

 private:
  Graph6Options options_;
  std::ifstream file_;
  std::istringstream text_;
  std::unique_ptr<Graph6Reader> reader_;
};

std::string join_numbers(const std::vector<double>& xs, char sep) {
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? std::string(1, sep) : "") << xs[i];
  return os.str();
}

std::string join_ints(const std::vector<Vertex>& xs, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? std::string(1, sep) : "") << xs[i];
  return os.str();
}

void counterexample(const std::string& g6) { std::cerr << "counterexample: " << g6 << '\n'; }

// ---- construct

Graph build_family(const std::string& family, const std::vector<std::string>& args, const Config& cfg) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw UsageError(family + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(args.size()));
  };
  auto num = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(args[i], &used);
      if (used != args[i].size()) throw std::invalid_argument(args[i]);
      return v;
    } catch (const std::logic_error&) {
      throw UsageError("not an integer: " + args[i]);
    }
  };
  if (family == "complete") return need(1), complete(num(0));
  if (family == "empty") return need(1), empty_graph(num(0));
  if (family == "path") return need(1), path(num(0));
  if (family == "cycle") return need(1), cycle(num(0));
  if (family == "turan") return need(2), turan(num(0), num(1));
  if (family == "kite") return need(2), kite(num(0), num(1));
  if (family == "tailed-clique") return need(3), tailed_clique({num(0), num(1), num(2)});
  if (family == "theta-kite") return need(2), theta_kite(num(0), num(1));
  if (family == "join-of") {
    if (args.size() < 2) throw UsageError("join-of takes two or more graph6 operands");
    Graph g = GraphSource(args[0], cfg).all().at(0);
    for (std::size_t i = 1; i < args.size(); ++i) g = join(g, GraphSource(args[i], cfg).all().at(0));
    return g;
  }
  throw UsageError("unknown family: " + family);
}

// ---- spectrum

int run_spectrum(const std::string& input, const Config& cfg) {
  GraphSource src(input, cfg);
  bool header = false;
  while (auto g = src.next()) {
    const int n = g->order();
    const std::string g6 = write_graph6(*g);
    const auto spec = laplacian_spectrum(*g);
    const bool connected = n >= 2 && is_connected(*g);
    std::optional<double> alpha;
    if (n >= 2) alpha = connected ? spec.alpha() : 0.0;
    std::optional<FiedlerVector> fv;
    if (connected) fv = fiedler_vector(*g);

    if (cfg.format == Format::json) {
      ordered_json j;
      j["graph6"] = g6;
      j["n"] = n;
      j["eigenvalues"] = spec.eigenvalues;
      j["alpha"] = alpha ? ordered_json(*alpha) : ordered_json(nullptr);
      j["connected"] = n >= 2 ? ordered_json(connected) : ordered_json(nullptr);
      j["multiplicity"] = fv ? ordered_json(fv->multiplicity) : ordered_json(nullptr);
      j["fiedler"] = fv ? ordered_json(fv->values) : ordered_json(nullptr);
      std::cout << j.dump() << '\n';
    } else if (cfg.format == Format::csv) {
      if (!header) std::cout << "graph6,n,alpha,connected,multiplicity,eigenvalues\n";
      header = true;
      std::cout << g6 << ',' << n << ',' << std::setprecision(17);
      if (alpha) std::cout << *alpha;
      std::cout << ',' << (connected ? 1 : 0) << ',' << (fv ? std::to_string(fv->multiplicity) : "") << ','
                << join_numbers(spec.eigenvalues, ' ') << '\n';
    } else {
      std::cout << g6 << "  n=" << n << '\n' << "  eigenvalues: " << join_numbers(spec.eigenvalues, ' ') << '\n';
      if (alpha) std::cout << "  alpha: " << std::setprecision(12) << *alpha << (connected ? "" : "  (disconnected)") << '\n';
      if (fv) std::cout << "  fiedler (mult " << fv->multiplicity << "): " << join_numbers(fv->values, ' ') << '\n';
    }
    std::cout.flush();
  }
  return kExitPass;
}

// ---- bounds

int run_bounds(const std::string& input, const Config& cfg) {
  GraphSource src(input, cfg);
  int status = kExitPass;
  bool header = false;
  while (auto g = src.next()) {
    if (g->order() < 2) throw UsageError("bounds need at least 2 vertices");
    const auto rep = sandwich_report(*g);
    const std::string g6 = write_graph6(*g);
    bool ok = rep.flags.bounds_hold && rep.flags.chain_holds;
    if (rep.lower && rep.upper) ok = ok && *rep.lower <= rep.omega + cfg.tolerance && rep.omega <= *rep.upper + cfg.tolerance;
    if (!ok) {
      status = kExitCounterexample;
      counterexample(g6);
    }
    if (cfg.format == Format::json) {
      auto j = ordered_json::parse(to_json(rep));
      ordered_json out;
      out["graph6"] = g6;
      for (auto& [k, v] : j.items()) out[k] = v;
      std::cout << out.dump() << '\n';
    } else if (cfg.format == Format::csv) {
      if (!header) std::cout << "graph6," << bounds_csv_header() << '\n';
      header = true;
      std::cout << g6 << ',' << to_csv_row(rep) << '\n';
    } else {
      std::cout << g6 << "  n=" << rep.n << "  alpha=" << std::setprecision(10) << rep.alpha << "  omega=" << rep.omega;
      if (rep.flags.complete) std::cout << "  (complete)";
      if (!rep.flags.connected) std::cout << "  (disconnected)";
      std::cout << '\n';
      if (rep.lower && rep.upper)
        std::cout << "  " << *rep.lower << " <= omega <= " << *rep.upper << "   [" << *rep.lower_ceil << ", "
                  << *rep.upper_floor << "]" << (rep.flags.lower_equality ? "  lower equality" : "") << '\n';
      std::cout << "  nu=" << rep.nu << "  delta=" << rep.delta << "  2e/n=" << rep.avg2e_n << '\n';
    }
    std::cout.flush();
  }
  return status;
}

// ---- clique

int run_clique(const std::string& input, int free_of, const std::vector<int>& parts, const Config& cfg) {
  GraphSource src(input, cfg);
  bool header = false;
  while (auto g = src.next()) {
    const auto w = max_clique(*g);
    const std::string g6 = write_graph6(*g);
    std::optional<bool> kr_free, contains;
    if (free_of > 0) kr_free = is_kr_free(*g, free_of);
    if (!parts.empty()) contains = contains_complete_multipartite(*g, parts);
    if (cfg.format == Format::json) {
      ordered_json j;
      j["graph6"] = g6;
      j["n"] = g->order();
      j["omega"] = w.omega;
      j["clique"] = w.vertices;
      if (kr_free) j["kr_free"] = {{"r", free_of}, {"free", *kr_free}};
      if (contains) j["multipartite"] = {{"parts", parts}, {"contained", *contains}};
      std::cout << j.dump() << '\n';
    } else if (cfg.format == Format::csv) {
      if (!header) std::cout << "graph6,n,omega,clique" << (kr_free ? ",kr_free" : "") << (contains ? ",multipartite" : "") << '\n';
      header = true;
      std::cout << g6 << ',' << g->order() << ',' << w.omega << ',' << join_ints(w.vertices, ' ');
      if (kr_free) std::cout << ',' << *kr_free;
      if (contains) std::cout << ',' << *contains;
      std::cout << '\n';
    } else {
      std::cout << g6 << "  omega=" << w.omega << "  clique {" << join_ints(w.vertices, ',') << "}\n";
      if (kr_free) std::cout << "  K_" << free_of << "-free: " << (*kr_free ? "yes" : "no") << '\n';
      if (contains) std::cout << "  contains multipartite: " << (*contains ? "yes" : "no") << '\n';
    }
    std::cout.flush();
  }
  return kExitPass;
}

// ---- transform

TailSpec parse_tail(const std::string& text) {
  // root:v1,v2,...
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("tail must look like root:v1,v2,... got " + text);
  TailSpec t;
  try {
    t.root = std::stoi(text.substr(0, colon));
    std::stringstream rest(text.substr(colon + 1));
    for (std::string item; std::getline(rest, item, ',');) t.vertices.push_back(std::stoi(item));
  } catch (const std::logic_error&) {
    throw UsageError("malformed tail: " + text);
  }
  return t;
}

void emit(const ordered_json& j, const Config& cfg) {
  if (cfg.format == Format::table) {
    for (auto& [k, v] : j.items()) std::cout << std::setw(22) << std::left << k << ' ' << v.dump() << '\n';
  } else if (cfg.format == Format::csv) {
    std::string keys, vals;
    for (auto& [k, v] : j.items()) {
      if (v.is_structured()) continue;
      keys += (keys.empty() ? "" : ",") + k;
      vals += (vals.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::cout << keys << '\n' << vals << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

ordered_json spec_json(const TailedCliqueSpec& s) { return {{"r", s.r}, {"k", s.k}, {"l", s.l}}; }

int transform_switch(const TailedCliqueSpec& s, const Config& cfg) {
  const auto c = check_switch(s);
  ordered_json j{{"spec", spec_json(s)},
                 {"alpha_base", c.alpha_base},
                 {"alpha_longer_u", c.alpha_longer_u},
                 {"alpha_longer_v", c.alpha_longer_v},
                 {"holds", c.holds}};
  emit(j, cfg);
  if (!c.holds) counterexample(write_graph6(tailed_clique(s)));
  return c.holds ? kExitPass : kExitCounterexample;
}

int transform_sign(const TailedCliqueSpec& s, const Config& cfg) {
  const auto rep = fiedler_sign_report(s);
  ordered_json j{{"spec", spec_json(s)},
                 {"alpha", rep.alpha},
                 {"multiplicity", rep.multiplicity},
                 {"skipped", rep.skipped},
                 {"hub_spread", rep.hub_spread},
                 {"tail_end_product", rep.tail_end_product},
                 {"tail_monotone", rep.tail_monotone},
                 {"ok", rep.ok},
                 {"fiedler", rep.fiedler}};
  emit(j, cfg);
  if (!rep.ok) counterexample(write_graph6(tailed_clique(s)));
  return rep.ok ? kExitPass : kExitCounterexample;
}

int transform_theta(int r, int k, const Config& cfg) {
  const auto c = theta_vs_kite(r, k);
  emit({{"r", r}, {"k", k}, {"alpha_theta", c.alpha_theta}, {"alpha_kite", c.alpha_kite}, {"strict", c.strict}}, cfg);
  if (!c.strict) counterexample(write_graph6(theta_kite(r, k)));
  return c.strict ? kExitPass : kExitCounterexample;
}

int transform_chain(int r, int n, const Config& cfg) {
  const auto c = kite_minimality_chain(r, n);
  if (cfg.format == Format::csv) {
    std::cout << "r,k,l,alpha\n" << std::setprecision(17);
    for (const auto& e : c.entries) std::cout << r << ',' << e.k << ',' << e.l << ',' << e.alpha << '\n';
    std::cout << r << ',' << n - r << ",0," << c.kite_alpha << '\n';
  } else {
    ordered_json entries = ordered_json::array();
    for (const auto& e : c.entries) entries.push_back({{"k", e.k}, {"l", e.l}, {"alpha", e.alpha}});
    emit({{"r", r},
          {"n", n},
          {"entries", entries},
          {"kite_alpha", c.kite_alpha},
          {"strictly_decreasing", c.strictly_decreasing},
          {"above_kite", c.above_kite}},
         cfg);
  }
  const bool ok = c.strictly_decreasing && c.above_kite;
  if (!ok) counterexample(write_graph6(kite(n, r)));
  return ok ? kExitPass : kExitCounterexample;
}

int transform_sweep(const std::vector<int>& orders, int max_total, const Config& cfg) {
  const auto rows = tailed_clique_sweep(orders, max_total);
  if (cfg.format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) arr.push_back({{"r", row.r}, {"k", row.k}, {"l", row.l}, {"alpha", row.alpha}});
    std::cout << arr.dump(2) << '\n';
  } else {
    std::cout << sweep_csv(rows);
  }
  return kExitPass;
}

int transform_graft(const std::string& input, const std::string& p, const std::string& q, const Config& cfg) {
  GraphSource src(input, cfg);
  int status = kExitPass;
  while (auto g = src.next()) {
    const auto c = check_graft(*g, parse_tail(p), parse_tail(q));
    const bool ok = !c.hypothesis_holds || c.conclusion_holds;
    emit({{"graph6", write_graph6(*g)},
          {"alpha_base", c.alpha_base},
          {"alpha_first", c.alpha_first},
          {"alpha_second", c.alpha_second},
          {"tail_end_product", c.tail_end_product},
          {"multiplicity", c.multiplicity},
          {"hypothesis_holds", c.hypothesis_holds},
          {"conclusion_holds", c.conclusion_holds},
          {"equality", c.equality}},
         cfg);
    if (!ok) {
      status = kExitCounterexample;
      counterexample(write_graph6(*g));
    }
  }
  return status;
}

int transform_slide(const std::string& input, const std::string& p, const std::string& q, const Config& cfg) {
  GraphSource src(input, cfg);
  int status = kExitPass;
  while (auto g = src.next()) {
    const auto c = check_slide(*g, parse_tail(p), parse_tail(q));
    emit({{"graph6", write_graph6(*g)},
          {"alpha_base", c.alpha_base},
          {"alpha_slid", c.alpha_slid},
          {"multiplicity", c.multiplicity},
          {"holds", c.holds},
          {"strict", c.strict},
          {"strictness_predicted", c.strictness_predicted}},
         cfg);
    if (!c.holds) {
      status = kExitCounterexample;
      counterexample(write_graph6(*g));
    }
  }
  return status;
}

// ---- scan

int report_certificate(const ExtremalCertificate& cert, const Config& cfg) {
  if (cfg.format == Format::json) {
    std::cout << to_json(cert) << '\n';
  } else if (cfg.format == Format::csv) {
    std::cout << "mode,n,r,source,rule,bound,achieved,achievers,characterization_ok,counterexamples,graphs_scanned,"
                 "passed\n"
              << cert.mode << ',' << cert.n << ',' << cert.r << ',' << cert.source << ',' << cert.rule << ','
              << std::setprecision(17) << cert.bound << ',' << cert.achieved << ',' << cert.achievers.size() << ','
              << cert.characterization_ok << ',' << cert.counterexamples.size() << ',' << cert.graphs_scanned << ','
              << cert.passed() << '\n';
  } else {
    std::cout << cert.mode << " theorem, n=" << cert.n << " r=" << cert.r << " (" << cert.source << ")\n"
              << "  bound     " << std::setprecision(12) << cert.bound << '\n'
              << "  achieved  " << cert.achieved << '\n'
              << "  rule      " << cert.rule << (cert.characterization_ok ? "  ok" : "  FAILED") << '\n'
              << "  scanned   " << cert.graphs_scanned << " of " << cert.graphs_examined << '\n'
              << "  achievers";
    for (const auto& a : cert.achievers) std::cout << ' ' << a.graph6;
    std::cout << "\n  verdict   " << (cert.passed() ? "pass" : "FAIL") << '\n';
  }
  for (const auto& g6 : cert.counterexamples) counterexample(g6);
  for (const auto& g6 : cert.characterization_failures) counterexample(g6);
  return cert.passed() ? kExitPass : kExitCounterexample;
}

ScanOptions scan_options(const Config& cfg) { return {cfg.guard, cfg.jobs}; }

std::vector<Graph> load_corpus(const std::string& spec, const Config& cfg) { return GraphSource(spec, cfg).all(); }

int scan_trend(int r, int n_max, const Config& cfg) {
  const auto t = erdos_stone_trend(r, n_max);
  if (cfg.format == Format::json) {
    std::cout << to_json(t) << '\n';
  } else {
    std::cout << (cfg.format == Format::csv ? "n,alpha,ratio,exact,within\n" : "");
    std::cout << std::setprecision(17);
    for (const auto& row : t.rows) {
      if (cfg.format == Format::csv)
        std::cout << row.n << ',' << row.alpha << ',' << row.ratio << ',' << row.exact << ',' << row.within << '\n';
      else
        std::cout << std::setw(7) << row.n << std::setw(7) << row.alpha << "  " << std::setprecision(10) << row.ratio
                  << (row.exact ? "  exact" : "") << '\n';
    }
  }
  return t.ok ? kExitPass : kExitCounterexample;
}

int scan_super(const SupersaturationReport& rep, const Config& cfg) {
  if (cfg.format == Format::json) {
    std::cout << to_json(rep) << '\n';
  } else {
    ordered_json j = ordered_json::parse(to_json(rep));
    j.erase("violations");
    emit(j, cfg);
  }
  for (const auto& g6 : rep.violations) counterexample(g6);
  return rep.ok ? kExitPass : kExitCounterexample;
}

int scan_sandwich(int n, const Config& cfg) {
  const auto rep = verify_sandwich(n, scan_options(cfg));
  if (cfg.format == Format::json) {
    std::cout << to_json(rep) << '\n';
  } else {
    ordered_json j = ordered_json::parse(to_json(rep));
    j.erase("violations");
    emit(j, cfg);
  }
  for (const auto& g6 : rep.violations) counterexample(g6);
  return rep.ok ? kExitPass : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algcon: algebraic connectivity, clique number and extremal-graph verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "algcon 0.1.0");

  Config cfg;
  std::string format_name = "json";
  app.add_option("--tolerance", cfg.tolerance, "Slack for pass/fail verdicts on reported reals")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--guard", cfg.guard, "Largest order enumerated by scan")->check(CLI::Range(1, kMaxGuard))->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Concurrent scan workers")->check(CLI::Range(1, 1024))->capture_default_str();
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str()
      ->each([&](const std::string& f) { cfg.format = f == "csv" ? Format::csv : f == "table" ? Format::table : Format::json; });
  app.add_flag("--strict-g6,!--lenient-g6", cfg.strict_g6, "Reject graph6 records with nonzero padding bits");

  int code = kExitPass;

  // construct
  auto* construct = app.add_subcommand("construct", "Print the graph6 code of a named graph");
  std::string family;
  std::vector<std::string> family_args;
  construct->add_option("family", family, "complete|empty|path|cycle|turan|kite|tailed-clique|theta-kite|join-of")->required();
  construct->add_option("params", family_args, "Integer parameters, or graph6 operands for join-of");
  construct->callback([&] { std::cout << write_graph6(build_family(family, family_args, cfg)) << '\n'; });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum, alpha and Fiedler vector");
  std::string input;
  spectrum->add_option("input", input, "graph6 text, - for stdin, @file");
  spectrum->callback([&] { code = run_spectrum(input, cfg); });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Spectral clique bounds and degree chain");
  bounds->add_option("input", input, "graph6 text, - for stdin, @file");
  bounds->callback([&] { code = run_bounds(input, cfg); });

  // clique
  auto* clique = app.add_subcommand("clique", "Maximum clique and containment queries");
  int free_of = 0;
  std::vector<int> parts;
  clique->add_option("input", input, "graph6 text, - for stdin, @file");
  clique->add_option("--free", free_of, "Also test for K_r-freeness")->check(CLI::PositiveNumber);
  clique->add_option("--contains", parts, "Part sizes of a complete multipartite subgraph to look for")->allow_extra_args(false)->delimiter(',');
  clique->callback([&] { code = run_clique(input, free_of, parts, cfg); });

  // transform
  auto* transform = app.add_subcommand("transform", "Pendant-path rewrites and tailed-clique checks");
  transform->require_subcommand(1);
  TailedCliqueSpec tspec;
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("r", tspec.r)->required();
    sub->add_option("k", tspec.k)->required();
    sub->add_option("l", tspec.l)->required();
  };
  auto* t_switch = transform->add_subcommand("switch", "Switch the clique attachment of tailed_clique(r,k,l)");
  add_spec(t_switch);
  t_switch->callback([&] { code = transform_switch(tspec, cfg); });
  auto* t_sign = transform->add_subcommand("sign", "Fiedler sign structure of tailed_clique(r,k,l)");
  add_spec(t_sign);
  t_sign->callback([&] { code = transform_sign(tspec, cfg); });

  int tr = 0, tk = 0, tn = 0;
  auto* t_theta = transform->add_subcommand("theta", "theta_kite(r,k) against kite(r+k,r)");
  t_theta->add_option("r", tr)->required();
  t_theta->add_option("k", tk)->required();
  t_theta->callback([&] { code = transform_theta(tr, tk, cfg); });
  auto* t_chain = transform->add_subcommand("chain", "Tailed cliques of order n down to the kite");
  t_chain->add_option("r", tr)->required();
  t_chain->add_option("n", tn)->required();
  t_chain->callback([&] { code = transform_chain(tr, tn, cfg); });

  std::vector<int> orders{3, 4, 5};
  int max_total = 10;
  auto* t_sweep = transform->add_subcommand("sweep", "alpha over a grid of tailed cliques");
  t_sweep->add_option("--orders", orders, "Clique orders")->allow_extra_args(false)->delimiter(',')->capture_default_str();
  t_sweep->add_option("--max-total", max_total, "Largest k + l")->check(CLI::PositiveNumber)->capture_default_str();
  t_sweep->callback([&] { code = transform_sweep(orders, max_total, cfg); });

  std::string tail_p, tail_q;
  auto* t_graft = transform->add_subcommand("graft", "Grafting inequality on a graph with two pendant paths");
  t_graft->add_option("input", input, "graph6 text, - for stdin, @file");
  t_graft->add_option("--p", tail_p, "First tail as root:v1,v2,...")->required();
  t_graft->add_option("--q", tail_q, "Second tail as root:v1,v2,...")->required();
  t_graft->callback([&] { code = transform_graft(input, tail_p, tail_q, cfg); });
  auto* t_slide = transform->add_subcommand("slide", "Sliding inequality on two tails at one root");
  t_slide->add_option("input", input, "graph6 text, - for stdin, @file");
  t_slide->add_option("--p", tail_p, "Longer tail as root:v1,v2,...")->required();
  t_slide->add_option("--q", tail_q, "Shorter tail as root:v1,v2,...")->required();
  t_slide->callback([&] { code = transform_slide(input, tail_p, tail_q, cfg); });

  // scan
  auto* scan = app.add_subcommand("scan", "Exhaustive or corpus verification of the extremal results");
  scan->require_subcommand(1);
  int sn = 0, sr = 0, sk = 1;
  double eps = 0.05;
  std::string corpus;
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--corpus", corpus, "graph6 corpus (- for stdin, @file or path) instead of enumeration");
  };
  auto corpus_graphs = [&] {
    const std::string spec = corpus == "-" || corpus.front() == '@' ? corpus : "@" + corpus;
    return load_corpus(spec, cfg);
  };
  auto provenance = [&] { return corpus == "-" ? std::string("stdin") : corpus; };

  auto* s_max = scan->add_subcommand("max", "Largest alpha over non-complete K_{r+1}-free graphs");
  s_max->add_option("n", sn)->required();
  s_max->add_option("r", sr)->required();
  add_corpus(s_max);
  s_max->callback([&] {
    code = report_certificate(corpus.empty() ? verify_max_theorem(sn, sr, scan_options(cfg))
                                             : verify_max_theorem(corpus_graphs(), sn, sr, provenance()),
                              cfg);
  });
  auto* s_min = scan->add_subcommand("min", "Smallest alpha over connected graphs with clique number r");
  s_min->add_option("n", sn)->required();
  s_min->add_option("r", sr)->required();
  add_corpus(s_min);
  s_min->callback([&] {
    code = report_certificate(corpus.empty() ? verify_min_theorem(sn, sr, scan_options(cfg))
                                             : verify_min_theorem(corpus_graphs(), sn, sr, provenance()),
                              cfg);
  });
  auto* s_trend = scan->add_subcommand("trend", "alpha(T_{n,r})/n against 1 - 1/r");
  s_trend->add_option("r", sr)->required();
  s_trend->add_option("n_max", sn)->required();
  s_trend->callback([&] { code = scan_trend(sr, sn, cfg); });
  auto* s_super = scan->add_subcommand("super", "Large alpha forces a T_{kr,r} subgraph");
  s_super->add_option("n", sn)->required();
  s_super->add_option("r", sr)->required();
  s_super->add_option("k", sk)->required();
  s_super->add_option("epsilon", eps)->required()->check(CLI::PositiveNumber);
  add_corpus(s_super);
  s_super->callback([&] {
    code = scan_super(corpus.empty() ? verify_supersaturation(sn, sr, sk, eps, scan_options(cfg))
                                     : verify_supersaturation(corpus_graphs(), sn, sr, sk, eps),
                      cfg);
  });
  auto* s_sandwich = scan->add_subcommand("sandwich", "Spectral clique bounds over all connected graphs of order n");
  s_sandwich->add_option("n", sn)->required();
  s_sandwich->callback([&] { code = scan_sandwich(sn, cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "algcon: graph6: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "algcon: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "algcon: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range&) {
    std::cerr << "algcon: missing graph6 operand\n";
    return kExitUsage;
  }
  return code;
}
