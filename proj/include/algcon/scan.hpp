#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algcon/graph.hpp"

namespace algcon {

inline constexpr int kDefaultGuard = 7;
inline constexpr int kMaxGuard = 9;

struct ScanOptions {
  int guard = kDefaultGuard;  // largest order enumerated without complaint
  int jobs = 1;               // contiguous code ranges scanned concurrently
};

using GraphFilter = std::function<bool(const Graph&)>;

/// Every labelled graph of order n in GraphCode order, optionally filtered. Lazy.
class GraphEnumeration {
 public:
  GraphEnumeration(int n, GraphFilter filter = {}, int guard = kDefaultGuard);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = const Graph*;
    using reference = const Graph&;

    iterator() = default;
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator& other) const { return code_ == other.code_; }

   private:
    friend class GraphEnumeration;
    iterator(const GraphEnumeration* owner, std::uint64_t code);
    void settle();

    const GraphEnumeration* owner_ = nullptr;
    std::uint64_t code_ = 0;
    std::optional<Graph> current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, limit_); }
  std::uint64_t code_space() const noexcept { return limit_; }

 private:
  int n_;
  GraphFilter filter_;
  std::uint64_t limit_;
};

GraphEnumeration enumerate_graphs(int n, GraphFilter filter = {}, int guard = kDefaultGuard);

struct Achiever {
  GraphCode code;
  std::string graph6;
  double alpha = 0.0;
};

struct ExtremalCertificate {
  int n = 0;
  int r = 0;
  std::string mode;      // "max" or "min"
  std::string source;    // "enumeration" or "corpus:<provenance>"
  std::string rule;      // characterization applied: turan-unique, join-decomposition, kite-unique
  double bound = 0.0;
  double achieved = 0.0;
  std::vector<Achiever> achievers;  // one per isomorphism class, first in scan order
  bool characterization_ok = false;
  std::vector<std::string> counterexamples;            // graph6 of graphs beating the bound
  std::vector<std::string> characterization_failures;  // graph6 of graphs contradicting the equality clause
  std::uint64_t graphs_scanned = 0;   // graphs satisfying the hypothesis
  std::uint64_t graphs_examined = 0;  // graphs looked at
  std::uint64_t graphs_prefiltered = 0;  // scanned but settled by min degree < bound, no eigensolve

  bool passed() const;
};

std::string to_json(const ExtremalCertificate& cert);

/// The factors of g as a join: complements of the connected components of complement(g).
struct JoinDecomposition {
  std::vector<Graph> factors;
  std::vector<std::vector<Vertex>> vertex_sets;  // vertices of g spanned by each factor
};

JoinDecomposition join_decomposition(const Graph& g);

struct JoinCharacterization {
  bool holds = false;
  JoinDecomposition decomposition;
  std::vector<int> edgeless_factors;  // indices into decomposition.factors of the selected H_i
  std::vector<Vertex> remainder;      // vertices of H
  double remainder_alpha = 0.0;
};

/// Tests whether g = H_1 v ... v H_t v H with H_i edgeless of order k+1, H free of K_{r+1-t} and
/// alpha(H) >= n - (k+1)(t+1), where n = kr + t. Throws NotApplicable unless 0 < t < r-1.
JoinCharacterization check_join_characterization(const Graph& g, int n, int r);

/// Upper extremal problem over non-complete K_{r+1}-free graphs of order n, 2 <= r < n.
ExtremalCertificate verify_max_theorem(int n, int r, const ScanOptions& options = {});
ExtremalCertificate verify_max_theorem(std::span<const Graph> corpus, int n, int r, const std::string& provenance);

/// Lower extremal problem over connected graphs of order n with clique number exactly r, 2 <= r <= n.
ExtremalCertificate verify_min_theorem(int n, int r, const ScanOptions& options = {});
ExtremalCertificate verify_min_theorem(std::span<const Graph> corpus, int n, int r, const std::string& provenance);

struct TrendRow {
  int n = 0;
  int alpha = 0;  // n - ceil(n / r)
  double ratio = 0.0;
  bool exact = false;   // ratio == 1 - 1/r exactly (in integers)
  bool within = false;  // 0 <= (1 - 1/r) - ratio < 1/n (in integers)
};

struct TrendTable {
  int r = 0;
  std::vector<TrendRow> rows;
  bool ok = false;  // every row within, and every row with r | n exact
};

TrendTable erdos_stone_trend(int r, int n_max);

struct SupersaturationReport {
  int n = 0;
  int r = 0;
  int k = 0;
  double epsilon = 0.0;
  double threshold = 0.0;           // n - ceil(n/r) + epsilon n
  std::uint64_t graphs_examined = 0;
  std::uint64_t prefiltered = 0;    // rejected by alpha <= min degree before any eigensolve
  std::uint64_t qualifying = 0;
  std::vector<std::string> violations;  // graph6 of qualifying graphs without T_{kr,r}
  bool vacuous = false;
  bool ok = false;
};

SupersaturationReport verify_supersaturation(int n, int r, int k, double epsilon, const ScanOptions& options = {});
SupersaturationReport verify_supersaturation(std::span<const Graph> corpus, int n, int r, int k, double epsilon);

struct SandwichScanReport {
  int n = 0;
  std::uint64_t graphs_scanned = 0;  // connected, non-complete
  std::vector<std::string> violations;
  std::vector<std::string> lower_equality_classes;  // graph6, one per isomorphism class
  bool lower_equality_ok = false;  // equality classes are exactly T_{n,r} with r | n, 2 <= r < n
  bool ok = false;
};

SandwichScanReport verify_sandwich(int n, const ScanOptions& options = {});

std::string to_json(const TrendTable& table);
std::string to_json(const SupersaturationReport& report);
std::string to_json(const SandwichScanReport& report);

}  // namespace algcon
