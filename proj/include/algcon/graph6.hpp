#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algcon/graph.hpp"

namespace algcon {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr int kGraph6MaxOrder = 258047;

struct Graph6Options {
  bool strict = true;  // reject nonzero padding bits
};

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing CR/LF are ignored.
Graph parse_graph6(std::string_view line, Graph6Options options = {});

/// Canonical graph6 text of g (no header, no newline).
std::string write_graph6(const Graph& g);

/// The order prefix alone: one byte for n <= 62, otherwise 126 followed by three sextets.
std::string graph6_order_prefix(int n);

/// Lazily decodes a graph6 stream, one graph per line; an optional header may open line 1.
/// Blank lines are skipped. Parse failures are rethrown with their 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in, Graph6Options options = {}) : in_(in), options_(options) {}

  std::optional<Graph> next();
  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  Graph6Options options_;
  std::size_t line_ = 0;
};

std::vector<Graph> read_corpus(std::istream& in, Graph6Options options = {});

}  // namespace algcon
