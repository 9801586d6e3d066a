#include "algcon/graph6.hpp"

#include <string>

#include "algcon/errors.hpp"

namespace algcon {

namespace {

constexpr int kBias = 63;

std::string_view trim_record(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  return line;
}

int sextet(std::string_view s, std::size_t pos) {
  const auto byte = static_cast<unsigned char>(s[pos]);
  if (byte < 63 || byte > 126)
    throw ParseError("byte " + std::to_string(byte) + " at offset " + std::to_string(pos) + " outside [63, 126]",
                     pos);
  return byte - kBias;
}

}  // namespace

std::string graph6_order_prefix(int n) {
  if (n < 0 || n > kGraph6MaxOrder) throw InvalidParameter("graph6 order out of range: " + std::to_string(n));
  if (n <= 62) return std::string(1, static_cast<char>(n + kBias));
  std::string out(1, static_cast<char>(126));
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  return out;
}

Graph parse_graph6(std::string_view line, Graph6Options options) {
  const std::string_view rec = trim_record(line);
  if (rec.empty()) throw ParseError("empty graph6 record", 0);

  std::size_t pos = 0;
  int n = sextet(rec, pos++);
  if (n == 63) {
    if (rec.size() < 4) throw ParseError("truncated extended order prefix", rec.size());
    if (rec[1] == 126) throw ParseError("8-byte order prefix (n > 258047) is not supported", 1);
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(rec, pos++);
    if (n <= 62) throw ParseError("non-canonical extended order prefix for n=" + std::to_string(n), 0);
  }
  if (n < 1 || n > Graph::kMaxOrder)
    throw ParseError("graph order " + std::to_string(n) + " outside supported range [1, 64]", 0);

  const std::size_t bits = static_cast<std::size_t>(triangle_bits(n));
  const std::size_t body = (bits + 5) / 6;
  if (rec.size() - pos < body)
    throw ParseError("truncated bit stream: expected " + std::to_string(body) + " data bytes, got " +
                         std::to_string(rec.size() - pos),
                     rec.size());
  if (rec.size() - pos > body) throw ParseError("trailing bytes after bit stream", pos + body);

  Graph g(n);
  std::size_t idx = 0;
  int i = 0, j = 1;
  for (std::size_t b = 0; b < body; ++b) {
    const std::size_t at = pos + b;
    const int value = sextet(rec, at);
    for (int bit = 5; bit >= 0; --bit, ++idx) {
      const bool set = (value >> bit) & 1;
      if (idx >= bits) {
        if (set && options.strict) throw ParseError("nonzero padding bit", at);
        continue;
      }
      if (set) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out = graph6_order_prefix(n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::optional<Graph> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_ == 1 && line.starts_with(kGraph6Header)) line.erase(0, kGraph6Header.size());
    if (line.empty()) continue;
    try {
      return parse_graph6(line, options_);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), e.offset(), line_);
    } catch (const InvalidParameter& e) {
      throw ParseError(e.what(), 0, line_);
    }
  }
  return std::nullopt;
}

std::vector<Graph> read_corpus(std::istream& in, Graph6Options options) {
  Graph6Reader reader(in, options);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace algcon
