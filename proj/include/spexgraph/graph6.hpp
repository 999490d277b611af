#pragma once

// graph6 codec. Layout: N(n) followed by the upper triangle in column-major
// order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, big-endian,
// each byte offset by 63, zero-padded to a byte boundary.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "spexgraph/errors.hpp"
#include "spexgraph/graph.hpp"

namespace spexgraph {

inline constexpr int graph6_max_order = 258047;

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > graph6_max_order) throw ParameterError("graph6: order above 258047 is not supported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

// Throws ParseError carrying the offending byte offset.
inline Graph graph6_decode(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("graph6: empty line", 0);
  auto byte_at = [&](std::size_t pos) -> int {
    if (pos >= line.size()) throw ParseError("graph6: truncated size field", pos);
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", pos);
    return c - 63;
  };
  std::size_t pos = 0;
  int n = byte_at(pos++);
  if (n == 63) {
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
      throw ParseError("graph6: 8-byte size form is not supported", pos);
    }
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos++);
    if (n < 63) throw ParseError("graph6: long size form used for order " + std::to_string(n), 1);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (line.size() < pos + payload) {
    throw ParseError("graph6: truncated payload (expected " + std::to_string(payload) + " bytes)", line.size());
  }
  if (line.size() > pos + payload) throw ParseError("graph6: trailing bytes after payload", pos + payload);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = byte_at(pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = byte_at(pos + payload - 1);
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", pos + payload - 1);
    }
  }
  return Graph(n, edges);
}

// Decodes every non-blank line; errors name the 1-based line number.
inline std::vector<Graph> graph6_read_all(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.reason(), e.offset());
    }
  }
  return out;
}

}  // namespace spexgraph
