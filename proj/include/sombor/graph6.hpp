#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace sombor {

// graph6 wire format: printable characters '?' (63) through '~' (126), each
// carrying one 6-bit value (char - 63). A graph is the vertex count followed by
// the upper triangle of the adjacency matrix in column order
//   x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ...
// packed most-significant-bit first and zero-padded to a 6-bit boundary.
// Vertex counts 0..62 are one character; 63..258047 are '~' plus three
// characters holding an 18-bit big-endian value. Input may carry the optional
// ">>graph6<<" header; output never does.

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

constexpr long long kGraph6MaxVertices = 258047;

inline Graph parse_graph6(std::string_view s) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (s.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  auto sixbits = [&s](std::size_t i) -> long long {
    if (i >= s.size()) throw Graph6ParseError("truncated graph6 string", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Graph6ParseError("character outside graph6 alphabet", i);
    return c - 63;
  };

  if (pos >= s.size()) throw Graph6ParseError("empty graph6 string", pos);
  long long n;
  long long c0 = sixbits(pos);
  if (c0 < 63) {
    n = c0;
    pos += 1;
  } else {
    if (pos + 1 < s.size() && s[pos + 1] == '~')
      throw Graph6ParseError("vertex counts above 258047 are not supported", pos);
    n = (sixbits(pos + 1) << 12) | (sixbits(pos + 2) << 6) | sixbits(pos + 3);
    pos += 4;
  }
  if (n == 0) throw Graph6ParseError("graph6 string encodes a graph with no vertices", pos);

  const long long nbits = n * (n - 1) / 2;
  const std::size_t nchars = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() - pos < nchars) throw Graph6ParseError("truncated graph6 string", s.size());
  if (s.size() - pos > nchars) throw Graph6ParseError("unexpected trailing characters", pos + nchars);

  std::vector<Graph::Edge> edges;
  long long bit = 0;
  long long current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) current = sixbits(pos + static_cast<std::size_t>(bit / 6));
      if ((current >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (nbits % 6 != 0) {
    long long pad = 6 - nbits % 6;
    if (current & ((1 << pad) - 1))
      throw Graph6ParseError("nonzero padding bits", pos + nchars - 1);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string serialize_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  if (n > kGraph6MaxVertices)
    throw std::invalid_argument("serialize_graph6: vertex counts above 258047 are not supported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace sombor
