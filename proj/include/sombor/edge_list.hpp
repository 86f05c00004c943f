#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace sombor {

// Plain-text edge list: a header line "n m" followed by m lines "u v" with
// 0-based vertex ids. Blank lines and lines starting with '#' are skipped
// anywhere in the file. Duplicate edges collapse like in the Graph constructor.

class EdgeListParseError : public std::runtime_error {
 public:
  EdgeListParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline Graph parse_edge_list(std::istream& in) {
  std::size_t lineno = 0;
  std::string line;

  auto next_content_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  auto parse_two = [&](const std::string& text, long long& a, long long& b, const char* what) {
    std::istringstream ss(text);
    std::string extra;
    if (!(ss >> a >> b)) throw EdgeListParseError(std::string("expected two integers for ") + what, lineno);
    if (ss >> extra) throw EdgeListParseError(std::string("unexpected trailing token after ") + what, lineno);
  };

  std::string content;
  if (!next_content_line(content)) throw EdgeListParseError("missing header line \"n m\"", lineno + 1);
  long long n = 0, m = 0;
  parse_two(content, n, m, "header \"n m\"");
  if (n < 1) throw EdgeListParseError("vertex count must be at least 1", lineno);
  if (m < 0 || m > n * (n - 1) / 2) throw EdgeListParseError("edge count out of range", lineno);

  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line(content))
      throw EdgeListParseError("file ends before all edges are read", lineno + 1);
    long long u = 0, v = 0;
    parse_two(content, u, v, "edge \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw EdgeListParseError("vertex id out of range", lineno);
    if (u == v) throw EdgeListParseError("self-loops are not allowed", lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line(content)) throw EdgeListParseError("unexpected content after the last edge", lineno);
  return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

}  // namespace sombor
