#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sombor {

/// Immutable finite simple graph on vertex set {0, ..., n-1}.
///
/// Edges are kept sorted as (u, v) pairs with u < v. Construction validates
/// vertex ids, rejects self-loops, and collapses duplicate pairs, so every
/// instance is a well-formed simple graph for its whole lifetime.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be at least 1");
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("Graph: vertex id out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    deg_.assign(static_cast<std::size_t>(n), 0);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
      ++deg_[static_cast<std::size_t>(u)];
      ++deg_[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < n; ++v) adj_[static_cast<std::size_t>(v)].reserve(static_cast<std::size_t>(deg_[static_cast<std::size_t>(v)]));
    for (auto [u, v] : edges_) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    // Scanning sorted edges appends neighbors in increasing order, so each
    // adjacency list is already sorted; has_edge relies on that.
  }

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return deg_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& degrees() const { return deg_; }

  bool has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  bool is_complete() const { return edge_count() == static_cast<long long>(n_) * (n_ - 1) / 2; }
  bool is_edgeless() const { return edges_.empty(); }

  /// Complement on the same vertex set: uv is an edge iff it is not one here.
  Graph complement() const {
    std::vector<Edge> ce;
    ce.reserve(static_cast<std::size_t>(static_cast<long long>(n_) * (n_ - 1) / 2 - edge_count()));
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) ce.emplace_back(u, v);
    return Graph(n_, std::move(ce));
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> deg_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int delta = 0;  // minimum degree
  int Delta = 0;  // maximum degree
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees = g.degrees();
  auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.delta = *lo;
  p.Delta = *hi;
  return p;
}

/// Minimum and maximum degree over vertices of positive degree. Empty when m = 0.
inline std::optional<std::pair<int, int>> non_isolated_degree_range(const Graph& g) {
  int lo = 0, hi = 0;
  bool seen = false;
  for (int d : g.degrees()) {
    if (d == 0) continue;
    if (!seen) { lo = hi = d; seen = true; }
    else { lo = std::min(lo, d); hi = std::max(hi, d); }
  }
  if (!seen) return std::nullopt;
  return std::make_pair(lo, hi);
}

/// Breadth-first reachability from vertex 0. The one-vertex graph is connected.
inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

struct Bipartition {
  std::vector<int> side_a;  // vertices colored like the lowest vertex of their component
  std::vector<int> side_b;
};

/// Two-colors each component starting from its lowest vertex (which gets side A).
/// Returns nullopt when some edge joins two vertices of the same color.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    std::size_t head = 0;
    while (head < queue.size()) {
      int u = queue[head++];
      for (int w : g.neighbors(u)) {
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? b.side_a : b.side_b).push_back(v);
  return b;
}

enum class GraphKind {
  Empty,      // no edges
  Regular,    // all degrees equal k >= 1
  BiRegular,  // connected, bipartite, one side all Delta, the other all delta < Delta
  BiDegreed,  // exactly two distinct degrees, but not bi-regular
  General,
};

struct GraphClassification {
  GraphKind kind = GraphKind::Empty;
  int regular_degree = -1;                    // set for Regular
  int biregular_max = -1, biregular_min = -1; // set for BiRegular
  bool connected = false;
  bool bipartite = false;
  bool edge_sumsq_constant = false;  // d(u)^2 + d(v)^2 equal on every edge; false when m = 0

  /// Every vertex has the same degree; an edgeless graph counts as 0-regular.
  bool uniform_degree() const { return kind == GraphKind::Empty || kind == GraphKind::Regular; }
};

inline GraphClassification classify(const Graph& g) {
  GraphClassification c;
  c.connected = is_connected(g);
  auto bip = bipartition(g);
  c.bipartite = bip.has_value();

  if (!g.edges().empty()) {
    long long first = -1;
    c.edge_sumsq_constant = true;
    for (auto [u, v] : g.edges()) {
      long long du = g.degree(u), dv = g.degree(v);
      long long s = du * du + dv * dv;
      if (first == -1) first = s;
      else if (s != first) { c.edge_sumsq_constant = false; break; }
    }
  }

  std::vector<int> distinct = g.degrees();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  if (g.edges().empty()) {
    c.kind = GraphKind::Empty;
    return c;
  }
  if (distinct.size() == 1) {
    c.kind = GraphKind::Regular;
    c.regular_degree = distinct[0];
    return c;
  }
  if (distinct.size() == 2 && c.connected && c.bipartite) {
    auto side_uniform = [&](const std::vector<int>& side, int& d) {
      d = g.degree(side.front());
      for (int v : side)
        if (g.degree(v) != d) return false;
      return true;
    };
    int da = -1, db = -1;
    if (!bip->side_a.empty() && !bip->side_b.empty() &&
        side_uniform(bip->side_a, da) && side_uniform(bip->side_b, db) && da != db) {
      c.kind = GraphKind::BiRegular;
      c.biregular_max = std::max(da, db);
      c.biregular_min = std::min(da, db);
      return c;
    }
  }
  c.kind = distinct.size() == 2 ? GraphKind::BiDegreed : GraphKind::General;
  return c;
}

/// For a connected non-regular graph, three structural predicates are expected
/// to coincide:
///   (1) the graph is bi-regular;
///   (2) it has exactly two distinct degrees and |d(u) - d(v)| is the same
///       positive value on every edge;
///   (3) d(u)^2 + d(v)^2 is the same on every edge.
/// Returns true iff all three agree on the given graph. Throws on disconnected
/// or regular input, where the equivalence is not claimed.
inline bool biregular_criteria_agree(const Graph& g) {
  GraphClassification c = classify(g);
  if (!c.connected) throw std::invalid_argument("biregular_criteria_agree: graph must be connected");
  if (c.uniform_degree()) throw std::invalid_argument("biregular_criteria_agree: graph must not be regular");

  bool p1 = c.kind == GraphKind::BiRegular;

  std::vector<int> distinct = g.degrees();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  bool p2 = distinct.size() == 2;
  if (p2) {
    int gap = -1;
    for (auto [u, v] : g.edges()) {
      int d = std::abs(g.degree(u) - g.degree(v));
      if (gap == -1) gap = d;
      else if (d != gap) { p2 = false; break; }
    }
    if (gap <= 0) p2 = false;
  }

  bool p3 = c.edge_sumsq_constant;
  return p1 == p2 && p2 == p3;
}

}  // namespace sombor
