#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace sombor {

// ---------------------------------------------------------------------------
// Named families, with the canonical labelings used throughout:
//   path               0-1-2-...-(n-1)
//   cycle              0-1-...-(n-1)-0
//   complete bipartite parts {0..a-1} and {a..a+b-1}
//   star               K_{1,b} with center 0 and leaves 1..b

inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("make_complete: n must be at least 1");
  std::vector<Graph::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

inline Graph make_empty(int n) {
  if (n < 1) throw std::invalid_argument("make_empty: n must be at least 1");
  return Graph(n, {});
}

inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: n must be at least 1");
  std::vector<Graph::Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, std::move(e));
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: n must be at least 3");
  std::vector<Graph::Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

/// Complete bipartite K_{a,b} on parts {0..a-1} and {a..a+b-1}.
inline Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("make_complete_bipartite: parts must be non-empty");
  std::vector<Graph::Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
  return Graph(a + b, std::move(e));
}

/// Star K_{1,leaves}: center 0, leaves 1..leaves.
inline Graph make_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("make_star: at least one leaf required");
  return make_complete_bipartite(1, leaves);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of labeled simple graphs on n vertices, as edge-subset
// masks over the C(n,2) vertex pairs in the fixed order
//   (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1)
// with pair k at mask bit k. Masks are visited in increasing numeric order.
// Isomorphism dedup keeps a mask iff it is the numerically smallest mask in its
// isomorphism orbit (brute force over all n! vertex permutations), so exactly
// one representative per isomorphism class is emitted, in deterministic order.

struct EnumerationSpec {
  int n = 1;
  bool connected_only = false;
  bool dedup_isomorphism = false;

  /// Brute-force permutation canonicalization is capped here (7! = 5040), and
  /// the labeled count 2^21 at n = 7 is the largest sweep this supports.
  static constexpr int kMaxVertices = 7;
};

namespace detail {

inline int pair_index(int n, int i, int j) {
  // i < j; pairs with first coordinate i start at offset i*n - i*(i+1)/2 - i.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// For every permutation p of {0..n-1}, the map from pair bit k = (i,j) to the
/// bit of (p(i), p(j)).
inline std::vector<std::vector<int>> permutation_bit_maps(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> map(static_cast<std::size_t>(pairs));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
        if (a > b) std::swap(a, b);
        map[static_cast<std::size_t>(pair_index(n, i, j))] = pair_index(n, a, b);
      }
    maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

inline bool mask_is_canonical(std::uint32_t mask, int pairs, const std::vector<std::vector<int>>& maps) {
  for (const auto& map : maps) {
    std::uint32_t permuted = 0;
    for (int k = 0; k < pairs; ++k)
      if ((mask >> k) & 1u) permuted |= 1u << map[static_cast<std::size_t>(k)];
    if (permuted < mask) return false;
  }
  return true;
}

inline Graph mask_to_graph(int n, std::uint32_t mask) {
  std::vector<Graph::Edge> e;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1u) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

}  // namespace detail

/// Pull-based enumeration stream; next() yields graphs until exhausted.
class EnumerationCursor {
 public:
  explicit EnumerationCursor(const EnumerationSpec& spec) : spec_(spec) {
    if (spec.n < 1) throw std::invalid_argument("EnumerationCursor: n must be at least 1");
    if (spec.n > EnumerationSpec::kMaxVertices)
      throw std::invalid_argument("EnumerationCursor: n exceeds the enumeration cap of 7");
    pairs_ = spec.n * (spec.n - 1) / 2;
    end_ = 1ull << pairs_;
    if (spec.dedup_isomorphism) maps_ = detail::permutation_bit_maps(spec.n);
  }

  std::optional<Graph> next() {
    while (mask_ < end_) {
      std::uint32_t mask = static_cast<std::uint32_t>(mask_++);
      if (spec_.dedup_isomorphism && !detail::mask_is_canonical(mask, pairs_, maps_)) continue;
      Graph g = detail::mask_to_graph(spec_.n, mask);
      if (spec_.connected_only && !is_connected(g)) continue;
      return g;
    }
    return std::nullopt;
  }

 private:
  EnumerationSpec spec_;
  int pairs_;
  std::uint64_t mask_ = 0, end_;
  std::vector<std::vector<int>> maps_;
};

template <typename Fn>
void for_each_graph(const EnumerationSpec& spec, Fn&& fn) {
  EnumerationCursor cursor(spec);
  while (auto g = cursor.next()) fn(*g);
}

inline std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec) {
  std::vector<Graph> out;
  for_each_graph(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic random graphs. The generator is pinned for reproducibility
// across platforms: SplitMix64 (Steele, Lea, Flood 2014) advanced once per
// vertex pair in the fixed pair order above, mapped to [0,1) by taking the top
// 53 bits, with the edge included iff that value is strictly below p.

namespace detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline double splitmix64_unit(std::uint64_t& state) {
  return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Erdos-Renyi G(n, p) with the pinned SplitMix64 stream seeded by `seed`.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_graph: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p must lie in [0,1]");
  std::uint64_t state = seed;
  std::vector<Graph::Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (detail::splitmix64_unit(state) < p) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

}  // namespace sombor
