#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace sombor {

// Degree-based topological indices. Vertex-sum indices range over all vertices,
// edge-sum indices over all edges; every edge-sum index of an edgeless graph is 0.
// Sums accumulate in edge/vertex storage order, which is deterministic because
// Graph keeps its edges sorted.

/// First Zagreb index M1 = sum over vertices of d(v)^2.
inline double first_zagreb(const Graph& g) {
  double s = 0;
  for (int d : g.degrees()) s += static_cast<double>(d) * d;
  return s;
}

/// Second Zagreb index M2 = sum over edges of d(u) * d(v).
inline double second_zagreb(const Graph& g) {
  double s = 0;
  for (auto [u, v] : g.edges()) s += static_cast<double>(g.degree(u)) * g.degree(v);
  return s;
}

/// General first Zagreb index M1^p = sum over vertices of d(v)^p.
/// Isolated vertices contribute 0 for every p >= 0 (0^0 is taken as 0 here, so
/// p = 0 counts the non-isolated vertices); p < 0 on a graph with an isolated
/// vertex has no finite value and throws.
inline double general_first_zagreb(const Graph& g, double p) {
  double s = 0;
  for (int d : g.degrees()) {
    if (d == 0) {
      if (p < 0) throw std::domain_error("general_first_zagreb: negative exponent with an isolated vertex");
      continue;
    }
    s += std::pow(static_cast<double>(d), p);
  }
  return s;
}

/// Forgotten index F = sum over edges of d(u)^2 + d(v)^2 (equals M1^3 as a vertex sum).
inline double forgotten(const Graph& g) {
  double s = 0;
  for (auto [u, v] : g.edges()) {
    double du = g.degree(u), dv = g.degree(v);
    s += du * du + dv * dv;
  }
  return s;
}

/// General Randic index R_a = sum over edges of (d(u) d(v))^a.
inline double general_randic(const Graph& g, double a) {
  double s = 0;
  for (auto [u, v] : g.edges()) s += std::pow(static_cast<double>(g.degree(u)) * g.degree(v), a);
  return s;
}

/// Randic index R = R_{-1/2}.
inline double randic(const Graph& g) { return general_randic(g, -0.5); }

/// General sum-connectivity index chi_a = sum over edges of (d(u) + d(v))^a.
inline double general_sum_connectivity(const Graph& g, double a) {
  double s = 0;
  for (auto [u, v] : g.edges()) s += std::pow(static_cast<double>(g.degree(u)) + g.degree(v), a);
  return s;
}

/// Sum-connectivity index chi = chi_{-1/2}.
inline double sum_connectivity(const Graph& g) { return general_sum_connectivity(g, -0.5); }

/// General Sombor index SO_a = sum over edges of (d(u)^2 + d(v)^2)^(a/2).
inline double general_sombor(const Graph& g, double a) {
  double s = 0;
  for (auto [u, v] : g.edges()) {
    double du = g.degree(u), dv = g.degree(v);
    s += std::pow(du * du + dv * dv, a / 2);
  }
  return s;
}

/// Sombor index SO = SO_1.
inline double sombor(const Graph& g) { return general_sombor(g, 1.0); }

/// SO_a of the complement of g, computed without materializing the complement:
/// iterates non-adjacent pairs with complement degrees n - 1 - d(v). Pair order
/// matches the sorted edge order of Graph::complement(), so the floating-point
/// sum is identical to general_sombor(g.complement(), a).
inline double general_sombor_complement(const Graph& g, double a) {
  const int n = g.vertex_count();
  double s = 0;
  for (int u = 0; u < n; ++u) {
    double du = n - 1 - g.degree(u);
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      double dv = n - 1 - g.degree(v);
      s += std::pow(du * du + dv * dv, a / 2);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Closed forms for SO_a on classic families.

/// SO_a(K_n) = 2^(a/2 - 1) * n * (n-1)^(a+1); zero for the one-vertex graph.
inline double complete_sombor_closed_form(int n, double a) {
  if (n < 1) throw std::invalid_argument("complete_sombor_closed_form: n must be at least 1");
  if (n == 1) return 0.0;
  return std::pow(2.0, a / 2 - 1) * n * std::pow(static_cast<double>(n - 1), a + 1);
}

/// SO_a(C_n) = n * 2^(3a/2) for n >= 3.
inline double cycle_sombor_closed_form(int n, double a) {
  if (n < 3) throw std::invalid_argument("cycle_sombor_closed_form: n must be at least 3");
  return std::pow(2.0, 1.5 * a) * n;
}

/// Two published variants of the path closed form. They agree at a = 1 and for
/// n <= 3, and they differ otherwise: the Paper variant weights the n-3 interior
/// edges as 2 * 2^(a/2) instead of the correct 2^(3a/2) = (2^2 + 2^2)^(a/2),
/// e.g. at n = 4, a = 2 it yields 14 where direct computation gives 18.
enum class PathVariant { Corrected, Paper };

/// SO_a(P_n) for n >= 2. Corrected: 2 * 5^(a/2) + (n-3) * 2^(3a/2) for n >= 3.
/// Paper: 2 * 5^(a/2) + 2 (n-3) * 2^(a/2). P_2 = K_2 gives 2^(a/2) either way.
inline double path_sombor_closed_form(int n, double a, PathVariant variant = PathVariant::Corrected) {
  if (n < 2) throw std::invalid_argument("path_sombor_closed_form: n must be at least 2");
  if (n == 2) return std::pow(2.0, a / 2);
  double ends = 2 * std::pow(5.0, a / 2);
  if (variant == PathVariant::Paper) return ends + 2 * (n - 3) * std::pow(2.0, a / 2);
  return ends + (n - 3) * std::pow(2.0, 1.5 * a);
}

// ---------------------------------------------------------------------------
// Exponent grids and bulk evaluation.

/// Validated list of real exponents: finite values only, at least one.
struct AlphaGrid {
  std::vector<double> values;

  explicit AlphaGrid(std::vector<double> v) : values(std::move(v)) {
    if (values.empty()) throw std::invalid_argument("AlphaGrid: at least one exponent required");
    for (double a : values)
      if (!std::isfinite(a)) throw std::invalid_argument("AlphaGrid: exponents must be finite");
  }

  static AlphaGrid default_grid() { return AlphaGrid({-2.0, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0, 3.0}); }

  auto begin() const { return values.begin(); }
  auto end() const { return values.end(); }
  std::size_t size() const { return values.size(); }
};

enum class IndexId { M1, M2, M1P, F, R, RAlpha, Chi, ChiAlpha, SO, SOAlpha };

inline const char* index_id_name(IndexId id) {
  switch (id) {
    case IndexId::M1: return "M1";
    case IndexId::M2: return "M2";
    case IndexId::M1P: return "M1P";
    case IndexId::F: return "F";
    case IndexId::R: return "R";
    case IndexId::RAlpha: return "R_alpha";
    case IndexId::Chi: return "chi";
    case IndexId::ChiAlpha: return "chi_alpha";
    case IndexId::SO: return "SO";
    case IndexId::SOAlpha: return "SO_alpha";
  }
  return "?";
}

struct IndexValue {
  IndexId id;
  std::optional<double> param;  // exponent for the parameterized indices
  double value = 0;
};

/// Every index of one graph: fixed indices once, parameterized ones per grid
/// value, ordered by index id then by grid position. M1P rows with a negative
/// exponent are omitted when the graph has an isolated vertex (no finite value).
inline std::vector<IndexValue> all_index_values(const Graph& g, const AlphaGrid& grid) {
  std::vector<IndexValue> out;
  bool has_isolated = false;
  for (int d : g.degrees())
    if (d == 0) { has_isolated = true; break; }

  out.push_back({IndexId::M1, std::nullopt, first_zagreb(g)});
  out.push_back({IndexId::M2, std::nullopt, second_zagreb(g)});
  for (double p : grid)
    if (p >= 0 || !has_isolated) out.push_back({IndexId::M1P, p, general_first_zagreb(g, p)});
  out.push_back({IndexId::F, std::nullopt, forgotten(g)});
  out.push_back({IndexId::R, std::nullopt, randic(g)});
  for (double a : grid) out.push_back({IndexId::RAlpha, a, general_randic(g, a)});
  out.push_back({IndexId::Chi, std::nullopt, sum_connectivity(g)});
  for (double a : grid) out.push_back({IndexId::ChiAlpha, a, general_sum_connectivity(g, a)});
  out.push_back({IndexId::SO, std::nullopt, sombor(g)});
  for (double a : grid) out.push_back({IndexId::SOAlpha, a, general_sombor(g, a)});
  return out;
}

}  // namespace sombor
