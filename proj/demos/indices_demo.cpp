// Computes the full index table for a handful of small graphs and prints
// each graph's structural classification alongside the values.
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <sombor/sombor.hpp>

namespace {

const char* kind_name(sombor::GraphKind kind) {
  switch (kind) {
    case sombor::GraphKind::Empty: return "empty";
    case sombor::GraphKind::Regular: return "regular";
    case sombor::GraphKind::BiRegular: return "biregular";
    case sombor::GraphKind::BiDegreed: return "bidegreed";
    case sombor::GraphKind::General: return "general";
  }
  return "?";
}

void show(const std::string& name, const sombor::Graph& g) {
  const auto cls = sombor::classify(g);
  std::printf("%s  (n=%d, m=%lld, %s%s%s)\n", name.c_str(), g.vertex_count(),
              g.edge_count(), kind_name(cls.kind),
              cls.connected ? ", connected" : ", disconnected",
              cls.bipartite ? ", bipartite" : "");
  std::printf("  graph6: %s\n", sombor::serialize_graph6(g).c_str());
  const sombor::AlphaGrid grid({0.5, 1.0, 2.0});
  for (const auto& row : sombor::all_index_values(g, grid)) {
    if (row.param)
      std::printf("  %-9s (%4.1f) = %.10f\n", sombor::index_id_name(row.id),
                  *row.param, row.value);
    else
      std::printf("  %-9s        = %.10f\n", sombor::index_id_name(row.id),
                  row.value);
  }
  std::printf("\n");
}

}  // namespace

int main() {
  show("cycle C5", sombor::make_cycle(5));
  show("star K_{1,3}", sombor::make_star(3));
  show("path P4", sombor::make_path(4));
  show("complete bipartite K_{2,3}", sombor::make_complete_bipartite(2, 3));
  return 0;
}
