// Umbrella header: the whole library.
//
//   graph.hpp     simple-graph value type, degree profiles, classification
//   indices.hpp   degree-based topological indices and closed forms
//   bounds.hpp    inequality checkers with equality-case diagnostics
//   graph6.hpp    graph6 wire-format codec
//   edge_list.hpp human-readable edge-list format
//   generate.hpp  standard families, exhaustive enumeration, random graphs
//   verify.hpp    parallel corpus verification driver
//   report.hpp    deterministic CSV/JSON serialization

#pragma once

#include "bounds.hpp"     // IWYU pragma: export
#include "edge_list.hpp"  // IWYU pragma: export
#include "generate.hpp"   // IWYU pragma: export
#include "graph.hpp"      // IWYU pragma: export
#include "graph6.hpp"     // IWYU pragma: export
#include "indices.hpp"    // IWYU pragma: export
#include "report.hpp"     // IWYU pragma: export
#include "verify.hpp"     // IWYU pragma: export
