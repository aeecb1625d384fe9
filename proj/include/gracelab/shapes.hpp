#pragma once

#include "gracelab/graph.hpp"

namespace gracelab {

// Bare (unlabeled) stock graphs, mainly as search targets.  These have no
// alpha-domain restrictions: any n >= 3 cycle is fine here, for example,
// while the base atlas only admits cycles divisible by 4.

Graph make_path_graph(int n);                       // n >= 1 vertices
Graph make_cycle_graph(int n);                      // n >= 3
Graph make_complete_bipartite_graph(int m, int n);  // m, n >= 1
Graph make_grid_graph(int m, int n);                // m, n >= 1

}  // namespace gracelab
