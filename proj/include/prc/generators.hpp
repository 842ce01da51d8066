#pragma once

#include <cstdint>
#include <vector>

#include "prc/graph.hpp"
#include "prc/instance.hpp"
#include "prc/treedepth.hpp"

namespace prc {

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_star(int n);          // center 0, leaves 1..n-1
Graph gen_grid(int w, int h);   // row-major ids

// Delegates to the ancestor-descendant closure construction.
Graph gen_extremal_treedepth(int depth, int branch);

// Connected graph with circuit rank exactly r: random spanning tree plus r
// distinct extra edges. Deterministic per (n, r, seed).
Graph gen_random_fixed_cr(int n, int r, std::uint64_t seed);

// `copies` pendant chains of `branch_len` vertices attached to `anchor`.
// Appended copies are pairwise equivalent flaps for any separator containing
// the anchor.
Graph gen_duplicate_flap(const Graph& base, Vertex anchor, int branch_len,
                         int copies);

// Instance with planted duplicate branches: a host path long enough for the
// start and goal windows, duplicate chains on a middle anchor.
Instance gen_duplicate_flap_instance(int k, int copies, int branch_len,
                                     std::uint64_t seed);

// Deterministic start/goal selection for a generated graph: first and last
// canonical k-paths in enumeration order.
Instance default_instance(Graph g, int k);

}  // namespace prc
