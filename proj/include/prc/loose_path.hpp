#pragma once

#include <optional>
#include <vector>

#include "prc/graph.hpp"
#include "prc/moves.hpp"
#include "prc/path.hpp"
#include "prc/state_space.hpp"

namespace prc {

// A loose path for (g, p, q): length exactly 2k, vertex-disjoint from both.
// entry_sequence takes the start path to a sub-path of route (all vertices
// on route).
struct LoosePathCertificate {
    Path route;
    ReconfigSequence entry_sequence;
};

// Exhaustive depth-bounded DFS for a simple path with exactly `len` edges
// avoiding `blocked` vertices. Deterministic and complete; returns the first
// path in ascending start-vertex / neighbor order.
std::optional<Path> find_path_avoiding(const Graph& g,
                                       const std::vector<Vertex>& blocked, int len);

// Loose-path search: a simple path of length 2k avoiding V(p) ∪ V(q).
std::optional<Path> find_loose_path(const Graph& g, const Path& p, const Path& q,
                                    int k);

// Low route-index of the window `p` occupies when p lies contiguously on
// route (in either orientation); -1 otherwise.
int window_lo_on_route(const Path& route, const Path& p);

// Randomized color-coding accelerator for the same search. Sound (any path
// returned is real) but incomplete per trial; runs ceil(e^len ln n) trials.
// Never used as the sole authority: callers fall back to the exhaustive
// search when it finds nothing.
std::optional<Path> find_path_avoiding_color_coding(const Graph& g,
                                                    const std::vector<Vertex>& blocked,
                                                    int len, std::uint64_t seed);

std::optional<Path> find_loose_path_color_coding(const Graph& g, const Path& p,
                                                 const Path& q, int k,
                                                 std::uint64_t seed);

// Steps that slide a path lying on route from one window to another.
// Windows are index ranges [lo, lo+k] into route's vertex sequence.
ReconfigSequence slide_along_route(const Path& route, int k, int from_lo, int to_lo);

// Given a search that first touched `route` (final state has exactly one
// route vertex, at an end), extends its witness so the path lies fully on
// route. Returns the extended sequence and the window's low index.
struct OntoRouteResult {
    ReconfigSequence sequence;  // entry witness + slides
    int window_lo = 0;
};
OntoRouteResult slide_onto_route(const Graph& g, const Path& route,
                                 const SearchResult& entry);

// Full realization of the reachable-loose-path maneuver: entry must be a
// successful predicate search whose final state touches r; returns a
// sequence replaying from the entry's start to a sub-path of r with
// endpoint v. Throws InvalidCertificate (as InternalError) on bad inputs.
ReconfigSequence slide_to_endpoint(const Graph& g, const Path& r,
                                   const SearchResult& entry, Vertex v);

// Transfer between loose paths: current lies along r. If r == l: empty.
// If they share a vertex: slides along r until the path ends at the smallest
// shared vertex (now touching l). Otherwise crosses the shortest connecting
// path (multi-source BFS from r, smallest-id tie-breaks). Replay ends with
// the path touching l. Throws SolverError("no-transfer") across components.
ReconfigSequence transfer_between_loose_paths(const Graph& g, const Path& current,
                                              const Path& r, const Path& l, int k);

// Steps from a window on r to a full window on l, for witness composition.
// Constructive when r and l are disjoint; otherwise a search restricted to
// V(r) ∪ V(l) with a component-scope fallback.
struct TransferOntoResult {
    ReconfigSequence sequence;
    Path final_window;  // canonical path lying fully on l
};
TransferOntoResult transfer_onto(const Graph& g, const Path& current,
                                 const Path& r, const Path& l, int k,
                                 const SearchOptions& opts = {});

}  // namespace prc
