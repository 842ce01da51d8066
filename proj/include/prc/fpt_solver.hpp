#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "prc/graph.hpp"
#include "prc/instance.hpp"
#include "prc/loose_path.hpp"
#include "prc/state_space.hpp"
#include "prc/treedepth.hpp"

namespace prc {

// Result of the win-win loop: either a reachable loose path with an entry
// certificate, or a reachable and inescapable vertex set with a decomposition
// of its induced subgraph.
struct WinWinOutcome {
    enum class Kind { LoosePath, InescapableSet };
    Kind kind = Kind::InescapableSet;

    // LoosePath
    std::optional<LoosePathCertificate> certificate;

    // InescapableSet
    std::vector<Vertex> inescapable;  // sorted; contains all start-path vertices
    std::optional<TreedepthDecomposition> decomposition;

    // Per-vertex reachability witnesses for the grown set (empty sequence for
    // start-path vertices).
    std::unordered_map<Vertex, ReconfigSequence> reach_witness;
};

// The win-win loop: grow a reachable set S from V(p); for each boundary edge
// uv (ascending) test escape into S ∪ {v} with the bounded-treedepth solver;
// on escape, test S ∪ {v} for a loose path. Terminates with a reachable loose
// path or an inescapable S.
WinWinOutcome win_win(const Graph& g, const Path& p, const Path& q, int k,
                      const SearchOptions& opts = {});

// Fixed-parameter decision procedure: win-win on (G,P,Q), then if a loose
// path was found, win-win on the reversed instance (G,Q,P); dispatches to
// the bounded-treedepth solver or composes a two-loose-path witness. Every
// yes answer carries a replay-validated witness. min_moves is not reported.
SearchResult solve_fpt(const Instance& inst, const SearchOptions& opts = {});

// Dispatch: complete graphs to the closed-form rule, trees and small state
// spaces to BFS, everything else to solve_fpt (decide) or BFS (optimize).
// stats.engine records which engine ran.
SearchResult solve_auto(const Instance& inst, SearchMode mode,
                        const SearchOptions& opts = {});

}  // namespace prc
