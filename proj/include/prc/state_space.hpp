#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prc/graph.hpp"
#include "prc/instance.hpp"
#include "prc/moves.hpp"
#include "prc/path.hpp"

namespace prc {

constexpr std::uint64_t kDefaultStateCap = 10'000'000;

// Explicit state space: every canonical length-k path, moves as index pairs.
struct StateGraph {
    int k = 0;
    std::vector<Path> states;                   // sorted
    std::vector<std::pair<int, int>> moves;     // i < j, sorted

    std::uint64_t state_count() const { return states.size(); }
    std::uint64_t move_count() const { return moves.size(); }
    int index_of(const Path& p) const;          // -1 if absent
};

struct SearchStats {
    std::uint64_t states_expanded = 0;
    std::uint64_t states_visited = 0;
    std::uint64_t frontier_peak = 0;
    double wall_ms = 0.0;
    std::string engine;
};

struct SearchResult {
    bool reachable = false;
    std::optional<std::uint64_t> min_moves;
    std::optional<ReconfigSequence> witness;
    std::optional<Path> final_state;            // state that met the goal
    SearchStats stats;
};

enum class SearchMode { Decide, Optimize };

struct SearchOptions {
    SearchMode mode = SearchMode::Decide;
    std::uint64_t state_cap = kDefaultStateCap;
    // Randomized color-coding accelerator for loose-path detection. Sound but
    // incomplete, so the exhaustive search always backs it up.
    bool color_coding = false;
    std::uint64_t seed = 1;
};

// All canonical simple paths of g with exactly k edges, sorted. k >= 1.
std::vector<Path> enumerate_paths(const Graph& g, int k);

// As enumerate_paths but stops with nullopt once more than `cap` paths exist.
std::optional<std::vector<Path>> enumerate_paths_capped(const Graph& g, int k,
                                                        std::uint64_t cap);

// Materializes the full state space. Throws CapacityError past options cap.
StateGraph build_state_graph(const Graph& g, int k,
                             std::uint64_t state_cap = kDefaultStateCap);

// Implicit BFS between the instance's start and goal states.
// Decide mode stops at first goal contact and carries no witness;
// optimize mode returns the exact minimum move count plus a witness.
SearchResult bfs_solve(const Instance& inst, const SearchOptions& opts = {});

// Implicit BFS from `start` over length-|start| paths whose vertices all lie
// in `scope` (empty scope = whole graph), stopping at the first state that
// satisfies pred. Always reconstructs a witness. BFS order makes the reported
// move count minimal.
SearchResult goal_predicate_bfs(const Graph& g, const Path& start,
                                const std::function<bool(const Path&)>& pred,
                                const std::vector<Vertex>& scope = {},
                                const SearchOptions& opts = {});

// Deterministic DOT rendering: one node per state labeled by its vertex
// sequence, one undirected edge per move.
std::string export_dot(const StateGraph& sg);

}  // namespace prc
