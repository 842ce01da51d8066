#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prc/graph.hpp"
#include "prc/instance.hpp"
#include "prc/path.hpp"
#include "prc/state_space.hpp"

namespace prc {

// Rooted forest over a vertex subset such that every edge of the induced
// subgraph joins an ancestor-descendant pair. depth counts edges.
struct TreedepthDecomposition {
    std::vector<Vertex> scope;    // sorted
    std::vector<Vertex> parent;   // indexed by vertex id; -1 root, -2 outside scope
    int depth = 0;

    bool in_scope(Vertex v) const {
        return v >= 0 && v < static_cast<Vertex>(parent.size()) && parent[v] != -2;
    }
    bool is_root(Vertex v) const { return parent[v] == -1; }

    // Root-to-v chain, v last.
    std::vector<Vertex> ancestors(Vertex v) const;
    // True iff a is a (weak) ancestor of b.
    bool is_ancestor(Vertex a, Vertex b) const;
    // Longest downward edge count per scope vertex.
    std::vector<int> heights() const;
    int computed_depth() const;

    // Every induced edge joins an ancestor-descendant pair and the recorded
    // depth matches the forest.
    bool valid_for(const Graph& g) const;
};

// Vertex set with no edges leaving anchor ∪ members; anchor is the adjacent
// part of the separating set.
struct Flap {
    std::vector<Vertex> anchor;   // sorted
    std::vector<Vertex> members;  // sorted
};

// Flaps with one anchor whose anchored subgraphs are isomorphic by an
// isomorphism fixing the anchor pointwise.
struct FlapClass {
    std::string canonical_code;
    std::vector<Flap> flaps;
};

// Either a decomposition of bounded depth or a path witnessing depth >= 2k
// in the avoid-free part (which is a loose-path candidate).
using DecompositionOutcome = std::variant<TreedepthDecomposition, Path>;

// The constructive decomposition: an ancestral chain of the avoid vertices
// with a DFS forest of g minus avoid hung beneath it. If some DFS chain
// reaches length 2k the chain is returned instead (a path disjoint from
// avoid). With force=true the loose-path exit is disabled and a (possibly
// deeper) decomposition is always produced.
DecompositionOutcome constructive_decomposition(const Graph& g,
                                                const std::vector<Vertex>& avoid,
                                                int k, bool force = false);

// Connected components of g minus s, one flap each; every vertex outside s
// lands in exactly one flap. Flap anchors are the adjacent subsets of s.
std::vector<Flap> find_flaps(const Graph& g, const std::vector<Vertex>& s);

// Partition of sibling flaps by the canonical code of their labeled
// decomposition subtrees (ancestor-height-set labels, AHU-style encoding).
// Equal codes imply flap equivalence. Each flap must be a union of td
// subtrees hanging below s; otherwise InternalError.
std::vector<FlapClass> flap_classes(const Graph& g, const std::vector<Vertex>& s,
                                    const TreedepthDecomposition& td,
                                    const std::vector<Flap>& flaps);

// Number of equivalent flaps kept per class beyond the protected ones.
int flap_retention_count(int k);

struct KernelResult {
    Instance instance;
    std::vector<Vertex> orig_of;  // kernel id -> input id
    bool shrunk = false;
};

// Bottom-up flap removal over the decomposition, iterated to a fixpoint.
// Never removes a flap touching start, goal, or protect_extra. The kernel
// decides exactly like the input instance.
KernelResult kernelize(const Instance& inst, const TreedepthDecomposition& td,
                       const std::vector<Vertex>& protect_extra = {});

// Goal of a bounded-treedepth solve: reach a concrete path, or reach any
// path through one vertex.
struct GoalSpec {
    enum class Kind { ReachPath, UseVertex };
    Kind kind = Kind::ReachPath;
    Path target;
    Vertex vertex = -1;

    static GoalSpec reach(Path q) { return {Kind::ReachPath, std::move(q), -1}; }
    static GoalSpec use_vertex(Vertex v) { return {Kind::UseVertex, {}, v}; }
};

// Kernelize, search the kernel, and lift the witness back to input ids.
// Decision equals the decision on the unkernelized instance; witnesses are
// valid in the input graph. min_moves is not reported (kernel distances are
// not instance distances).
SearchResult solve_bounded_treedepth(const Instance& inst,
                                     const TreedepthDecomposition& td,
                                     const GoalSpec& goal,
                                     const SearchOptions& opts = {});

// The ancestor-descendant closure of the recursive many-paths construction:
// depth 1 is a star with `branch` leaves; depth d joins two depth-(d-1)
// constructions under a new root. The construction tree certifies depth <= d.
struct ExtremalTreedepthGraph {
    Graph graph;
    TreedepthDecomposition certificate;
};

ExtremalTreedepthGraph extremal_treedepth_graph(int depth, int branch);

}  // namespace prc
