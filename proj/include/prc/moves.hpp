#pragma once

#include <vector>

#include "prc/graph.hpp"
#include "prc/path.hpp"

namespace prc {

// One move: add an edge at one end of the path, remove the edge at the other
// end. The time reversal of (add, remove) is (remove, add).
struct ReconfigStep {
    Edge add;
    Edge remove;

    bool operator==(const ReconfigStep&) const = default;
    auto operator<=>(const ReconfigStep&) const = default;

    ReconfigStep reversed() const { return {remove, add}; }
};

using ReconfigSequence = std::vector<ReconfigStep>;

// Applies one step to p and returns the canonical successor.
// Legal when: s.remove is an end edge of p, s.add is a graph edge incident to
// the vertex at the opposite end, add != remove, and the result is a simple
// path of the same length. The new end vertex may be the one just dropped
// (rotation around a cycle). Throws IllegalStepError otherwise.
Path apply_step(const Graph& g, const Path& p, const ReconfigStep& s);

struct Move {
    ReconfigStep step;
    Path successor;  // canonical
};

// All legal steps from p with their canonical successors, duplicate-free,
// sorted by successor. These are exactly the state-space neighbors of p.
std::vector<Move> legal_moves(const Graph& g, const Path& p);

// Successor paths only (same order as legal_moves).
std::vector<Path> successors(const Graph& g, const Path& p);

// Time reversal: reversed steps in reverse order. Involution.
ReconfigSequence reverse_sequence(const ReconfigSequence& seq);

// Folds apply_step over seq starting from p. Throws ReplayError carrying the
// index of the first illegal step.
Path replay(const Graph& g, const Path& p, const ReconfigSequence& seq);

}  // namespace prc
