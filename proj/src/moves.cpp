#include "prc/moves.hpp"

#include <algorithm>
#include <string>

namespace prc {

namespace {

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

// Successor sequence for removing the front edge and extending past the back
// vertex with w; empty if not simple. The new vertex may equal the dropped
// front vertex (rotation around a cycle).
std::vector<Vertex> extend_back(const std::vector<Vertex>& seq, Vertex w) {
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == w) return {};
    std::vector<Vertex> out(seq.begin() + 1, seq.end());
    out.push_back(w);
    return out;
}

std::vector<Vertex> extend_front(const std::vector<Vertex>& seq, Vertex w) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == w) return {};
    std::vector<Vertex> out;
    out.reserve(seq.size());
    out.push_back(w);
    out.insert(out.end(), seq.begin(), seq.end() - 1);
    return out;
}

}  // namespace

Path apply_step(const Graph& g, const Path& p, const ReconfigStep& s) {
    if (p.length() < 1) throw IllegalStepError("path has no end edge");
    if (s.add == s.remove)
        throw IllegalStepError("add equals remove: " + edge_str(s.add));
    if (!g.has_edge(s.add))
        throw IllegalStepError("add edge not in graph: " + edge_str(s.add));
    if (!g.has_edge(s.remove))
        throw IllegalStepError("remove edge not in graph: " + edge_str(s.remove));

    const auto& seq = p.vertices();
    const Edge front_edge(seq[0], seq[1]);
    const Edge back_edge(seq[seq.size() - 2], seq.back());

    if (s.remove != front_edge && s.remove != back_edge)
        throw IllegalStepError("remove is not an end edge: " + edge_str(s.remove));

    // With the front edge removed, the far end is the back vertex, and vice
    // versa. A single-edge path offers both readings.
    if (s.remove == front_edge && s.add.touches(seq.back())) {
        auto out = extend_back(seq, s.add.other(seq.back()));
        if (!out.empty()) return Path::canonical(std::move(out));
        throw IllegalStepError("resulting walk is not simple");
    }
    if (s.remove == back_edge && s.add.touches(seq.front())) {
        auto out = extend_front(seq, s.add.other(seq.front()));
        if (!out.empty()) return Path::canonical(std::move(out));
        throw IllegalStepError("resulting walk is not simple");
    }
    throw IllegalStepError("add edge " + edge_str(s.add) +
                           " is not incident to the far end");
}

std::vector<Move> legal_moves(const Graph& g, const Path& p) {
    const auto& seq = p.vertices();
    std::vector<Move> out;
    if (seq.size() < 2) return out;

    const Edge front_edge(seq[0], seq[1]);
    const Edge back_edge(seq[seq.size() - 2], seq.back());

    for (Vertex w : g.neighbors(seq.back())) {
        Edge add(seq.back(), w);
        if (add == front_edge) continue;
        auto s = extend_back(seq, w);
        if (!s.empty())
            out.push_back({{add, front_edge}, Path::canonical(std::move(s))});
    }
    for (Vertex w : g.neighbors(seq.front())) {
        Edge add(seq.front(), w);
        if (add == back_edge) continue;
        auto s = extend_front(seq, w);
        if (!s.empty())
            out.push_back({{add, back_edge}, Path::canonical(std::move(s))});
    }

    std::sort(out.begin(), out.end(),
              [](const Move& x, const Move& y) { return x.successor < y.successor; });
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].successor == out[i + 1].successor)
            throw InternalError("duplicate successor in legal_moves");
    return out;
}

std::vector<Path> successors(const Graph& g, const Path& p) {
    std::vector<Path> out;
    for (auto& m : legal_moves(g, p)) out.push_back(std::move(m.successor));
    return out;
}

ReconfigSequence reverse_sequence(const ReconfigSequence& seq) {
    ReconfigSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        out.push_back(it->reversed());
    return out;
}

Path replay(const Graph& g, const Path& p, const ReconfigSequence& seq) {
    Path cur = p;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            cur = apply_step(g, cur, seq[i]);
        } catch (const IllegalStepError& e) {
            throw ReplayError(i, "replay failed at step " + std::to_string(i) +
                                     ": " + e.what());
        }
    }
    return cur;
}

}  // namespace prc
