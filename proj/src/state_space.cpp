#include "prc/state_space.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace prc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct ParentInfo {
    Path parent;
    ReconfigStep step;
};

ReconfigSequence rebuild_witness(
    const std::unordered_map<Path, ParentInfo, PathHash>& parents,
    const Path& start, const Path& end) {
    ReconfigSequence seq;
    Path cur = end;
    while (!(cur == start)) {
        auto it = parents.find(cur);
        if (it == parents.end()) throw InternalError("broken parent chain");
        seq.push_back(it->second.step);
        cur = it->second.parent;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

// Shared BFS core. scope_mask empty = unrestricted. want_witness controls the
// parent map (decide mode stays lean).
SearchResult bfs_core(const Graph& g, const Path& start,
                      const std::function<bool(const Path&)>& goal,
                      const std::vector<char>& scope_mask,
                      const SearchOptions& opts, bool want_witness,
                      const char* engine) {
    auto t0 = Clock::now();
    SearchResult res;
    res.stats.engine = engine;

    if (!scope_mask.empty())
        for (Vertex v : start.vertices())
            if (!scope_mask[v])
                throw ValidationError("start path leaves the search scope");

    auto in_scope = [&](const Path& p) {
        if (scope_mask.empty()) return true;
        for (Vertex v : p.vertices())
            if (!scope_mask[v]) return false;
        return true;
    };

    if (goal(start)) {
        res.reachable = true;
        res.min_moves = 0;
        if (want_witness) res.witness = ReconfigSequence{};
        res.final_state = start;
        res.stats.states_visited = 1;
        res.stats.wall_ms = ms_since(t0);
        return res;
    }

    std::unordered_set<Path, PathHash> visited;
    std::unordered_map<Path, ParentInfo, PathHash> parents;
    std::deque<std::pair<Path, std::uint64_t>> queue;

    visited.insert(start);
    queue.emplace_back(start, 0);

    while (!queue.empty()) {
        res.stats.frontier_peak = std::max<std::uint64_t>(res.stats.frontier_peak,
                                                          queue.size());
        auto [cur, dist] = std::move(queue.front());
        queue.pop_front();
        ++res.stats.states_expanded;

        for (auto& mv : legal_moves(g, cur)) {
            if (!in_scope(mv.successor)) continue;
            if (visited.contains(mv.successor)) continue;
            if (visited.size() >= opts.state_cap) throw CapacityError(opts.state_cap);
            visited.insert(mv.successor);
            if (want_witness) parents.emplace(mv.successor, ParentInfo{cur, mv.step});
            if (goal(mv.successor)) {
                res.reachable = true;
                res.min_moves = dist + 1;
                res.final_state = mv.successor;
                if (want_witness)
                    res.witness = rebuild_witness(parents, start, mv.successor);
                res.stats.states_visited = visited.size();
                res.stats.wall_ms = ms_since(t0);
                return res;
            }
            queue.emplace_back(std::move(mv.successor), dist + 1);
        }
    }

    res.reachable = false;
    res.stats.states_visited = visited.size();
    res.stats.wall_ms = ms_since(t0);
    return res;
}

void enumerate_dfs(const Graph& g, int k, std::vector<Vertex>& seq,
                   std::vector<char>& used, std::vector<Path>& out,
                   std::uint64_t cap, bool& over) {
    if (over) return;
    if (static_cast<int>(seq.size()) == k + 1) {
        Path p(seq);
        if (p.is_canonical()) {
            if (out.size() >= cap) {
                over = true;
                return;
            }
            out.push_back(std::move(p));
        }
        return;
    }
    for (Vertex w : g.neighbors(seq.back())) {
        if (used[w]) continue;
        used[w] = 1;
        seq.push_back(w);
        enumerate_dfs(g, k, seq, used, out, cap, over);
        seq.pop_back();
        used[w] = 0;
        if (over) return;
    }
}

std::vector<Path> enumerate_impl(const Graph& g, int k, std::uint64_t cap,
                                 bool& over) {
    if (k < 1) throw ValidationError("path length must be at least 1");
    std::vector<Path> out;
    std::vector<Vertex> seq;
    std::vector<char> used(g.vertex_count(), 0);
    over = false;
    for (Vertex s = 0; s < g.vertex_count() && !over; ++s) {
        used[s] = 1;
        seq.assign(1, s);
        enumerate_dfs(g, k, seq, used, out, cap, over);
        used[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int StateGraph::index_of(const Path& p) const {
    auto it = std::lower_bound(states.begin(), states.end(), p);
    if (it == states.end() || !(*it == p)) return -1;
    return static_cast<int>(it - states.begin());
}

std::vector<Path> enumerate_paths(const Graph& g, int k) {
    bool over;
    auto out = enumerate_impl(g, k, UINT64_MAX, over);
    return out;
}

std::optional<std::vector<Path>> enumerate_paths_capped(const Graph& g, int k,
                                                        std::uint64_t cap) {
    bool over;
    auto out = enumerate_impl(g, k, cap, over);
    if (over) return std::nullopt;
    return out;
}

StateGraph build_state_graph(const Graph& g, int k, std::uint64_t state_cap) {
    StateGraph sg;
    sg.k = k;
    bool over;
    sg.states = enumerate_impl(g, k, state_cap, over);
    if (over) throw CapacityError(state_cap);

    std::unordered_map<Path, int, PathHash> index;
    index.reserve(sg.states.size());
    for (std::size_t i = 0; i < sg.states.size(); ++i)
        index.emplace(sg.states[i], static_cast<int>(i));

    for (std::size_t i = 0; i < sg.states.size(); ++i) {
        for (const Path& q : successors(g, sg.states[i])) {
            auto it = index.find(q);
            if (it == index.end()) throw InternalError("successor outside state set");
            int j = it->second;
            if (static_cast<int>(i) < j) sg.moves.emplace_back(static_cast<int>(i), j);
        }
    }
    std::sort(sg.moves.begin(), sg.moves.end());
    sg.moves.erase(std::unique(sg.moves.begin(), sg.moves.end()), sg.moves.end());
    return sg;
}

SearchResult bfs_solve(const Instance& inst, const SearchOptions& opts) {
    if (inst.start.length() != inst.goal.length())
        throw ValidationError("start and goal lengths differ");
    const Path& goal = inst.goal;
    bool witness = opts.mode == SearchMode::Optimize;
    auto res = bfs_core(
        inst.graph, inst.start, [&](const Path& p) { return p == goal; }, {}, opts,
        witness, "bfs");
    return res;
}

SearchResult goal_predicate_bfs(const Graph& g, const Path& start,
                                const std::function<bool(const Path&)>& pred,
                                const std::vector<Vertex>& scope,
                                const SearchOptions& opts) {
    std::vector<char> mask;
    if (!scope.empty()) {
        mask.assign(g.vertex_count(), 0);
        for (Vertex v : scope) {
            if (v < 0 || v >= g.vertex_count())
                throw ValidationError("scope vertex out of range");
            mask[v] = 1;
        }
    }
    return bfs_core(g, start, pred, mask, opts, true, "bfs-pred");
}

std::string export_dot(const StateGraph& sg) {
    std::ostringstream out;
    out << "graph statespace {\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < sg.states.size(); ++i) {
        out << "  s" << i << " [label=\"";
        const auto& vs = sg.states[i].vertices();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j) out << "-";
            out << vs[j];
        }
        out << "\"];\n";
    }
    for (auto [i, j] : sg.moves) out << "  s" << i << " -- s" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace prc
