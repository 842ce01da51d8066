#include "prc/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "prc/state_space.hpp"

namespace prc {

Graph gen_path(int n) {
    if (n < 1) throw GenerationError("path graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph gen_cycle(int n) {
    if (n < 3) throw GenerationError("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph gen_complete(int n) {
    if (n < 1) throw GenerationError("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph gen_star(int n) {
    if (n < 2) throw GenerationError("star needs n >= 2");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, std::move(e));
}

Graph gen_grid(int w, int h) {
    if (w < 1 || h < 1) throw GenerationError("grid needs positive dimensions");
    std::vector<Edge> e;
    auto id = [w](int x, int y) { return y * w + x; };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) e.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < h) e.emplace_back(id(x, y), id(x, y + 1));
        }
    return Graph(w * h, std::move(e));
}

Graph gen_extremal_treedepth(int depth, int branch) {
    return extremal_treedepth_graph(depth, branch).graph;
}

Graph gen_random_fixed_cr(int n, int r, std::uint64_t seed) {
    if (n < 1) throw GenerationError("need n >= 1");
    long long slots = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    if (r < 0 || r > slots)
        throw GenerationError("circuit rank " + std::to_string(r) +
                              " infeasible for n=" + std::to_string(n));
    std::mt19937_64 rng(seed);
    std::set<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.insert(Edge(v, static_cast<Vertex>(rng() % v)));
    int added = 0;
    while (added < r) {
        Vertex a = static_cast<Vertex>(rng() % n);
        Vertex b = static_cast<Vertex>(rng() % n);
        if (a == b) continue;
        if (edges.insert(Edge(a, b)).second) ++added;
    }
    return Graph(n, {edges.begin(), edges.end()});
}

Graph gen_duplicate_flap(const Graph& base, Vertex anchor, int branch_len,
                         int copies) {
    if (!base.has_vertex(anchor)) throw GenerationError("anchor out of range");
    if (branch_len < 1 || copies < 0) throw GenerationError("bad branch parameters");
    std::vector<Edge> e = base.edges();
    int next = base.vertex_count();
    for (int c = 0; c < copies; ++c) {
        e.emplace_back(anchor, next);
        for (int i = 1; i < branch_len; ++i) {
            e.emplace_back(next, next + 1);
            ++next;
        }
        ++next;
    }
    return Graph(next, std::move(e));
}

Instance gen_duplicate_flap_instance(int k, int copies, int branch_len,
                                     std::uint64_t seed) {
    if (k < 1) throw GenerationError("need k >= 1");
    std::mt19937_64 rng(seed);
    const int host = 2 * k + 3;  // start window, anchor vertex, goal window
    Graph base = gen_path(host);
    Vertex anchor = k + 1;
    Graph g = gen_duplicate_flap(base, anchor, branch_len, copies);

    std::vector<Vertex> start, goal;
    for (int i = 0; i <= k; ++i) start.push_back(i);

    if (rng() % 3 == 0) {
        // Unreachable variant: goal on a fresh component.
        std::vector<Edge> e = g.edges();
        int off = g.vertex_count();
        for (int i = 0; i + 1 <= k; ++i) e.emplace_back(off + i, off + i + 1);
        g = Graph(off + k + 1, std::move(e));
        for (int i = 0; i <= k; ++i) goal.push_back(off + i);
    } else {
        for (int i = 0; i <= k; ++i) goal.push_back(k + 2 + i);
    }
    return make_instance(std::move(g), std::move(start), std::move(goal));
}

Instance default_instance(Graph g, int k) {
    auto paths = enumerate_paths(g, k);
    if (paths.empty())
        throw GenerationError("graph has no path of length " + std::to_string(k));
    std::vector<Vertex> start(paths.front().vertices());
    std::vector<Vertex> goal(paths.back().vertices());
    return make_instance(std::move(g), std::move(start), std::move(goal));
}

}  // namespace prc
