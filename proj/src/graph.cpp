#include "prc/graph.hpp"

#include <algorithm>
#include <string>

namespace prc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw ValidationError("negative vertex count");
    for (const Edge& e : edges) {
        if (e.a == e.b)
            throw ValidationError("self-loop at vertex " + std::to_string(e.a));
        if (e.a < 0 || e.b >= n)
            throw ValidationError("edge endpoint out of range: " +
                                  std::to_string(e.a) + "," + std::to_string(e.b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.a].push_back(e.b);
        adj_[e.b].push_back(e.a);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[u]) {
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto ids = component_ids();
    return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

std::vector<Vertex> Graph::component_of(Vertex v) const {
    auto ids = component_ids();
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
        if (ids[u] == ids[v]) out.push_back(u);
    return out;
}

bool Graph::is_forest() const {
    // m = n - c exactly on forests.
    return edge_count() == n_ - component_count();
}

SubgraphMap induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    SubgraphMap out;
    out.new_of.assign(g.vertex_count(), -1);
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("duplicate vertex in induced subgraph selection");
    for (Vertex v : sorted) {
        if (!g.has_vertex(v))
            throw ValidationError("induced subgraph vertex out of range");
        out.new_of[v] = static_cast<Vertex>(out.orig_of.size());
        out.orig_of.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex a = out.new_of[e.a], b = out.new_of[e.b];
        if (a != -1 && b != -1) edges.emplace_back(a, b);
    }
    out.graph = Graph(static_cast<int>(out.orig_of.size()), std::move(edges));
    return out;
}

}  // namespace prc
