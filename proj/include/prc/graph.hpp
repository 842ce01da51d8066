#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "prc/errors.hpp"

namespace prc {

using Vertex = int;

// Unordered vertex pair, stored with a <= b.
struct Edge {
    Vertex a;
    Vertex b;

    Edge() : a(0), b(0) {}
    Edge(Vertex u, Vertex v) : a(std::min(u, v)), b(std::max(u, v)) {}

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;

    bool touches(Vertex v) const { return a == v || b == v; }
    // The endpoint that is not v; v must be an endpoint.
    Vertex other(Vertex v) const { return a == v ? b : a; }
};

// Immutable undirected simple graph on vertices 0..n-1.
// Parallel edges collapse at construction; self-loops are rejected.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
    bool has_edge(Vertex u, Vertex v) const;
    bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

    bool is_complete() const {
        return static_cast<long long>(edge_count()) * 2 ==
               static_cast<long long>(n_) * (n_ - 1);
    }

    // Component id per vertex; ids are dense, assigned in ascending root order.
    std::vector<int> component_ids() const;
    int component_count() const;

    // Vertices of the component containing v, ascending.
    std::vector<Vertex> component_of(Vertex v) const;

    bool is_forest() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;              // sorted, unique
    std::vector<std::vector<Vertex>> adj_; // sorted per vertex
};

// Induced subgraph on `keep` (need not be sorted; duplicates rejected).
// New vertex i corresponds to old vertex orig_of[i]; orig_of is ascending.
struct SubgraphMap {
    Graph graph;
    std::vector<Vertex> orig_of;          // new id -> old id
    std::vector<Vertex> new_of;           // old id -> new id, -1 if dropped

    Vertex to_new(Vertex old) const { return new_of[old]; }
    Vertex to_old(Vertex nu) const { return orig_of[nu]; }
};

SubgraphMap induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace prc
