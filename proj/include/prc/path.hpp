#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prc/graph.hpp"

namespace prc {

// Simple path as an ordered vertex sequence (k+1 vertices for length k).
// A path and its reversal are the same state; the canonical representative
// is the lexicographically smaller of the two orientations.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<Vertex> seq) : seq_(std::move(seq)) {}

    // Canonical representative of {seq, reverse(seq)}. No graph validation.
    static Path canonical(std::vector<Vertex> seq);

    const std::vector<Vertex>& vertices() const { return seq_; }
    std::size_t vertex_count() const { return seq_.size(); }
    int length() const { return static_cast<int>(seq_.size()) - 1; }

    bool empty() const { return seq_.empty(); }
    Vertex front() const { return seq_.front(); }
    Vertex back() const { return seq_.back(); }
    Vertex operator[](std::size_t i) const { return seq_[i]; }

    bool contains(Vertex v) const;
    Path reversed() const;
    bool is_canonical() const;

    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;

private:
    std::vector<Vertex> seq_;
};

struct PathHash {
    std::size_t operator()(const Path& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Vertex v : p.vertices()) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// True iff seq is a simple path in g (distinct vertices, consecutive adjacency,
// at least two vertices).
bool is_simple_path(const Graph& g, std::span<const Vertex> seq);

// Validates seq against g and returns the canonical Path.
// Throws InvalidPathError on non-simple or non-adjacent sequences.
Path canonicalize(const Graph& g, std::vector<Vertex> seq);

}  // namespace prc
