#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prc/graph.hpp"
#include "prc/path.hpp"

namespace prc {

// One problem instance: slide `start` into `goal` inside `graph`.
// Both paths are stored canonically and have the same length k >= 1.
struct Instance {
    Graph graph;
    Path start;
    Path goal;
    std::vector<std::string> labels;  // per-vertex display labels

    int k() const { return start.length(); }
    const std::string& label(Vertex v) const { return labels[v]; }
};

// Builds a validated instance from dense-id data; labels default to ids.
Instance make_instance(Graph g, std::vector<Vertex> start,
                       std::vector<Vertex> goal,
                       std::vector<std::string> labels = {});

// Line-oriented instance format:
//   p pathreconfig <n> <m> <k>
//   e <u> <v>            (m lines, labels are arbitrary tokens)
//   s <v0> ... <vk>
//   t <v0> ... <vk>
// '#' starts a comment line. Throws ParseError / ValidationError.
Instance parse_instance(const std::string& text);

// Canonical text: header, edges sorted by dense ids, then s and t lines.
// parse(serialize(x)) equals x up to label mapping.
std::string serialize_instance(const Instance& inst);

}  // namespace prc
