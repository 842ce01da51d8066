#include "prc/path.hpp"

#include <algorithm>
#include <string>

namespace prc {

Path Path::canonical(std::vector<Vertex> seq) {
    std::vector<Vertex> rev(seq.rbegin(), seq.rend());
    if (std::lexicographical_compare(rev.begin(), rev.end(), seq.begin(), seq.end()))
        return Path(std::move(rev));
    return Path(std::move(seq));
}

bool Path::contains(Vertex v) const {
    return std::find(seq_.begin(), seq_.end(), v) != seq_.end();
}

Path Path::reversed() const {
    return Path(std::vector<Vertex>(seq_.rbegin(), seq_.rend()));
}

bool Path::is_canonical() const {
    return !std::lexicographical_compare(seq_.rbegin(), seq_.rend(),
                                         seq_.begin(), seq_.end());
}

bool is_simple_path(const Graph& g, std::span<const Vertex> seq) {
    if (seq.size() < 2) return false;
    std::vector<Vertex> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (Vertex v : seq)
        if (!g.has_vertex(v)) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    return true;
}

Path canonicalize(const Graph& g, std::vector<Vertex> seq) {
    if (!is_simple_path(g, seq)) {
        std::string repr;
        for (Vertex v : seq) repr += (repr.empty() ? "" : ",") + std::to_string(v);
        throw InvalidPathError("not a simple path of the host graph: (" + repr + ")");
    }
    return Path::canonical(std::move(seq));
}

}  // namespace prc
