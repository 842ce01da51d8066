#include "prc/instance.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "prc/errors.hpp"

namespace prc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

bool parse_int(const std::string& s, long long& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

struct LabelMap {
    std::unordered_map<std::string, Vertex> to_id;
    std::vector<std::string> names;  // insertion order
    bool all_numeric = true;
    long long numeric_max = -1;

    Vertex intern(const std::string& tok) {
        auto it = to_id.find(tok);
        if (it != to_id.end()) return it->second;
        Vertex id = static_cast<Vertex>(names.size());
        to_id.emplace(tok, id);
        names.push_back(tok);
        long long v;
        if (parse_int(tok, v) && v >= 0)
            numeric_max = std::max(numeric_max, v);
        else
            all_numeric = false;
        return id;
    }
};

}  // namespace

Instance make_instance(Graph g, std::vector<Vertex> start, std::vector<Vertex> goal,
                       std::vector<std::string> labels) {
    if (start.size() < 2)
        throw ValidationError("start path needs at least one edge (k >= 1)");
    if (start.size() != goal.size())
        throw ValidationError("start and goal lengths differ");
    if (labels.empty()) {
        labels.reserve(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != g.vertex_count())
        throw ValidationError("label count does not match vertex count");

    Instance inst;
    inst.start = canonicalize(g, std::move(start));
    inst.goal = canonicalize(g, std::move(goal));
    inst.graph = std::move(g);
    inst.labels = std::move(labels);
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    long long n = -1, m = -1, k = -1;
    bool have_header = false;
    LabelMap lm;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> start_seq, goal_seq;
    bool have_start = false, have_goal = false;
    int start_line = 0, goal_line = 0;

    auto read_path = [&](const std::vector<std::string>& toks) {
        std::vector<Vertex> seq;
        for (std::size_t i = 1; i < toks.size(); ++i) seq.push_back(lm.intern(toks[i]));
        return seq;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& tag = toks[0];
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 5 || toks[1] != "pathreconfig")
                throw ParseError(lineno, "expected 'p pathreconfig <n> <m> <k>'");
            if (!parse_int(toks[2], n) || !parse_int(toks[3], m) ||
                !parse_int(toks[4], k) || n < 0 || m < 0 || k < 1)
                throw ParseError(lineno, "bad header numbers");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
            Vertex u = lm.intern(toks[1]);
            Vertex v = lm.intern(toks[2]);
            edges.emplace_back(u, v);
        } else if (tag == "s") {
            if (!have_header) throw ParseError(lineno, "start path before header");
            if (have_start) throw ParseError(lineno, "duplicate start path");
            if (static_cast<long long>(toks.size()) != k + 2)
                throw ParseError(lineno, "start path must list k+1 vertices");
            start_seq = read_path(toks);
            have_start = true;
            start_line = lineno;
        } else if (tag == "t") {
            if (!have_header) throw ParseError(lineno, "goal path before header");
            if (have_goal) throw ParseError(lineno, "duplicate goal path");
            if (static_cast<long long>(toks.size()) != k + 2)
                throw ParseError(lineno, "goal path must list k+1 vertices");
            goal_seq = read_path(toks);
            have_goal = true;
            goal_line = lineno;
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }

    if (!have_header) throw ParseError(lineno ? lineno : 1, "missing header");
    if (!have_start) throw ParseError(lineno, "missing start path (s line)");
    if (!have_goal) throw ParseError(lineno, "missing goal path (t line)");
    if (static_cast<long long>(edges.size()) != m)
        throw ValidationError("header claims " + std::to_string(m) + " edges, file has " +
                              std::to_string(edges.size()));

    // Numeric labels in [0, n) are used verbatim (this is the only way to
    // express isolated vertices); otherwise labels map by first appearance
    // and all n of them must occur.
    std::vector<std::string> labels;
    std::vector<Vertex> remap(lm.names.size());
    if (lm.all_numeric && lm.numeric_max < n) {
        labels.reserve(n);
        for (long long v = 0; v < n; ++v) labels.push_back(std::to_string(v));
        for (std::size_t i = 0; i < lm.names.size(); ++i) {
            long long v;
            parse_int(lm.names[i], v);
            remap[i] = static_cast<Vertex>(v);
        }
    } else {
        if (static_cast<long long>(lm.names.size()) != n)
            throw ValidationError("expected " + std::to_string(n) + " distinct labels, saw " +
                                  std::to_string(lm.names.size()));
        labels = lm.names;
        for (std::size_t i = 0; i < lm.names.size(); ++i)
            remap[i] = static_cast<Vertex>(i);
    }

    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (remap[u] == remap[v])
            throw ValidationError("self-loop on '" + labels[remap[u]] + "'");
        es.emplace_back(remap[u], remap[v]);
    }
    Graph g;
    try {
        g = Graph(static_cast<int>(n), std::move(es));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("bad edge set: ") + e.what());
    }
    for (auto& v : start_seq) v = remap[v];
    for (auto& v : goal_seq) v = remap[v];

    auto check_path = [&](const std::vector<Vertex>& seq, int ln, const char* which) {
        if (!is_simple_path(g, seq)) {
            std::string repr;
            for (Vertex v : seq) repr += (repr.empty() ? "" : " ") + labels[v];
            throw ValidationError(std::string(which) + " path at line " +
                                  std::to_string(ln) + " is not a simple path: " + repr);
        }
    };
    check_path(start_seq, start_line, "start");
    check_path(goal_seq, goal_line, "goal");

    return make_instance(std::move(g), std::move(start_seq), std::move(goal_seq),
                         std::move(labels));
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    const Graph& g = inst.graph;
    out << "p pathreconfig " << g.vertex_count() << ' ' << g.edge_count() << ' '
        << inst.k() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << inst.label(e.a) << ' ' << inst.label(e.b) << '\n';
    out << 's';
    for (Vertex v : inst.start.vertices()) out << ' ' << inst.label(v);
    out << '\n';
    out << 't';
    for (Vertex v : inst.goal.vertices()) out << ' ' << inst.label(v);
    out << '\n';
    return out.str();
}

}  // namespace prc
