#include "prc/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace prc {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

bool forest_after_removal(const Graph& g, const std::vector<char>& removed) {
    // Union-find over the surviving vertices; a cycle shows up as a union of
    // two already-joined endpoints.
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (removed[e.a] || removed[e.b]) continue;
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

}  // namespace

int circuit_rank(const Graph& g) {
    return g.edge_count() - g.vertex_count() + g.component_count();
}

std::uint64_t path_count_bound_cr(int n, int r) {
    if (n < 0 || r < 0) throw ValidationError("bad bound arguments");
    std::uint64_t pairs =
        static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(std::max(0, n - 1)) / 2;
    return sat_mul(sat_pow(2, r), pairs);
}

std::uint64_t path_count_bound_fvs(int n, int phi) {
    if (phi < 0 || n < phi) throw ValidationError("bad bound arguments");
    std::uint64_t fact = 1;
    for (int i = 2; i <= phi; ++i) fact = sat_mul(fact, i);
    std::uint64_t f = static_cast<std::uint64_t>(n - phi);
    std::uint64_t base = f * (f - (f ? 1 : 0)) / 2 + f + 1;
    return sat_mul(sat_mul(fact, sat_pow(2, phi)), sat_pow(base, phi + 1));
}

int min_fvs(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit)
        throw SizeLimitError("min_fvs refuses n=" + std::to_string(n) + " > limit=" +
                             std::to_string(limit));
    std::vector<char> removed(n, 0);
    if (forest_after_removal(g, removed)) return 0;

    std::vector<int> pick;
    auto try_size = [&](auto&& self, int next, int remaining) -> bool {
        if (remaining == 0) return forest_after_removal(g, removed);
        for (int v = next; v <= n - remaining; ++v) {
            removed[v] = 1;
            if (self(self, v + 1, remaining - 1)) return true;
            removed[v] = 0;
        }
        return false;
    };
    for (int s = 1; s <= n; ++s) {
        std::fill(removed.begin(), removed.end(), 0);
        if (try_size(try_size, 0, s)) return s;
    }
    throw InternalError("min_fvs exhausted all subsets");
}

BoundsReport bounds_report(const Graph& g, std::uint64_t enum_cap, int fvs_limit) {
    BoundsReport rep;
    rep.circuit_rank = circuit_rank(g);
    rep.bound_cr = path_count_bound_cr(g.vertex_count(), rep.circuit_rank);
    try {
        rep.fvs_number = min_fvs(g, fvs_limit);
        rep.bound_fvs = path_count_bound_fvs(g.vertex_count(), *rep.fvs_number);
    } catch (const SizeLimitError&) {
        // leave unknown
    }
    std::uint64_t total = 0;
    bool over = false;
    for (int k = 1; k < g.vertex_count() && !over; ++k) {
        auto paths = enumerate_paths_capped(g, k, enum_cap - total);
        if (!paths) {
            over = true;
            break;
        }
        total += paths->size();
    }
    if (!over) rep.actual_path_count = total;
    return rep;
}

std::string BoundsReport::to_kv() const {
    std::ostringstream out;
    out << "circuit_rank=" << circuit_rank << '\n';
    out << "bound_cr=" << bound_cr << '\n';
    out << "fvs_number=" << (fvs_number ? std::to_string(*fvs_number) : "unknown")
        << '\n';
    out << "bound_fvs=" << (bound_fvs ? std::to_string(*bound_fvs) : "unknown") << '\n';
    out << "actual_path_count="
        << (actual_path_count ? std::to_string(*actual_path_count) : "unknown") << '\n';
    return out.str();
}

SearchResult solve_complete_graph(const Instance& inst) {
    const Graph& g = inst.graph;
    if (!g.is_complete())
        throw WrongSolverError("complete-graph rule invoked on a non-complete graph");

    SearchResult res;
    res.stats.engine = "complete-rule";
    const int n = g.vertex_count();
    const int verts = static_cast<int>(inst.start.vertex_count());

    if (verts < n) {
        // Any position is reachable from any other once a spare vertex exists.
        res.reachable = true;
        if (inst.start == inst.goal) {
            res.min_moves = 0;
            res.witness = ReconfigSequence{};
        }
        return res;
    }

    // Hamiltonian paths: reachable iff the goal is a cyclic shift of the
    // start or of its reversal; rotations themselves are the witness.
    std::vector<Vertex> cur(inst.start.vertices());
    ReconfigSequence steps;
    for (int i = 0; i <= inst.k(); ++i) {
        if (Path::canonical(std::vector<Vertex>(cur)) == inst.goal) {
            res.reachable = true;
            res.witness = std::move(steps);
            if (i == 0) res.min_moves = 0;
            return res;
        }
        steps.push_back({Edge(cur.back(), cur.front()), Edge(cur[0], cur[1])});
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    }
    res.reachable = false;
    return res;
}

}  // namespace prc
