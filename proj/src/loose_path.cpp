#include "prc/loose_path.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "prc/errors.hpp"

namespace prc {

namespace {

std::optional<Path> find_path_avoiding_mask(const Graph& g,
                                            const std::vector<char>& blocked,
                                            int len) {
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<Vertex> seq;
    std::optional<Path> found;

    auto dfs = [&](auto&& self, Vertex u) -> bool {
        if (static_cast<int>(seq.size()) == len + 1) {
            found = Path::canonical(seq);
            return true;
        }
        for (Vertex w : g.neighbors(u)) {
            if (blocked[w] || used[w]) continue;
            used[w] = 1;
            seq.push_back(w);
            if (self(self, w)) return true;
            seq.pop_back();
            used[w] = 0;
        }
        return false;
    };

    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (blocked[s]) continue;
        used.assign(g.vertex_count(), 0);
        used[s] = 1;
        seq.assign(1, s);
        if (dfs(dfs, s)) return found;
    }
    return std::nullopt;
}

std::vector<char> block_mask(const Graph& g, const Path& p, const Path& q) {
    std::vector<char> blocked(g.vertex_count(), 0);
    for (Vertex v : p.vertices()) blocked[v] = 1;
    for (Vertex v : q.vertices()) blocked[v] = 1;
    return blocked;
}

int index_on(const Path& route, Vertex v) {
    const auto& seq = route.vertices();
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] == v) return static_cast<int>(i);
    return -1;
}

ReconfigStep slide_step(const Path& route, int k, int lo, int dir) {
    const auto& r = route.vertices();
    if (dir > 0)
        return {Edge(r[lo + k], r[lo + k + 1]), Edge(r[lo], r[lo + 1])};
    return {Edge(r[lo], r[lo - 1]), Edge(r[lo + k - 1], r[lo + k])};
}

}  // namespace

std::optional<Path> find_path_avoiding(const Graph& g,
                                       const std::vector<Vertex>& blocked, int len) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (Vertex v : blocked) {
        if (!g.has_vertex(v)) throw ValidationError("blocked vertex out of range");
        mask[v] = 1;
    }
    return find_path_avoiding_mask(g, mask, len);
}

int window_lo_on_route(const Path& route, const Path& p) {
    const auto& seq = p.vertices();
    std::vector<int> idx;
    for (Vertex v : seq) {
        int i = index_on(route, v);
        if (i == -1) return -1;
        idx.push_back(i);
    }
    bool asc = true, desc = true;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        if (idx[i + 1] != idx[i] + 1) asc = false;
        if (idx[i + 1] != idx[i] - 1) desc = false;
    }
    if (!asc && !desc) return -1;
    return *std::min_element(idx.begin(), idx.end());
}

std::optional<Path> find_loose_path(const Graph& g, const Path& p, const Path& q,
                                    int k) {
    if (p.length() != k || q.length() != k)
        throw ValidationError("start/goal lengths do not match k");
    return find_path_avoiding_mask(g, block_mask(g, p, q), 2 * k);
}

std::optional<Path> find_path_avoiding_color_coding(const Graph& g,
                                                    const std::vector<Vertex>& blocked_list,
                                                    int len, std::uint64_t seed) {
    const int colors = len + 1;
    if (colors > 20) throw ValidationError("path too long for color coding tables");
    std::vector<char> blocked(g.vertex_count(), 0);
    for (Vertex v : blocked_list) {
        if (!g.has_vertex(v)) throw ValidationError("blocked vertex out of range");
        blocked[v] = 1;
    }

    int n = g.vertex_count();
    int free_count = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!blocked[v]) ++free_count;
    if (free_count < colors) return std::nullopt;

    std::mt19937_64 rng(seed);
    const std::uint64_t trials = static_cast<std::uint64_t>(
        std::ceil(std::exp(static_cast<double>(len)) * std::log(std::max(2, n))));
    const std::uint32_t full = (1u << colors) - 1;

    std::vector<int> color(n, -1);
    // dp[mask][v]: predecessor vertex + 1, 0 = unreachable, -1 = path start.
    std::vector<std::vector<int>> dp(full + 1, std::vector<int>(n, 0));

    for (std::uint64_t t = 0; t < trials; ++t) {
        for (Vertex v = 0; v < n; ++v)
            color[v] = blocked[v] ? -1 : static_cast<int>(rng() % colors);
        for (auto& row : dp) std::fill(row.begin(), row.end(), 0);

        for (Vertex v = 0; v < n; ++v)
            if (!blocked[v]) dp[1u << color[v]][v] = -1;

        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            for (Vertex v = 0; v < n; ++v) {
                if (dp[mask][v] == 0) continue;
                if (mask == full) {
                    std::vector<Vertex> seq{v};
                    std::uint32_t m = mask;
                    Vertex cur = v;
                    while (dp[m][cur] != -1) {
                        Vertex prev = dp[m][cur] - 1;
                        m &= ~(1u << color[cur]);
                        cur = prev;
                        seq.push_back(cur);
                    }
                    return Path::canonical(std::move(seq));
                }
                for (Vertex w : g.neighbors(v)) {
                    if (blocked[w]) continue;
                    std::uint32_t bit = 1u << color[w];
                    if (mask & bit) continue;
                    if (dp[mask | bit][w] == 0) dp[mask | bit][w] = v + 1;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Path> find_loose_path_color_coding(const Graph& g, const Path& p,
                                                 const Path& q, int k,
                                                 std::uint64_t seed) {
    std::vector<Vertex> blocked(p.vertices());
    blocked.insert(blocked.end(), q.vertices().begin(), q.vertices().end());
    std::sort(blocked.begin(), blocked.end());
    blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
    return find_path_avoiding_color_coding(g, blocked, 2 * k, seed);
}

ReconfigSequence slide_along_route(const Path& route, int k, int from_lo, int to_lo) {
    const int top = route.length() - k;
    if (from_lo < 0 || from_lo > top || to_lo < 0 || to_lo > top)
        throw ValidationError("window index outside route");
    ReconfigSequence seq;
    int lo = from_lo;
    while (lo < to_lo) {
        seq.push_back(slide_step(route, k, lo, +1));
        ++lo;
    }
    while (lo > to_lo) {
        seq.push_back(slide_step(route, k, lo, -1));
        --lo;
    }
    return seq;
}

OntoRouteResult slide_onto_route(const Graph& g, const Path& route,
                                 const SearchResult& entry) {
    if (!entry.reachable || !entry.witness || !entry.final_state)
        throw ValidationError("invalid certificate: entry search did not succeed");
    const Path& contact = *entry.final_state;
    if (!is_simple_path(g, contact.vertices()) ||
        !is_simple_path(g, route.vertices()))
        throw ValidationError("invalid certificate: paths not valid in graph");
    const int k = contact.length();
    if (route.length() < 2 * k)
        throw ValidationError("invalid certificate: route shorter than 2k");

    // Already fully on the route: nothing to do.
    int lo = window_lo_on_route(route, contact);
    if (lo != -1) return {*entry.witness, lo};

    std::vector<Vertex> on_route;
    for (Vertex v : contact.vertices())
        if (index_on(route, v) != -1) on_route.push_back(v);
    if (on_route.size() != 1)
        throw ValidationError("invalid certificate: contact is not a single vertex");
    Vertex u = on_route.front();
    if (contact.front() != u && contact.back() != u)
        throw ValidationError("invalid certificate: contact vertex is not an endpoint");

    // Orient so the contact vertex is the head, then walk k steps along the
    // route toward the far end.
    std::vector<Vertex> cur(contact.vertices());
    if (cur.front() == u) std::reverse(cur.begin(), cur.end());

    const auto& r = route.vertices();
    int t = index_on(route, u);
    int dir = (route.length() - t >= k) ? +1 : -1;

    ReconfigSequence seq = *entry.witness;
    for (int j = 1; j <= k; ++j) {
        Vertex w = r[t + j * dir];
        seq.push_back({Edge(cur.back(), w), Edge(cur[0], cur[1])});
        cur.erase(cur.begin());
        cur.push_back(w);
    }
    return {std::move(seq), std::min(t, t + k * dir)};
}

ReconfigSequence slide_to_endpoint(const Graph& g, const Path& r,
                                   const SearchResult& entry, Vertex v) {
    int s = index_on(r, v);
    if (s == -1) throw ValidationError("invalid certificate: vertex not on route");
    auto onto = slide_onto_route(g, r, entry);
    const int k = entry.final_state->length();
    int target_lo = (s >= k) ? s - k : s;
    auto tail = slide_along_route(r, k, onto.window_lo, target_lo);
    onto.sequence.insert(onto.sequence.end(), tail.begin(), tail.end());
    return onto.sequence;
}

ReconfigSequence transfer_between_loose_paths(const Graph& g, const Path& current,
                                              const Path& r, const Path& l, int k) {
    if (current.length() != k) throw ValidationError("current path length is not k");
    int lo = window_lo_on_route(r, current);
    if (lo == -1) throw ValidationError("current path does not lie along r");
    if (r == l) return {};

    std::vector<Vertex> shared;
    for (Vertex v : r.vertices())
        if (l.contains(v)) shared.push_back(v);
    std::sort(shared.begin(), shared.end());

    if (!shared.empty()) {
        int s = index_on(r, shared.front());
        int target_lo = (s >= k) ? s - k : s;
        return slide_along_route(r, k, lo, target_lo);
    }

    // Shortest connection from any r vertex; among equally short l targets
    // take the smallest vertex id.
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> par(g.vertex_count(), -1);
    std::deque<Vertex> queue;
    for (Vertex v : r.vertices()) {
        dist[v] = 0;
        queue.push_back(v);
    }
    std::sort(queue.begin(), queue.end());
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] != -1) continue;
            dist[w] = dist[u] + 1;
            par[w] = u;
            queue.push_back(w);
        }
    }
    Vertex hit = -1;
    for (Vertex w : l.vertices())
        if (dist[w] != -1 &&
            (hit == -1 || dist[w] < dist[hit] || (dist[w] == dist[hit] && w < hit)))
            hit = w;
    if (hit == -1) throw SolverError("no-transfer: loose paths in different components");

    std::vector<Vertex> T;  // r endpoint first
    for (Vertex u = hit; u != -1; u = par[u]) T.push_back(u);
    std::reverse(T.begin(), T.end());

    Vertex v = T.front();
    int s = index_on(r, v);
    int target_lo = (s >= k) ? s - k : s;
    ReconfigSequence seq = slide_along_route(r, k, lo, target_lo);

    // Orient the window with v at the head, then advance along T.
    const auto& rv = r.vertices();
    std::vector<Vertex> cur(rv.begin() + target_lo, rv.begin() + target_lo + k + 1);
    if (cur.front() == v) std::reverse(cur.begin(), cur.end());
    for (std::size_t i = 1; i < T.size(); ++i) {
        seq.push_back({Edge(cur.back(), T[i]), Edge(cur[0], cur[1])});
        cur.erase(cur.begin());
        cur.push_back(T[i]);
    }
    return seq;
}

TransferOntoResult transfer_onto(const Graph& g, const Path& current, const Path& r,
                                 const Path& l, int k, const SearchOptions& opts) {
    int lo = window_lo_on_route(r, current);
    if (lo == -1) throw ValidationError("current path does not lie along r");
    if (r == l) return {{}, current};

    bool disjoint = true;
    for (Vertex v : r.vertices())
        if (l.contains(v)) disjoint = false;

    if (disjoint) {
        ReconfigSequence seq = transfer_between_loose_paths(g, current, r, l, k);
        Path touching = replay(g, current, seq);
        // Head is on l; continue k slides along l toward the roomy side.
        std::vector<Vertex> cur(touching.vertices());
        Vertex x = -1;
        for (Vertex v : cur)
            if (l.contains(v)) x = v;
        if (cur.front() == x) std::reverse(cur.begin(), cur.end());
        if (cur.back() != x) throw InternalError("transfer did not end touching l");
        const auto& lv = l.vertices();
        int j = index_on(l, x);
        int dir = (l.length() - j >= k) ? +1 : -1;
        for (int i = 1; i <= k; ++i) {
            Vertex w = lv[j + i * dir];
            seq.push_back({Edge(cur.back(), w), Edge(cur[0], cur[1])});
            cur.erase(cur.begin());
            cur.push_back(w);
        }
        return {std::move(seq), Path::canonical(std::move(cur))};
    }

    // Overlapping routes: search inside V(r) ∪ V(l), then unrestricted as a
    // provably-sufficient fallback (l is reachable once r is). The goal is a
    // contiguous window of l, not just a path over l's vertex set.
    auto window_of_l = [&](const Path& p) { return window_lo_on_route(l, p) != -1; };
    std::vector<Vertex> scope(r.vertices());
    scope.insert(scope.end(), l.vertices().begin(), l.vertices().end());
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());

    SearchResult res = goal_predicate_bfs(g, current, window_of_l, scope, opts);
    if (!res.reachable) res = goal_predicate_bfs(g, current, window_of_l, {}, opts);
    if (!res.reachable)
        throw InternalError("transfer_onto: target loose path unreachable");
    return {*res.witness, *res.final_state};
}

}  // namespace prc
