#include "prc/treedepth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace prc {

namespace {

std::vector<int> chain_depths(const TreedepthDecomposition& td) {
    std::vector<int> depth(td.parent.size(), -1);
    for (Vertex v : td.scope) {
        if (depth[v] != -1) continue;
        std::vector<Vertex> chain;
        Vertex u = v;
        while (u != -1 && depth[u] == -1) {
            chain.push_back(u);
            u = td.parent[u];
        }
        int base = (u == -1) ? 0 : depth[u] + 1;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            depth[*it] = base++;
        }
    }
    return depth;
}

}  // namespace

std::vector<Vertex> TreedepthDecomposition::ancestors(Vertex v) const {
    std::vector<Vertex> chain;
    Vertex u = v;
    while (u != -1) {
        chain.push_back(u);
        u = parent[u];
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

bool TreedepthDecomposition::is_ancestor(Vertex a, Vertex b) const {
    Vertex u = b;
    while (u != -1) {
        if (u == a) return true;
        u = parent[u];
    }
    return false;
}

std::vector<int> TreedepthDecomposition::heights() const {
    auto depth = chain_depths(*this);
    std::vector<Vertex> order(scope.begin(), scope.end());
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return depth[a] > depth[b]; });
    std::vector<int> height(parent.size(), 0);
    for (Vertex v : order) {
        Vertex p = parent[v];
        if (p != -1) height[p] = std::max(height[p], height[v] + 1);
    }
    return height;
}

int TreedepthDecomposition::computed_depth() const {
    auto depth = chain_depths(*this);
    int d = 0;
    for (Vertex v : scope) d = std::max(d, depth[v]);
    return d;
}

bool TreedepthDecomposition::valid_for(const Graph& g) const {
    for (Vertex v : scope)
        if (!g.has_vertex(v)) return false;
    for (const Edge& e : g.edges()) {
        if (!in_scope(e.a) || !in_scope(e.b)) continue;
        if (!is_ancestor(e.a, e.b) && !is_ancestor(e.b, e.a)) return false;
    }
    return depth == computed_depth();
}

DecompositionOutcome constructive_decomposition(const Graph& g,
                                                const std::vector<Vertex>& avoid,
                                                int k, bool force) {
    if (k < 1) throw ValidationError("path length must be at least 1");
    std::vector<Vertex> chain(avoid);
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    for (Vertex v : chain)
        if (!g.has_vertex(v)) throw ValidationError("avoid vertex out of range");

    std::vector<char> blocked(g.vertex_count(), 0);
    for (Vertex v : chain) blocked[v] = 1;

    TreedepthDecomposition td;
    td.parent.assign(g.vertex_count(), -2);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        td.parent[chain[i]] = i == 0 ? -1 : chain[i - 1];
        td.scope.push_back(chain[i]);
    }
    Vertex forest_hook = chain.empty() ? -1 : chain.back();

    // DFS forest over the unblocked part; a root-to-node chain of 2k edges is
    // a simple path avoiding the blockers, i.e. a loose-path candidate.
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<Vertex> dfs_chain;
    std::optional<Path> loose;

    auto dfs = [&](auto&& self, Vertex u) -> bool {
        visited[u] = 1;
        dfs_chain.push_back(u);
        td.parent[u] = dfs_chain.size() == 1 ? forest_hook : dfs_chain[dfs_chain.size() - 2];
        td.scope.push_back(u);
        if (!force && static_cast<int>(dfs_chain.size()) >= 2 * k + 1) {
            std::vector<Vertex> tail(dfs_chain.end() - (2 * k + 1), dfs_chain.end());
            loose = Path::canonical(std::move(tail));
            return true;
        }
        for (Vertex w : g.neighbors(u)) {
            if (blocked[w] || visited[w]) continue;
            if (self(self, w)) return true;
        }
        dfs_chain.pop_back();
        return false;
    };

    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (blocked[s] || visited[s]) continue;
        dfs_chain.clear();
        if (dfs(dfs, s)) return *loose;
    }

    std::sort(td.scope.begin(), td.scope.end());
    td.depth = td.computed_depth();
    return td;
}

std::vector<Flap> find_flaps(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (Vertex v : s) {
        if (!g.has_vertex(v)) throw ValidationError("separator vertex out of range");
        in_s[v] = 1;
    }
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Flap> out;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        if (in_s[r] || seen[r]) continue;
        std::vector<Vertex> comp, stack{r};
        seen[r] = 1;
        std::set<Vertex> anchor;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (in_s[w]) {
                    anchor.insert(w);
                } else if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(Flap{{anchor.begin(), anchor.end()}, std::move(comp)});
    }
    return out;
}

namespace {

// AHU-style canonical code of the td subtree rooted at r, restricted to
// `member` vertices. Vertex labels are the td depths of adjacent ancestors;
// depths name chain positions injectively and are stable under subtree
// removal, which is what the staged kernelization needs.
std::string subtree_code(const Graph& g, const TreedepthDecomposition& td,
                         const std::vector<int>& depth,
                         const std::vector<std::vector<Vertex>>& children,
                         const std::vector<char>& member, Vertex r) {
    std::string label;
    {
        std::vector<int> anc;
        Vertex u = td.parent[r];
        // Collect ancestor depths adjacent to r (both separator and in-flap
        // ancestors; the latter arise below the flap roots).
        while (u != -1 && u != -2) {
            if (g.has_edge(r, u)) anc.push_back(depth[u]);
            u = td.parent[u];
        }
        std::sort(anc.begin(), anc.end());
        for (int d : anc) label += std::to_string(d) + ".";
    }
    std::vector<std::string> kids;
    for (Vertex c : children[r])
        if (member[c]) kids.push_back(subtree_code(g, td, depth, children, member, c));
    std::sort(kids.begin(), kids.end());
    std::string code = "(" + label + "|";
    for (auto& k : kids) code += k;
    code += ")";
    return code;
}

std::vector<std::vector<Vertex>> child_lists(const TreedepthDecomposition& td) {
    std::vector<std::vector<Vertex>> children(td.parent.size());
    for (Vertex v : td.scope) {
        Vertex p = td.parent[v];
        if (p >= 0) children[p].push_back(v);
    }
    for (auto& c : children) std::sort(c.begin(), c.end());
    return children;
}

}  // namespace

std::vector<FlapClass> flap_classes(const Graph& g, const std::vector<Vertex>& s,
                                    const TreedepthDecomposition& td,
                                    const std::vector<Flap>& flaps) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (Vertex v : s) in_s[v] = 1;
    auto depth = chain_depths(td);
    auto children = child_lists(td);

    std::map<std::string, std::vector<Flap>> groups;
    for (const Flap& f : flaps) {
        std::vector<char> member(g.vertex_count(), 0);
        for (Vertex v : f.members) {
            if (!td.in_scope(v))
                throw InternalError("flap member outside decomposition scope");
            member[v] = 1;
        }
        std::vector<Vertex> roots;
        for (Vertex v : f.members) {
            Vertex p = td.parent[v];
            if (p >= 0 && member[p]) continue;
            if (p >= 0 && !in_s[p])
                throw InternalError("flap subtree does not hang below the separator");
            roots.push_back(v);
        }
        // Complete subtrees only: every in-scope child of a member is a member.
        for (Vertex v : f.members)
            for (Vertex c : children[v])
                if (!member[c])
                    throw InternalError("flap cuts a decomposition subtree");

        std::vector<std::string> codes;
        for (Vertex r : roots)
            codes.push_back(subtree_code(g, td, depth, children, member, r));
        std::sort(codes.begin(), codes.end());
        std::string code;
        for (auto& c : codes) code += c;
        groups[code].push_back(f);
    }

    std::vector<FlapClass> out;
    for (auto& [code, fl] : groups) out.push_back(FlapClass{code, std::move(fl)});
    return out;
}

int flap_retention_count(int k) {
    // A length-k path meets at most ceil((k+1)/2) flaps (its vertices in
    // distinct flaps need separator vertices between them), so keeping one
    // more guarantees a free equivalent flap at every moment of a reroute.
    return (k + 2) / 2 + 1;
}

namespace {

// One bottom-up removal sweep. Returns the vertices to delete (whole flaps).
std::vector<Vertex> kernel_pass(const Graph& g, const TreedepthDecomposition& td,
                                const std::vector<char>& protected_v, int k) {
    auto depth = chain_depths(td);
    auto children = child_lists(td);
    auto height = td.heights();
    int maxh = 0;
    for (Vertex v : td.scope) maxh = std::max(maxh, height[v]);

    std::vector<char> dead(g.vertex_count(), 0);
    std::vector<Vertex> doomed;
    const int retain = flap_retention_count(k);

    std::vector<char> member(g.vertex_count(), 0);

    auto collect_subtree = [&](Vertex r) {
        std::vector<Vertex> out, stack{r};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            if (dead[u]) continue;
            out.push_back(u);
            for (Vertex c : children[u])
                if (!dead[c]) stack.push_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    for (int stage = 1; stage <= maxh; ++stage) {
        for (Vertex v : td.scope) {
            if (dead[v] || height[v] != stage) continue;

            // Sibling subtrees under v are S_v-flaps for the ancestor chain.
            std::map<std::string, std::vector<std::vector<Vertex>>> classes;
            for (Vertex w : children[v]) {
                if (dead[w]) continue;
                auto members = collect_subtree(w);
                for (Vertex m : members) member[m] = 1;
                std::string code =
                    subtree_code(g, td, depth, children, member, w);
                for (Vertex m : members) member[m] = 0;
                classes[code].push_back(std::move(members));
            }

            for (auto& [code, flaps] : classes) {
                int free_kept = 0;
                for (auto& members : flaps) {
                    bool prot = std::any_of(members.begin(), members.end(),
                                            [&](Vertex m) { return protected_v[m]; });
                    if (prot) continue;
                    if (free_kept < retain) {
                        ++free_kept;
                        continue;
                    }
                    for (Vertex m : members) {
                        dead[m] = 1;
                        doomed.push_back(m);
                    }
                }
            }
        }
    }
    std::sort(doomed.begin(), doomed.end());
    return doomed;
}

}  // namespace

KernelResult kernelize(const Instance& inst, const TreedepthDecomposition& td,
                       const std::vector<Vertex>& protect_extra) {
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (!td.in_scope(v))
            throw ValidationError("decomposition does not cover the instance graph");
    if (!td.valid_for(inst.graph))
        throw ValidationError("invalid tree-depth decomposition for this graph");

    KernelResult res;
    res.instance = inst;
    res.orig_of.resize(inst.graph.vertex_count());
    for (int v = 0; v < inst.graph.vertex_count(); ++v) res.orig_of[v] = v;
    res.shrunk = false;

    const int k = inst.k();
    TreedepthDecomposition cur_td = td;

    for (;;) {
        const Graph& g = res.instance.graph;
        std::vector<char> protected_v(g.vertex_count(), 0);
        for (Vertex v : res.instance.start.vertices()) protected_v[v] = 1;
        for (Vertex v : res.instance.goal.vertices()) protected_v[v] = 1;
        for (Vertex v : protect_extra) {
            // protect_extra is expressed in input ids; map into the current kernel.
            for (int nu = 0; nu < g.vertex_count(); ++nu)
                if (res.orig_of[nu] == v) protected_v[nu] = 1;
        }

        auto doomed = kernel_pass(g, cur_td, protected_v, k);
        if (doomed.empty()) break;
        res.shrunk = true;

        std::vector<char> dead(g.vertex_count(), 0);
        for (Vertex v : doomed) dead[v] = 1;
        std::vector<Vertex> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!dead[v]) keep.push_back(v);

        SubgraphMap sub = induced_subgraph(g, keep);
        auto remap_path = [&](const Path& p) {
            std::vector<Vertex> seq;
            for (Vertex v : p.vertices()) seq.push_back(sub.to_new(v));
            return seq;
        };
        std::vector<std::string> labels;
        std::vector<Vertex> orig2;
        for (Vertex nu = 0; nu < sub.graph.vertex_count(); ++nu) {
            labels.push_back(res.instance.labels[sub.to_old(nu)]);
            orig2.push_back(res.orig_of[sub.to_old(nu)]);
        }
        res.instance = make_instance(std::move(sub.graph), remap_path(res.instance.start),
                                     remap_path(res.instance.goal), std::move(labels));
        res.orig_of = std::move(orig2);

        // Re-derive the decomposition for the shrunken instance and go again.
        std::vector<Vertex> avoid(res.instance.start.vertices());
        avoid.insert(avoid.end(), res.instance.goal.vertices().begin(),
                     res.instance.goal.vertices().end());
        auto out = constructive_decomposition(res.instance.graph, avoid, k, true);
        cur_td = std::get<TreedepthDecomposition>(out);
    }
    return res;
}

SearchResult solve_bounded_treedepth(const Instance& inst,
                                     const TreedepthDecomposition& td,
                                     const GoalSpec& goal,
                                     const SearchOptions& opts) {
    std::vector<Vertex> protect;
    if (goal.kind == GoalSpec::Kind::UseVertex) {
        if (!inst.graph.has_vertex(goal.vertex))
            throw ValidationError("goal vertex out of range");
        protect.push_back(goal.vertex);
    } else {
        for (Vertex v : goal.target.vertices()) protect.push_back(v);
    }

    KernelResult kern = kernelize(inst, td, protect);
    const Graph& kg = kern.instance.graph;

    std::vector<Vertex> new_of(inst.graph.vertex_count(), -1);
    for (int nu = 0; nu < kg.vertex_count(); ++nu) new_of[kern.orig_of[nu]] = nu;

    SearchOptions sopts = opts;
    sopts.mode = SearchMode::Optimize;  // witness wanted for lifting

    SearchResult inner;
    if (goal.kind == GoalSpec::Kind::UseVertex) {
        Vertex tv = new_of[goal.vertex];
        if (tv == -1) throw InternalError("protected goal vertex was removed");
        inner = goal_predicate_bfs(
            kg, kern.instance.start,
            [tv](const Path& p) { return p.contains(tv); }, {}, sopts);
    } else {
        std::vector<Vertex> gseq;
        for (Vertex v : goal.target.vertices()) {
            if (new_of[v] == -1) throw InternalError("protected goal vertex was removed");
            gseq.push_back(new_of[v]);
        }
        Instance ki = kern.instance;
        ki.goal = canonicalize(kg, std::move(gseq));
        inner = bfs_solve(ki, sopts);
    }

    SearchResult out;
    out.reachable = inner.reachable;
    out.stats = inner.stats;
    out.stats.engine = "treedepth-kernel";
    if (inner.reachable && inner.witness) {
        ReconfigSequence lifted;
        for (const ReconfigStep& s : *inner.witness) {
            lifted.push_back({Edge(kern.orig_of[s.add.a], kern.orig_of[s.add.b]),
                              Edge(kern.orig_of[s.remove.a], kern.orig_of[s.remove.b])});
        }
        out.witness = std::move(lifted);
        if (inner.final_state) {
            std::vector<Vertex> fs;
            for (Vertex v : inner.final_state->vertices())
                fs.push_back(kern.orig_of[v]);
            out.final_state = Path::canonical(std::move(fs));
        }
        // The kernel is an induced subgraph of the input, so the lifted
        // sequence replays there.
        Path end = replay(inst.graph, inst.start, *out.witness);
        if (out.final_state && !(end == *out.final_state))
            throw InternalError("lifted witness does not replay to the final state");
    }
    return out;
}

ExtremalTreedepthGraph extremal_treedepth_graph(int depth, int branch) {
    if (depth < 1) throw GenerationError("depth must be >= 1");
    if (branch < 2) throw GenerationError("branch must be >= 2");

    // Construction tree: depth-1 is a star root, higher depths join two
    // subtrees under a new root.
    std::vector<Vertex> parent;
    auto build = [&](auto&& self, int d) -> Vertex {
        Vertex root = static_cast<Vertex>(parent.size());
        parent.push_back(-1);
        if (d == 1) {
            for (int i = 0; i < branch; ++i) {
                parent.push_back(root);
            }
            return root;
        }
        Vertex a = self(self, d - 1);
        Vertex b = self(self, d - 1);
        parent[a] = root;
        parent[b] = root;
        return root;
    };
    build(build, depth);

    int n = static_cast<int>(parent.size());
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = parent[v]; u != -1; u = parent[u])
            edges.emplace_back(u, v);

    ExtremalTreedepthGraph out;
    out.graph = Graph(n, std::move(edges));
    out.certificate.parent = parent;
    out.certificate.scope.resize(n);
    for (int v = 0; v < n; ++v) out.certificate.scope[v] = v;
    out.certificate.depth = out.certificate.computed_depth();
    return out;
}

}  // namespace prc
