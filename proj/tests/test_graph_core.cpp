#include <doctest.h>

#include <random>

#include "prc/generators.hpp"
#include "prc/moves.hpp"
#include "prc/path.hpp"
#include "test_support.hpp"

using namespace prc;
using namespace prc::testing;

namespace {

Path pth(std::vector<Vertex> v) { return Path(std::move(v)); }

}  // namespace

TEST_CASE("graph construction and invariants") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 2}});  // parallel edge collapses
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    int degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ValidationError);
}

TEST_CASE("components and induced subgraphs") {
    Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(g.component_count() == 3);
    CHECK(g.component_of(0) == std::vector<Vertex>{0, 1, 2});
    CHECK(g.is_forest());

    auto sub = induced_subgraph(g, std::vector<Vertex>{1, 2, 4, 3});
    CHECK(sub.graph.vertex_count() == 4);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.to_old(sub.to_new(4)) == 4);
}

TEST_CASE("canonicalize") {
    Graph p4 = gen_path(4);
    CHECK(canonicalize(p4, {2, 1, 0}) == pth({0, 1, 2}));
    CHECK(canonicalize(p4, {0, 1, 2}) == pth({0, 1, 2}));

    // (1,0,2) stays put when its reversal (2,0,1) is larger.
    Graph star = gen_star(4);
    CHECK(canonicalize(star, {1, 0, 2}) == pth({1, 0, 2}));

    CHECK_THROWS_AS(canonicalize(p4, {0, 2}), InvalidPathError);       // not adjacent
    CHECK_THROWS_AS(canonicalize(p4, {0, 1, 0}), InvalidPathError);    // repeat
    CHECK_THROWS_AS(canonicalize(p4, {3}), InvalidPathError);          // too short
}

TEST_CASE("canonicalize is idempotent and reversal-invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_connected_graph(3 + rng() % 5, rng);
        for (const Path& p : enumerate_paths(g, 1 + rng() % 2)) {
            auto c1 = Path::canonical(std::vector<Vertex>(p.vertices()));
            auto c2 = Path::canonical(std::vector<Vertex>(p.reversed().vertices()));
            CHECK(c1 == c2);
            CHECK(Path::canonical(std::vector<Vertex>(c1.vertices())) == c1);
        }
    }
}

TEST_CASE("apply_step slides") {
    Graph p4 = gen_path(4);
    Path p = pth({0, 1, 2});
    auto q = apply_step(p4, p, {Edge(2, 3), Edge(0, 1)});
    CHECK(q == pth({1, 2, 3}));

    Graph tri = gen_cycle(3);
    CHECK(apply_step(tri, pth({0, 1}), {Edge(1, 2), Edge(0, 1)}) == pth({1, 2}));
}

TEST_CASE("apply_step rotation around a cycle is a legal slide") {
    // Adding {2,0} at the far end while dropping {0,1} rotates the path on a
    // triangle; the result (1,2,0) is simple. This is exactly the move that
    // makes Hamiltonian paths on complete graphs reach their cyclic shifts.
    Graph tri = gen_cycle(3);
    auto q = apply_step(tri, pth({0, 1, 2}), {Edge(2, 0), Edge(0, 1)});
    CHECK(q == Path::canonical({1, 2, 0}));
    // And the definition-transcription oracle agrees.
    auto succs = successor_oracle(tri, pth({0, 1, 2}));
    CHECK(std::find(succs.begin(), succs.end(), q) != succs.end());
}

TEST_CASE("apply_step error paths") {
    Graph p5 = gen_path(5);
    Path p = pth({1, 2, 3});
    // add not incident to the far end (removing {1,2} exposes far end 3)
    CHECK_THROWS_AS(apply_step(p5, p, {Edge(0, 1), Edge(1, 2)}), IllegalStepError);
    // add edge absent from the graph
    CHECK_THROWS_AS(apply_step(p5, p, {Edge(1, 3), Edge(1, 2)}), IllegalStepError);
    CHECK_THROWS_AS(apply_step(p5, p, {Edge(1, 2), Edge(1, 2)}), IllegalStepError);
    // removing a non-end edge
    Graph p6 = gen_path(6);
    CHECK_THROWS_AS(apply_step(p6, pth({0, 1, 2, 3}), {Edge(3, 4), Edge(1, 2)}),
                    IllegalStepError);
    // new vertex already on the path
    Graph c4 = gen_cycle(4);
    CHECK_THROWS_AS(apply_step(c4, pth({0, 1, 2}), {Edge(1, 2), Edge(0, 1)}),
                    IllegalStepError);
}

TEST_CASE("legal_moves on line graphs") {
    Graph p5 = gen_path(5);
    auto moves = legal_moves(p5, pth({1, 2, 3}));
    REQUIRE(moves.size() == 2);
    CHECK(moves[0].successor == pth({0, 1, 2}));
    CHECK(moves[1].successor == pth({2, 3, 4}));

    Graph p3 = gen_path(3);
    CHECK(legal_moves(p3, pth({0, 1, 2})).empty());
}

TEST_CASE("legal_moves on the star matches the definition oracle") {
    // (1,0,2) on K_{1,3} has no legal move: every extension would need a free
    // neighbor at an end, and the leaves only see the occupied center.
    Graph star = gen_star(4);
    auto succ = successors(star, pth({1, 0, 2}));
    auto oracle = successor_oracle(star, pth({1, 0, 2}));
    CHECK(succ == oracle);
    CHECK(succ.empty());
}

TEST_CASE("legal_moves equals the definition oracle everywhere small") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            for (int k = 1; k <= 3 && k < n; ++k) {
                for (const Path& p : enumerate_paths(g, k)) {
                    auto mv = legal_moves(g, p);
                    std::vector<Path> succ;
                    for (auto& m : mv) {
                        CHECK(apply_step(g, p, m.step) == m.successor);
                        CHECK(m.successor.length() == k);
                        succ.push_back(m.successor);
                    }
                    CHECK(succ == successor_oracle(g, p));
                    // exactly once
                    for (std::size_t i = 0; i + 1 < succ.size(); ++i)
                        CHECK(succ[i] < succ[i + 1]);
                }
            }
        }
    }
}

TEST_CASE("move symmetry via time reversal") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_connected_graph(4 + rng() % 4, rng);
        auto paths = enumerate_paths(g, 1 + rng() % 3);
        if (paths.empty()) continue;
        const Path& p = paths[rng() % paths.size()];
        for (auto& m : legal_moves(g, p)) {
            CHECK(apply_step(g, m.successor, m.step.reversed()) == p);
            auto back = successors(g, m.successor);
            CHECK(std::find(back.begin(), back.end(), p) != back.end());
        }
    }
}

TEST_CASE("reverse_sequence") {
    ReconfigStep ab{Edge(0, 1), Edge(2, 3)};
    ReconfigStep cd{Edge(4, 5), Edge(6, 7)};
    CHECK(reverse_sequence({}).empty());
    CHECK(reverse_sequence({ab}) == ReconfigSequence{ab.reversed()});
    CHECK(reverse_sequence({ab, cd}) == ReconfigSequence{cd.reversed(), ab.reversed()});
    CHECK(reverse_sequence(reverse_sequence({ab, cd})) == ReconfigSequence{ab, cd});
}

TEST_CASE("replay basics") {
    Graph p4 = gen_path(4);
    Path p = pth({0, 1, 2});
    CHECK(replay(p4, p, {}) == p);
    CHECK(replay(p4, p, {{Edge(2, 3), Edge(0, 1)}}) == pth({1, 2, 3}));

    try {
        replay(p4, p, {{Edge(2, 3), Edge(0, 1)}, {Edge(2, 3), Edge(0, 1)}});
        FAIL("expected ReplayError");
    } catch (const ReplayError& e) {
        CHECK(e.step_index == 1);
    }
}

TEST_CASE("replay of reversed random walks returns to the origin") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_connected_graph(4 + rng() % 4, rng);
        auto paths = enumerate_paths(g, 1 + rng() % 3);
        if (paths.empty()) continue;
        Path p = paths[rng() % paths.size()];
        ReconfigSequence walk;
        Path cur = p;
        for (int step = 0; step < 12; ++step) {
            auto mv = legal_moves(g, cur);
            if (mv.empty()) break;
            auto& m = mv[rng() % mv.size()];
            walk.push_back(m.step);
            cur = m.successor;
        }
        Path q = replay(g, p, walk);
        CHECK(q == cur);
        CHECK(replay(g, q, reverse_sequence(walk)) == p);
    }
}
