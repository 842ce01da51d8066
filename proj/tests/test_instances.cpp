#include <doctest.h>

#include "prc/bounds.hpp"
#include "prc/generators.hpp"
#include "prc/instance.hpp"
#include "prc/state_space.hpp"
#include "test_support.hpp"

using namespace prc;
using namespace prc::testing;

namespace {

// Structural identity modulo the label mapping.
bool same_instance(const Instance& a, const Instance& b) {
    if (a.graph.vertex_count() != b.graph.vertex_count()) return false;
    std::vector<Vertex> a2b(a.graph.vertex_count(), -1);
    for (int v = 0; v < a.graph.vertex_count(); ++v) {
        int hit = -1;
        for (int w = 0; w < b.graph.vertex_count(); ++w)
            if (b.labels[w] == a.labels[v]) hit = w;
        if (hit == -1) return false;
        a2b[v] = hit;
    }
    auto map_edges = [&](const Graph& g) {
        std::vector<Edge> out;
        for (const Edge& e : g.edges()) out.emplace_back(a2b[e.a], a2b[e.b]);
        std::sort(out.begin(), out.end());
        return out;
    };
    if (map_edges(a.graph) != b.graph.edges()) return false;
    auto map_path = [&](const Path& p) {
        std::vector<Vertex> s;
        for (Vertex v : p.vertices()) s.push_back(a2b[v]);
        return Path::canonical(std::move(s));
    };
    return map_path(a.start) == b.start && map_path(a.goal) == b.goal;
}

}  // namespace

TEST_CASE("parse minimal instance") {
    auto inst = parse_instance("p pathreconfig 2 1 1\ne 0 1\ns 0 1\nt 0 1\n");
    CHECK(inst.k() == 1);
    CHECK(inst.graph.vertex_count() == 2);
    CHECK(inst.start == inst.goal);
}

TEST_CASE("parse arbitrary labels and comments") {
    std::string text =
        "# a comment\n"
        "p pathreconfig 3 2 1\n"
        "e alpha beta\n"
        "# mid comment\n"
        "e beta gamma\n"
        "s alpha beta\n"
        "t beta gamma\n";
    auto inst = parse_instance(text);
    CHECK(inst.graph.vertex_count() == 3);
    CHECK(inst.label(0) == "alpha");
    auto again = parse_instance(serialize_instance(inst));
    CHECK(same_instance(inst, again));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_instance("p pathreconfig 2 1 1\nq 0 1\ns 0 1\nt 0 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_instance("e 0 1\n"), ParseError);           // before header
    CHECK_THROWS_AS(parse_instance("p pathreconfig 2 1 1\ne 0 1\ns 0\nt 0 1\n"),
                    ParseError);                                      // short path
    CHECK_THROWS_AS(parse_instance("p bad 2 1 1\n"), ParseError);
}

TEST_CASE("validation errors") {
    // repeated vertex on the start path
    CHECK_THROWS_AS(
        parse_instance("p pathreconfig 3 3 2\ne 0 1\ne 1 2\ne 2 0\ns 0 1 0\nt 0 1 2\n"),
        ValidationError);
    // start not a path of the graph
    CHECK_THROWS_AS(
        parse_instance("p pathreconfig 3 1 1\ne 0 1\ns 1 2\nt 0 1\n"),
        ValidationError);
    // edge count mismatch
    CHECK_THROWS_AS(parse_instance("p pathreconfig 2 2 1\ne 0 1\ns 0 1\nt 0 1\n"),
                    ValidationError);
    // k = 0 rejected
    CHECK_THROWS_AS(parse_instance("p pathreconfig 2 1 0\ne 0 1\ns 0\nt 0\n"),
                    ParseError);
}

TEST_CASE("numeric labels may leave vertices isolated") {
    auto inst = parse_instance("p pathreconfig 5 1 1\ne 0 1\ns 0 1\nt 0 1\n");
    CHECK(inst.graph.vertex_count() == 5);
    CHECK(inst.graph.degree(3) == 0);
    // non-numeric labels cannot name unreferenced vertices
    CHECK_THROWS_AS(parse_instance("p pathreconfig 3 1 1\ne a b\ns a b\nt a b\n"),
                    ValidationError);
}

TEST_CASE("repeated edge lines collapse") {
    auto inst = parse_instance("p pathreconfig 3 3 1\ne 0 1\ne 1 0\ne 1 2\ns 0 1\nt 1 2\n");
    CHECK(inst.graph.edge_count() == 2);
}

TEST_CASE("serialize is stable for numeric ids") {
    auto inst = default_instance(gen_cycle(6), 2);
    auto text = serialize_instance(inst);
    CHECK(serialize_instance(parse_instance(text)) == text);
}

TEST_CASE("round-trip over generated corpus") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(3 + rng() % 5, rng);
        int k = 1 + rng() % 2;
        auto paths = enumerate_paths(g, k);
        if (paths.empty()) continue;
        auto inst = make_inst(g, std::vector<Vertex>(paths.front().vertices()),
                              std::vector<Vertex>(paths.back().vertices()));
        auto again = parse_instance(serialize_instance(inst));
        CHECK(same_instance(inst, again));
        CHECK(serialize_instance(again) == serialize_instance(inst));
    }
}

TEST_CASE("generators basic shapes") {
    CHECK(gen_cycle(6).vertex_count() == 6);
    CHECK(gen_cycle(6).edge_count() == 6);
    CHECK(circuit_rank(gen_cycle(6)) == 1);
    CHECK(gen_star(5).degree(0) == 4);
    CHECK(gen_grid(3, 2).edge_count() == 7);
    CHECK(gen_complete(5).is_complete());
    CHECK_THROWS_AS(gen_cycle(2), GenerationError);
    CHECK_THROWS_AS(gen_grid(0, 3), GenerationError);
}

TEST_CASE("gen_random_fixed_cr hits the requested rank") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (int r = 0; r <= 3; ++r) {
            Graph g = gen_random_fixed_cr(8, r, seed);
            CHECK(g.component_count() == 1);
            CHECK(circuit_rank(g) == r);
        }
    }
    CHECK_THROWS_AS(gen_random_fixed_cr(3, 10, 1), GenerationError);
}

TEST_CASE("generators are reproducible") {
    auto a = gen_random_fixed_cr(9, 2, 42);
    auto b = gen_random_fixed_cr(9, 2, 42);
    CHECK(a.edges() == b.edges());
    auto ia = gen_duplicate_flap_instance(2, 5, 2, 7);
    auto ib = gen_duplicate_flap_instance(2, 5, 2, 7);
    CHECK(serialize_instance(ia) == serialize_instance(ib));
}

TEST_CASE("gen_duplicate_flap attaches equivalent branches") {
    Graph base = gen_path(5);
    Graph g = gen_duplicate_flap(base, 2, 3, 4);
    CHECK(g.vertex_count() == 5 + 12);
    CHECK(g.degree(2) == 2 + 4);
    auto inst = gen_duplicate_flap_instance(2, 6, 2, 1);
    CHECK(inst.k() == 2);
    CHECK(inst.graph.degree(3) >= 6);  // anchor of a k=2 instance is vertex 3
}

TEST_CASE("parser survives random mutations") {
    std::mt19937_64 rng(149);
    auto base = serialize_instance(default_instance(gen_cycle(7), 2));
    int parsed = 0, rejected = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::string text = base;
        int edits = 1 + rng() % 4;
        for (int e = 0; e < edits; ++e) {
            std::size_t pos = rng() % text.size();
            switch (rng() % 4) {
                case 0: text[pos] = static_cast<char>(32 + rng() % 95); break;
                case 1: text.erase(pos, 1); break;
                case 2: text.insert(pos, 1, static_cast<char>(32 + rng() % 95)); break;
                case 3: text.insert(pos, "\n"); break;
            }
        }
        try {
            auto inst = parse_instance(text);
            // whatever parsed must satisfy the instance invariants
            CHECK(inst.k() >= 1);
            CHECK(is_simple_path(inst.graph, inst.start.vertices()));
            CHECK(is_simple_path(inst.graph, inst.goal.vertices()));
            ++parsed;
        } catch (const SolverError&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 500);
    CHECK(rejected > 100);
}

TEST_CASE("default_instance picks first and last canonical paths") {
    auto inst = default_instance(gen_path(5), 2);
    CHECK(inst.start == Path({0, 1, 2}));
    CHECK(inst.goal == Path({2, 3, 4}));
    CHECK_THROWS_AS(default_instance(gen_path(2), 3), GenerationError);
}
