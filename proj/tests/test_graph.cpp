#include <doctest.h>

#include <cayleynut/graph.hpp>
#include <cayleynut/group.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace cayleynut;

namespace {

// Structural sanity every operation must preserve.
void check_graph_invariants(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        const auto& nbrs = g.neighbors(v);
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
        CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
        for (int u : nbrs) {
            CHECK(u != v);
            CHECK(g.adjacent(u, v));
            CHECK(g.adjacent(v, u));
        }
    }
    int degree_sum = 0;
    for (int v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction rejects loops, duplicates and range errors") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    CHECK_NOTHROW(Graph(0, {}));
}

TEST_CASE("degrees and degree sequence") {
    const Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(0) == 1);
    CHECK(p3.regular_degree() == -1);
    CHECK(p3.degree_sequence() == std::vector<int>{2, 1, 1});
    CHECK(Graph(0, {}).regular_degree() == -1);
    check_graph_invariants(p3);
}

TEST_CASE("cycles and K_2") {
    const Graph c3 = cycle_graph(3);
    CHECK(c3.order() == 3);
    CHECK(c3.regular_degree() == 2);
    const Graph c6 = cycle_graph(6);
    CHECK(c6.order() == 6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.regular_degree() == 2);
    const Graph e = k2();
    CHECK(e.order() == 2);
    CHECK(e.edge_count() == 1);
    CHECK(e.adjacent(0, 1));
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    check_graph_invariants(c6);
}

TEST_CASE("cayley graph of a cyclic group with steps 1 and n-1 is the cycle") {
    for (int n : {3, 5, 8}) {
        const Graph g = cayley_graph(cyclic_group(n), {1, n - 1});
        CHECK(g == cycle_graph(n));
    }
}

TEST_CASE("cayley graph neighborhoods are right-translates of the generator set") {
    const FiniteGroup q = quasidihedral_16();
    std::vector<Element> gens;
    for (const char* w : {"tst", "tsts^2", "t", "s^2 t", "ts", "sts", "ts^2", "sts^2"})
        gens.push_back(qd16_reduce_word(w));
    const GeneratorSet s = make_generator_set(q, gens);
    const Graph g = cayley_graph(q, s);
    CHECK(g.order() == 16);
    CHECK(g.regular_degree() == 8);
    for (int x = 0; x < g.order(); ++x) {
        std::vector<int> expected;
        for (Element a : s.elements) expected.push_back(q.mul(x, a));
        std::sort(expected.begin(), expected.end());
        CHECK(g.neighbors(x) == expected);
    }
    check_graph_invariants(g);
}

TEST_CASE("cayley graph rejects generator sets that break simplicity") {
    const FiniteGroup z6 = cyclic_group(6);
    CHECK_THROWS_AS(cayley_graph(z6, {1, 2}), std::invalid_argument);  // not inverse-closed
    CHECK_THROWS_AS(cayley_graph(z6, {0}), std::invalid_argument);     // identity loop
}

TEST_CASE("cayley graph of Z_6 x Z_2 equals the prism under the product indexing") {
    const FiniteGroup g12 = direct_product(cyclic_group(6), cyclic_group(2));
    // (1,0) -> 2, (5,0) -> 10, (0,1) -> 1 under index a*2+b
    const Graph cayley = cayley_graph(g12, {2, 10, 1});
    const Graph prism = cartesian_product(cycle_graph(6), k2());
    CHECK(cayley == prism);
    CHECK(prism.regular_degree() == 3);
}

TEST_CASE("cartesian product of two edges is a 4-cycle") {
    const Graph sq = cartesian_product(k2(), k2());
    CHECK(sq.order() == 4);
    CHECK(sq.regular_degree() == 2);
    CHECK(sq.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("prism neighbor structure matches the two-layer description") {
    // vertex (j, z) has index 2j + z; layer z = 0 and z = 1 are 6-cycles glued
    // by vertical edges.
    const Graph prism = cartesian_product(cycle_graph(6), k2());
    CHECK(prism.order() == 12);
    for (int j = 0; j < 6; ++j) {
        const int a = 2 * j, b = 2 * j + 1;
        CHECK(prism.adjacent(a, b));
        CHECK(prism.adjacent(b, 2 * ((j + 1) % 6) + 1));
        CHECK(prism.adjacent(b, 2 * ((j + 5) % 6) + 1));
        CHECK(prism.adjacent(a, 2 * ((j + 1) % 6)));
        CHECK(prism.degree(a) == 3);
    }
}

TEST_CASE("complement is an involution and flips regular degree") {
    const Graph prism = cartesian_product(cycle_graph(6), k2());
    const Graph co = complement(prism);
    CHECK(co.regular_degree() == 8);
    CHECK(complement(co) == prism);
    CHECK(complement(complement(cycle_graph(5))) == cycle_graph(5));
    CHECK(complement(cycle_graph(5)).regular_degree() == 2);
    check_graph_invariants(co);
}

TEST_CASE("complement of the empty and complete graphs") {
    const Graph empty3(3, {});
    const Graph k3 = complement(empty3);
    CHECK(k3.edge_count() == 3);
    CHECK(complement(k3).edge_count() == 0);
}

TEST_CASE("connection set degree formula and rendering") {
    CHECK(ConnectionSet{8, {1, 2}}.degree() == 4);
    CHECK(ConnectionSet{6, {3}}.degree() == 1);
    CHECK(ConnectionSet{6, {1, 3}}.degree() == 3);
    CHECK(ConnectionSet{8, {1, 2}}.step_string() == "{1,2}");
    CHECK(ConnectionSet{6, {3}}.step_string() == "{3}");
}

TEST_CASE("connection set validation") {
    CHECK_NOTHROW(validate_connection_set({8, {1, 4}}));
    CHECK_THROWS_AS(validate_connection_set({8, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_connection_set({8, {5}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_connection_set({8, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_connection_set({8, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_connection_set({0, {}}), std::invalid_argument);
}

TEST_CASE("circulant graphs") {
    const Graph c8 = circulant_graph({8, {1, 2}});
    CHECK(c8.order() == 8);
    CHECK(c8.regular_degree() == 4);
    check_graph_invariants(c8);

    const Graph matching = circulant_graph({6, {3}});
    CHECK(matching.regular_degree() == 1);
    CHECK(matching.edge_count() == 3);
    CHECK(matching.adjacent(0, 3));
    CHECK(matching.adjacent(1, 4));
    CHECK(matching.adjacent(2, 5));

    const Graph k5 = circulant_graph({5, {1, 2}});
    CHECK(k5.regular_degree() == 4);
    CHECK(k5.edge_count() == 10);
}

TEST_CASE("circulant equals the cayley graph of the cyclic group") {
    const auto full_steps = [](int n, const std::vector<int>& half) {
        std::set<Element> s;
        for (int step : half) {
            s.insert(step);
            s.insert(n - step);
        }
        return std::vector<Element>(s.begin(), s.end());
    };
    for (const auto& [n, steps] : std::vector<std::pair<int, std::vector<int>>>{
             {8, {1, 2}}, {6, {3}}, {5, {1, 2}}, {12, {2, 3, 6}}, {9, {1, 4}}}) {
        const Graph a = circulant_graph({n, steps});
        const Graph b = cayley_graph(cyclic_group(n), full_steps(n, steps));
        CHECK(a == b);
    }
}

TEST_CASE("equality ignores provenance") {
    const Graph a(3, {{0, 1}}, "left");
    const Graph b(3, {{0, 1}}, "right");
    CHECK(a == b);
    CHECK_FALSE(a == Graph(3, {{0, 2}}));
    CHECK_FALSE(a == Graph(4, {{0, 1}}));
}

TEST_CASE("provenance strings describe the construction") {
    CHECK(circulant_graph({8, {1, 2}}).provenance() == "circulant(n=8, {1,2})");
    const Graph co = complement(cartesian_product(cycle_graph(6), k2()));
    CHECK(co.provenance().find("complement") != std::string::npos);
    CHECK(co.provenance().find("cartesian") != std::string::npos);
}

}  // TEST_SUITE
