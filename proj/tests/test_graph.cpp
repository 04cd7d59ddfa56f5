#include "homlab/errors.hpp"
#include "homlab/graph.hpp"
#include "homlab/graph_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace homlab;

namespace {

std::vector<Edge> edges_of(std::initializer_list<Edge> e)
{
    return e;
}

} // namespace

TEST_SUITE("graph")
{
    TEST_CASE("make_graph symmetrizes and deduplicates")
    {
        const auto square = make_graph(4, edges_of({{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
        CHECK(square == cycle_graph(4));
        CHECK(make_graph(1, {}).vertex_count() == 1);
        const auto g = make_graph(3, edges_of({{0, 1}, {1, 0}, {0, 1}}));
        CHECK(g.edge_count() == 1);
        CHECK(g.adjacent(1, 0));
        CHECK(g.degree(2) == 0);
        CHECK_THROWS_AS(make_graph(2, edges_of({{0, 2}})), std::invalid_argument);
        CHECK_THROWS_AS(make_graph(2, edges_of({{1, 1}})), std::invalid_argument);
    }

    TEST_CASE("generators")
    {
        const auto q3 = hypercube_graph(3);
        CHECK(q3.vertex_count() == 8);
        CHECK(q3.edge_count() == 12);

        const auto ce = counterexample_graph();
        CHECK(ce.vertex_count() == 10);
        CHECK(ce.edge_count() == 16);
        const std::vector<std::size_t> degrees = {4, 3, 3, 3, 3, 3, 3, 3, 3, 4};
        for (Vertex v = 0; v < 10; ++v)
            CHECK(ce.degree(v) == degrees[v]);
        CHECK(ce.adjacent(0, 1));
        CHECK(ce.adjacent(8, 9));
        CHECK_FALSE(ce.adjacent(0, 9));

        CHECK(girth(cycle_graph(5)) == 5);
        CHECK_THROWS(cycle_graph(2));
        CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
        CHECK(path_graph(1).edge_count() == 0);
    }

    TEST_CASE("products")
    {
        const auto k2 = complete_graph(2);
        CHECK(product(ProductKind::box, k2, k2) == make_graph(4, edges_of({{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
        CHECK(product(ProductKind::strong, k2, k2) == complete_graph(4));
        const auto lex = product(ProductKind::lexicographic, k2, edgeless_graph(2));
        CHECK(lex == complete_bipartite_graph(2, 2).renamed(""));
        CHECK(lex.edge_count() == 4);
        CHECK_FALSE(lex.adjacent(0, 1));

        Graph g = make_graph(1, {});
        for (std::size_t n = 1; n <= 4; ++n) {
            g = product(ProductKind::box, g, k2);
            CHECK(g == hypercube_graph(n));
        }
    }

    TEST_CASE("joins, sums, cones and suspensions")
    {
        const auto k1 = complete_graph(1);
        CHECK(join(k1, k1) == complete_graph(2));
        const auto two = disjoint_sum(cycle_graph(5), cycle_graph(5));
        CHECK(two.vertex_count() == 10);
        CHECK(two.edge_count() == 10);
        CHECK(component_count(two) == 2);
        // parts {4, 5} and {0..3}
        const auto s = suspension(edgeless_graph(4));
        CHECK(s.edge_count() == 8);
        CHECK_FALSE(s.adjacent(4, 5));
        for (Vertex v = 0; v < 4; ++v)
            CHECK((s.adjacent(v, 4) && s.adjacent(v, 5)));
        const auto j = join(cycle_graph(4), path_graph(3));
        CHECK(j.vertex_count() == 7);
        CHECK(j.edge_count() == 4 + 2 + 12);
        CHECK(cone(cycle_graph(5)).degree(5) == 5);
    }

    TEST_CASE("homomorphisms")
    {
        const auto z5 = cycle_graph(5);
        CHECK(is_graph_hom(z5, z5, std::vector<Vertex>{0, 1, 2, 3, 4}));
        CHECK(is_graph_hom(z5, complete_graph(1), std::vector<Vertex>(5, 0)));
        CHECK(is_graph_hom(z5, z5, std::vector<Vertex>{1, 2, 3, 4, 0}));
        CHECK_FALSE(is_graph_hom(z5, z5, std::vector<Vertex>{0, 2, 2, 3, 4}));
        CHECK_THROWS_AS(is_graph_hom(z5, z5, std::vector<Vertex>{0, 1}), std::invalid_argument);

        // a rotation followed by a 3-colouring
        const std::vector<Vertex> f = {1, 2, 3, 4, 0}, colour = {0, 1, 0, 1, 2};
        const auto k3 = complete_graph(3);
        CHECK(is_graph_hom(z5, k3, colour));
        std::vector<Vertex> composite(5);
        for (Vertex v = 0; v < 5; ++v)
            composite[v] = colour[f[v]];
        CHECK(is_graph_hom(z5, k3, composite));
    }

    TEST_CASE("chordality")
    {
        const auto tree = make_graph(6, edges_of({{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}}));
        const auto order = is_chordal(tree);
        REQUIRE(order);
        CHECK(is_perfect_elimination_ordering(tree, *order));
        CHECK_FALSE(is_chordal(cycle_graph(4)));
        CHECK(is_chordal(complete_graph(5)));
        CHECK_FALSE(is_chordal(counterexample_graph()));

        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = oracle::random_graph(rng, 7, 0.5);
            if (const auto o = is_chordal(g))
                CHECK(is_perfect_elimination_ordering(g, *o));
        }
    }

    TEST_CASE("girth")
    {
        CHECK(girth(cycle_graph(5)) == 5);
        CHECK_FALSE(girth(path_graph(6)));
        CHECK(girth(counterexample_graph()) == 4);
        CHECK(girth(complete_graph(4)) == 3);
    }

    TEST_CASE("induced subgraphs")
    {
        const auto g = induced_subgraph(cycle_graph(5), std::vector<Vertex>{4, 0, 1});
        CHECK(g == path_graph(3));
    }
}

TEST_SUITE("graph-io")
{
    TEST_CASE("json round trip")
    {
        const auto g = counterexample_graph();
        const auto back = graph_from_json(graph_to_json(g));
        CHECK(back == g);
        CHECK(back.name() == g.name());
    }

    TEST_CASE("edge list round trip")
    {
        const auto g = hypercube_graph(3);
        std::stringstream s;
        write_edge_list(s, g);
        CHECK(graph_from_edge_list(s) == g);
        CHECK(parse_graph("p 3\n0 1\n# comment\n1 2\n") == path_graph(3));
    }

    TEST_CASE("malformed input")
    {
        CHECK_THROWS_AS(parse_graph("{\"vertices\": 2, \"edges\": [[0, 5]]}"), ParseError);
        CHECK_THROWS_AS(parse_graph("{\"vertices\": -1}"), ParseError);
        CHECK_THROWS_AS(parse_graph("{ nope"), ParseError);
        CHECK_THROWS_AS(parse_graph("0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("p 2\n0 x\n"), ParseError);
        CHECK_THROWS_AS(graph_from_generator("cycle:2"), ParseError);
        CHECK_THROWS_AS(graph_from_generator("wheel:5"), ParseError);
    }

    TEST_CASE("generator specs")
    {
        CHECK(graph_from_generator("cycle:5") == cycle_graph(5));
        CHECK(graph_from_generator("bipartite:2,3") == complete_bipartite_graph(2, 3));
        CHECK(graph_from_generator("counterexample10") == counterexample_graph());
    }
}
