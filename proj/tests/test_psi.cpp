#include "homlab/errors.hpp"
#include "homlab/psi.hpp"
#include "homlab/report.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace homlab;

namespace {

Tuple one_based(std::initializer_list<Vertex> labels)
{
    Tuple t;
    for (Vertex v : labels)
        t.push_back(v - 1);
    return t;
}

TupleChain path_boundary_of(const TupleChain& c)
{
    TupleChain out;
    for (const auto& [t, coef] : c.terms())
        out.add(boundary_tuple(t), coef);
    return out;
}

TupleChain psi_of(const TupleChain& c)
{
    TupleChain out;
    for (const auto& [t, coef] : c.terms())
        out.add(psi_cube(t), coef);
    return out;
}

bool unimodular_onto(const IntMatrix& m, std::size_t rows)
{
    const auto s = snf(m);
    return s.rank == rows && std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const BigInt& d) { return d == 1; });
}

// column with its first nonzero entry made positive
std::vector<long long> normalized_column(const std::vector<std::vector<BigInt>>& a, std::size_t j)
{
    std::vector<long long> col;
    for (const auto& row : a)
        col.push_back(row[j].convert_to<long long>());
    const auto first = std::find_if(col.begin(), col.end(), [](long long x) { return x != 0; });
    if (first != col.end() && *first < 0)
        for (auto& x : col)
            x = -x;
    return col;
}

} // namespace

TEST_SUITE("psi")
{
    TEST_CASE("psi of a square")
    {
        TupleChain expected;
        expected.add(Tuple{0, 1, 3}, 1);
        expected.add(Tuple{0, 2, 3}, -1);
        CHECK(psi_cube(Tuple{0, 1, 2, 3}) == expected);
        CHECK(psi_cube(Tuple{4}) == TupleChain(Tuple{4}));
        CHECK(psi_cube(Tuple{0, 1}) == TupleChain(Tuple{0, 1}));
        CHECK(psi_cube(Tuple{0, 1, 2, 3, 4, 5, 6, 7}).size() == 6);
    }

    TEST_CASE("permutation paths")
    {
        const std::vector<unsigned> perm = {2, 1, 3};
        const auto p = perm_path(3, perm);
        CHECK(p.verts == std::vector<std::size_t>{0, 2, 3, 7});
        CHECK(permutation_sign(perm) == -1);
        CHECK(permutation_sign(std::vector<unsigned>{2, 3, 1}) == 1);
        CHECK_THROWS_AS(perm_path(3, std::vector<unsigned>{1, 1, 3}), std::invalid_argument);
    }

    TEST_CASE("degenerate squares map to zero")
    {
        // every map from the square into K_3 with loops allowed
        const auto g = complete_graph(3);
        auto close = [&](Vertex a, Vertex b) { return a == b || g.adjacent(a, b); };
        std::size_t degenerate = 0;
        for (Vertex a = 0; a < 3; ++a)
            for (Vertex b = 0; b < 3; ++b)
                for (Vertex c = 0; c < 3; ++c)
                    for (Vertex d = 0; d < 3; ++d) {
                        if (!close(a, b) || !close(a, c) || !close(b, d) || !close(c, d))
                            continue;
                        const Tuple t = {a, b, c, d};
                        if (!is_degenerate(t))
                            continue;
                        ++degenerate;
                        CHECK(psi_cube(t).is_zero());
                    }
        CHECK(degenerate > 0);
    }

    TEST_CASE("psi is a chain map")
    {
        std::mt19937_64 rng(61);
        std::vector<Graph> graphs = {cycle_graph(4), complete_graph(3), counterexample_graph()};
        for (int i = 0; i < 3; ++i)
            graphs.push_back(oracle::random_graph(rng, 5, 0.5));
        for (const auto& g : graphs)
            for (unsigned n = 1; n <= 3; ++n) {
                if (n == 3 && g.vertex_count() > 5)
                    continue;
                const auto cubes = enumerate_cubes(g, n);
                for (std::size_t i = 0; i < cubes.size(); ++i) {
                    const TupleChain s(cubes.tuple(i));
                    CHECK(path_boundary_of(psi_of(s)) == psi_of(boundary_cube(cubes.tuple(i))));
                }
            }
        CHECK_NOTHROW(comparison_complex(cycle_graph(4), 3));
    }

    TEST_CASE("psi is bijective in dimensions 0 and 1 and onto in dimension 2")
    {
        for (const auto& g : {cycle_graph(5), counterexample_graph(), complete_graph(4)}) {
            for (unsigned n = 0; n <= 2; ++n) {
                const auto omega = omega_basis(g, n);
                const auto cubes = enumerate_cubes(g, n);
                const auto m = psi_matrix(cubes, omega);
                CHECK(unimodular_onto(m, omega.rank()));
                if (n < 2)
                    CHECK(cubes.size() == omega.rank());
            }
        }
    }

    TEST_CASE("weight table")
    {
        const WeightFunctional w(counterexample_base_quad());
        CHECK(w.weight(one_based({1, 2, 3, 6})) == 1);
        CHECK(w.weight(one_based({2, 6, 1, 3})) == 1);
        CHECK(w.weight(one_based({3, 1, 6, 2})) == 1);
        CHECK(w.weight(one_based({6, 3, 2, 1})) == 1);
        CHECK(w.weight(one_based({1, 3, 2, 6})) == -1);
        CHECK(w.weight(one_based({2, 1, 6, 3})) == -1);
        CHECK(w.weight(one_based({3, 6, 1, 2})) == -1);
        CHECK(w.weight(one_based({6, 2, 3, 1})) == -1);
        CHECK(w.weight(one_based({1, 2, 4, 7})) == 0);
        CHECK(w.weight(one_based({1, 3, 3, 6})) == 0);
        CHECK(w.table().size() == 8);
        CHECK_THROWS_AS(WeightFunctional({0, 1, 1, 5}), std::invalid_argument);
    }

    TEST_CASE("the weight of a boundary vanishes on the worked example")
    {
        const WeightFunctional w(counterexample_base_quad());
        const auto y = boundary_cube(one_based({3, 6, 1, 3, 1, 2, 3, 6}));
        CHECK(w.evaluate(y) == 0);
        CHECK(w.evaluate(counterexample_theta()) == 1);
    }

    TEST_CASE("certificate for the counterexample")
    {
        const auto g = counterexample_graph();
        const WeightFunctional w(counterexample_base_quad());
        const auto cert = certify_h2(g, counterexample_theta(), w, 2);
        CHECK(cert.psi_theta == 1);
        CHECK(cert.cubes_checked == 21552);
        CHECK(cert.violations == 0);
        CHECK(cert.passed());

        // a boundary and the zero chain are rejected
        CHECK_FALSE(certificate_nontrivial_h2(g, boundary_cube(one_based({3, 6, 1, 3, 1, 2, 3, 6})), w));
        CHECK_FALSE(certificate_nontrivial_h2(g, TupleChain{}, w));
        CHECK_THROWS_AS(certify_h2(g, TupleChain(one_based({1, 2, 3, 6})), w), std::invalid_argument);
        CHECK_THROWS_AS(certify_h2(g, TupleChain(one_based({1, 2, 4, 10})), w), std::invalid_argument);
    }

    TEST_CASE("quadrilateral system")
    {
        const auto q = quadrilateral_system(counterexample_graph());
        std::vector<Edge> rows;
        for (auto [x, y] : std::vector<std::pair<Vertex, Vertex>>{
                 {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {6, 3}, {7, 2}, {7, 4},
                 {8, 3}, {8, 5}, {9, 4}, {9, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 9}})
            rows.push_back({x - 1, y - 1});
        CHECK(q.rows == rows);
        REQUIRE(q.matrix.rows() == 16);
        REQUIRE(q.matrix.cols() == 8);
        CHECK(rank(q.matrix, Field::rational()) == 7);

        const std::vector<std::vector<long long>> printed = {
            {1, 0, 0, -1, 0, 0, 0, 0},  {-1, 1, 0, 0, 0, 0, 0, 0},  {0, 0, -1, 1, 0, 0, 0, 0},
            {0, -1, 1, 0, 0, 0, 0, 0},  {1, 0, 0, 0, 0, 0, 0, -1},  {-1, 0, 0, 0, 1, 0, 0, 0},
            {0, 0, 0, -1, 0, 0, 0, 1},  {0, 0, 0, 1, 0, 0, -1, 0},  {0, 1, 0, 0, -1, 0, 0, 0},
            {0, -1, 0, 0, 0, 1, 0, 0},  {0, 0, -1, 0, 0, 0, 1, 0},  {0, 0, 1, 0, 0, -1, 0, 0},
            {0, 0, 0, 0, 1, 0, 0, -1},  {0, 0, 0, 0, 0, 0, -1, 1},  {0, 0, 0, 0, -1, 1, 0, 0},
            {0, 0, 0, 0, 0, -1, 1, 0}};
        std::vector<std::vector<BigInt>> expected_dense;
        for (const auto& row : printed)
            expected_dense.emplace_back(row.begin(), row.end());
        const auto got_dense = oracle::to_dense(q.matrix);
        std::multiset<std::vector<long long>> expected_cols, got_cols;
        for (std::size_t j = 0; j < 8; ++j) {
            expected_cols.insert(normalized_column(expected_dense, j));
            got_cols.insert(normalized_column(got_dense, j));
        }
        CHECK(got_cols == expected_cols);
    }

    TEST_CASE("the polytope 2-cycle in path homology bounds")
    {
        auto chain = [](std::initializer_list<std::pair<int, std::initializer_list<Vertex>>> terms) {
            TupleChain c;
            for (const auto& [coef, labels] : terms)
                c.add(one_based(labels), coef);
            return c;
        };
        const auto cycle = chain({{1, {6, 2, 1}},  {-1, {6, 3, 1}},  {1, {8, 3, 1}},   {-1, {8, 5, 1}},
                                  {1, {9, 5, 1}},  {-1, {9, 4, 1}},  {1, {7, 4, 1}},   {-1, {7, 2, 1}},
                                  {1, {10, 6, 3}}, {-1, {10, 8, 3}}, {1, {10, 8, 5}},  {-1, {10, 9, 5}},
                                  {1, {10, 9, 4}}, {-1, {10, 7, 4}}, {1, {10, 7, 2}},  {-1, {10, 6, 2}}});
        const auto filler = chain({{1, {10, 6, 2, 1}}, {-1, {10, 6, 3, 1}}, {1, {10, 7, 4, 1}}, {-1, {10, 7, 2, 1}},
                                   {1, {10, 8, 3, 1}}, {-1, {10, 8, 5, 1}}, {1, {10, 9, 5, 1}}, {-1, {10, 9, 4, 1}}});
        CHECK(path_boundary_of(filler) == cycle);
        CHECK(path_boundary_of(cycle).is_zero());
        const auto g = counterexample_graph();
        CHECK(omega_basis(g, 2).coordinates(cycle));
        CHECK(omega_basis(g, 3).coordinates(filler));

        // the cycle is a signed sum of the quadrilateral columns
        const auto q = quadrilateral_system(g);
        TupleChain rest = cycle;
        for (const auto& col : q.columns) {
            const auto& [t, c] = *col.terms().begin();
            rest.add(col, -rest.coefficient(t) / c);
        }
        CHECK(rest.is_zero());
    }

    TEST_CASE("comparison verdicts")
    {
        std::vector<std::string> z5;
        for (const auto& m : compare_theories(cycle_graph(5), 2))
            z5.push_back(verdict(m));
        CHECK(z5 == std::vector<std::string>{"iso", "iso", "iso"});

        const auto ce = compare_theories(counterexample_graph(), 2);
        REQUIRE(ce.size() == 3);
        CHECK(verdict(ce[0]) == "iso");
        CHECK(verdict(ce[1]) == "iso");
        CHECK(verdict(ce[2]) == "surjective");
        CHECK(ce[2].cube_betti == 1);
        CHECK(ce[2].path_betti == 0);
        CHECK(ce[2].rank == 0);
    }
}
