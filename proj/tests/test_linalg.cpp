#include "homlab/complex.hpp"
#include "homlab/errors.hpp"
#include "homlab/lattice.hpp"
#include "homlab/linalg.hpp"
#include "homlab/modp.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace homlab;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range, int density)
{
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols, 0));
    for (auto& row : a)
        for (auto& x : row)
            if (int(rng() % 100) < density)
                x = (long long)(rng() % (2 * range + 1)) - range;
    return IntMatrix::from_dense(a);
}

// A product of two random matrices has structured torsion more often than a
// single random matrix.
IntMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner)
{
    return random_matrix(rng, rows, inner, 3, 70) * random_matrix(rng, inner, cols, 3, 70);
}

std::vector<BigInt> torsion_of(const std::vector<BigInt>& diag)
{
    std::vector<BigInt> out;
    for (const auto& d : diag)
        if (d > 1)
            out.push_back(d);
    return out;
}

} // namespace

TEST_SUITE("linalg")
{
    TEST_CASE("smith form of small examples")
    {
        const auto m = IntMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
        const auto s = snf(m);
        CHECK(s.rank == 3);
        CHECK(s.diagonal == std::vector<BigInt>{2, 6, 12});

        CHECK(snf(IntMatrix(3, 0)).rank == 0);
        CHECK(snf(IntMatrix::from_dense({{0, 0}, {0, 0}})).diagonal.empty());
        CHECK(snf(IntMatrix::from_dense({{2, 0}, {0, 3}})).diagonal == std::vector<BigInt>{1, 6});
    }

    TEST_CASE("smith form agrees with the dense textbook reduction")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 120; ++trial) {
            const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
            const IntMatrix m = trial % 2 ? random_matrix(rng, rows, cols, 4, 60)
                                          : random_low_rank(rng, rows, cols, 1 + rng() % 4);
            const auto expected = oracle::smith_diagonal(oracle::to_dense(m));
            const auto got = snf(m);
            CHECK(got.rank == expected.size());
            CHECK(got.diagonal == expected);
        }
    }

    TEST_CASE("rank over Q and GF(p)")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 80; ++trial) {
            const IntMatrix m = random_low_rank(rng, 2 + rng() % 9, 2 + rng() % 9, 1 + rng() % 5);
            const auto dense = oracle::to_dense(m);
            const std::size_t q = oracle::rational_rank(dense);
            CHECK(rank(m, Field::rational()) == q);
            CHECK(rank(m, Field::mod(default_prime)) == oracle::modular_rank(dense));
            // GF(2) rank drops exactly when 2 divides an invariant factor
            const auto diag = snf(m).diagonal;
            const auto even = std::count_if(diag.begin(), diag.end(), [](const BigInt& d) { return d % 2 == 0; });
            CHECK(rank(m, Field::mod(2)) == q - std::size_t(even));
        }
        CHECK_THROWS_AS(rank(IntMatrix::identity(2), Field::mod(4)), std::invalid_argument);
    }

    TEST_CASE("integer kernel basis")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 60; ++trial) {
            const IntMatrix m = random_low_rank(rng, 1 + rng() % 6, 2 + rng() % 7, 1 + rng() % 3);
            const IntMatrix k = integer_kernel_basis(m);
            CHECK(k.rows() == m.cols());
            CHECK(k.cols() + rank(m, Field::rational()) == m.cols());
            CHECK((m * k).is_zero());
            // a Z-basis of a saturated lattice: all invariant factors are 1
            for (const auto& d : snf(k).diagonal)
                CHECK(d == 1);
        }
    }

    TEST_CASE("homology of a pair")
    {
        // The real projective plane's cellular chain complex: Z, Z/2, 0.
        const auto d1 = IntMatrix::from_dense({{0}});
        const auto d2 = IntMatrix::from_dense({{2}});
        const auto h1 = homology_of_pair(d1, d2);
        CHECK(h1.betti == 0);
        CHECK(h1.torsion == std::vector<BigInt>{2});
        CHECK(homology_of_pair(d1, d2, Field::mod(2)).betti == 1);
        CHECK(homology_of_pair(d1, d2, Field::rational()).betti == 0);

        const auto bad = IntMatrix::from_dense({{1}});
        CHECK_THROWS_AS(homology_of_pair(bad, bad), ContractViolation);
        CHECK_THROWS_AS(homology_of_pair(IntMatrix(1, 2), IntMatrix(3, 1)), std::invalid_argument);
    }

    TEST_CASE("random chain complexes")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            // d2 = B, d1 = A with A B = 0: take A from the left kernel side.
            const IntMatrix b = random_low_rank(rng, 6, 5, 2);
            const IntMatrix kt = integer_kernel_basis(b.transpose());
            const IntMatrix a = kt.transpose();
            const auto h = homology_of_pair(a, b);
            const auto ra = oracle::rational_rank(oracle::to_dense(a));
            const auto diag = oracle::smith_diagonal(oracle::to_dense(b));
            CHECK(h.betti == 6 - ra - diag.size());
            CHECK(h.torsion == torsion_of(diag));
        }
    }

    TEST_CASE("solving in the image")
    {
        const auto m = IntMatrix::from_dense({{2, 0}, {0, 3}, {0, 0}});
        const std::vector<BigInt> b = {4, 3, 0};
        const auto s = solve_in_image(m, b);
        REQUIRE(s);
        CHECK(s->integral);
        CHECK(m.apply(std::vector<BigInt>{2, 1}) == b);

        const auto half = solve_in_image(m, std::vector<BigInt>{1, 0, 0});
        REQUIRE(half);
        CHECK_FALSE(half->integral);
        CHECK(half->x[0] == BigRational(1, 2));

        CHECK_FALSE(solve_in_image(m, std::vector<BigInt>{0, 0, 1}));
        CHECK_THROWS_AS(solve_in_image(m, std::vector<BigInt>{1}), std::invalid_argument);
    }

    TEST_CASE("lattice echelon")
    {
        LatticeEchelon e(3, true);
        CHECK(e.insert({{0, 2}, {2, 4}}, {{0, 1}}));
        CHECK(e.insert({{1, 3}, {2, 6}}, {{1, 1}}));
        CHECK_FALSE(e.insert({{0, 2}, {1, 3}, {2, 10}}, {{2, 1}}));
        CHECK(e.rank() == 2);
        REQUIRE(e.relations().size() == 1);
        // the relation is v0 + v1 - v2, up to sign
        const auto rel = e.relations()[0];
        CHECK((rel == SparseVector{{0, 1}, {1, 1}, {2, -1}} || rel == SparseVector{{0, -1}, {1, -1}, {2, 1}}));
        CHECK(e.coordinates({{0, 1}, {2, 2}}));
        CHECK_FALSE(e.coordinates({{1, 1}}));

        BigInt g, x, y;
        extended_gcd(BigInt(12), BigInt(-18), g, x, y);
        CHECK(g == 6);
        CHECK(x * 12 + y * -18 == 6);
    }

    TEST_CASE("streaming rank mod p")
    {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 30; ++trial) {
            const IntMatrix m = random_low_rank(rng, 8, 12, 1 + rng() % 6);
            ModPColumnReducer r(m.rows());
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::vector<ModPEntry> col;
                for (const auto& e : m.column(j))
                    col.emplace_back(e.row, e.value.convert_to<std::int64_t>());
                r.add_column(col);
            }
            CHECK(r.rank() == oracle::modular_rank(oracle::to_dense(m)));
        }
    }

    TEST_CASE("coefficient parsing")
    {
        CHECK(parse_coefficients("z") == Coefficients::integers());
        CHECK(parse_coefficients("Q") == Coefficients::rationals());
        CHECK(parse_coefficients("mod_p") == Coefficients::mod(default_prime));
        CHECK(parse_coefficients("mod_7") == Coefficients::mod(7));
        CHECK(parse_coefficients("mod_7").name() == "mod_7");
        CHECK_THROWS_AS(parse_coefficients("mod_8"), ParseError);
        CHECK_THROWS_AS(parse_coefficients("r"), ParseError);
    }

    TEST_CASE("homology reports")
    {
        // A circle: two vertices, two edges between them.
        std::vector<IntMatrix> d = {IntMatrix(0, 2), IntMatrix::from_dense({{-1, -1}, {1, 1}}), IntMatrix(2, 0)};
        const auto z = homology_report(d, Coefficients::integers());
        REQUIRE(z.size() == 2);
        CHECK(z[0].group.betti == 1);
        CHECK(z[1].group.betti == 1);
        CHECK(z[1].method == "snf");
        CHECK(homology_report(d, Coefficients::mod(3))[1].method == "rank");
    }
}
