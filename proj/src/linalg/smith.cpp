#include "homlab/errors.hpp"
#include "homlab/linalg.hpp"
#include "schur.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace homlab {

namespace {

using detail::BigIntRing;
using detail::Int64Ring;
using detail::ModPRing;
using detail::Overflow;
using detail::RationalRing;
using detail::SchurEliminator;

constexpr std::size_t dense_cell_limit = 20'000'000;

// What is left after removing all unit pivots: a matrix with no +-1 entries
// whose Smith form, together with `units` ones, is the Smith form of the input.
struct Reduced {
    std::size_t units = 0;
    std::vector<std::vector<BigInt>> dense;
};

template <class Ring>
Reduced eliminate_units(const IntMatrix& m, Ring ring)
{
    SchurEliminator<Ring> elim(m, ring);
    Reduced out;
    out.units = elim.eliminate();
    auto cells = elim.remainder();
    std::map<std::uint32_t, std::size_t> row_index, col_index;
    for (const auto& [r, c, v] : cells) {
        row_index.emplace(r, 0);
        col_index.emplace(c, 0);
    }
    if (row_index.size() * col_index.size() > dense_cell_limit)
        throw ResourceLimit("Smith form remainder too large: " + std::to_string(row_index.size()) + "x" +
                            std::to_string(col_index.size()));
    std::size_t k = 0;
    for (auto& [r, idx] : row_index)
        idx = k++;
    k = 0;
    for (auto& [c, idx] : col_index)
        idx = k++;
    out.dense.assign(row_index.size(), std::vector<BigInt>(col_index.size()));
    for (const auto& [r, c, v] : cells)
        out.dense[row_index[r]][col_index[c]] = Ring::to_big(v);
    return out;
}

Reduced eliminate_units_exact(const IntMatrix& m)
{
    try {
        return eliminate_units(m, Int64Ring{});
    } catch (const Overflow&) {
        return eliminate_units(m, BigIntRing{});
    }
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Textbook diagonalization by row and column operations, followed by the
// gcd/lcm pass that turns any diagonal into invariant factors.
std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        auto place_min = [&](bool whole) {
            std::size_t bi = rows, bj = cols;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (!whole && i != t && j != t)
                        continue;
                    if (a[i][j].is_zero())
                        continue;
                    BigInt v = abs_big(a[i][j]);
                    if (bi == rows || v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == rows)
                return false;
            std::swap(a[t], a[bi]);
            for (auto& row : a)
                std::swap(row[t], row[bj]);
            return true;
        };
        if (!place_min(true))
            break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero())
                    continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t].is_zero();
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero())
                    continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j].is_zero();
            }
            if (clean)
                break;
            place_min(false);
        }
        diag.push_back(abs_big(a[t][t]));
    }
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
            if (g == diag[i])
                continue;
            const BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

} // namespace

SNFResult snf(const IntMatrix& m)
{
    Reduced red = eliminate_units_exact(m);
    SNFResult out;
    out.diagonal.assign(red.units, BigInt(1));
    for (auto& d : dense_smith_diagonal(std::move(red.dense)))
        out.diagonal.push_back(std::move(d));
    out.rank = out.diagonal.size();
    return out;
}

std::size_t rank(const IntMatrix& m, Field field)
{
    if (field.kind == Field::Kind::mod_p) {
        if (!is_prime(field.p))
            throw std::invalid_argument("modulus " + std::to_string(field.p) + " is not prime");
        SchurEliminator<ModPRing> elim(m, ModPRing{ModP{field.p}});
        return elim.eliminate();
    }
    // Unit pivots are cheap in machine integers; whatever is left is small
    // and finished over Q.
    Reduced red = eliminate_units_exact(m);
    IntMatrix rest(red.dense.size(), red.dense.empty() ? 0 : red.dense[0].size());
    for (std::size_t j = 0; j < rest.cols(); ++j) {
        SparseVector col;
        for (std::size_t i = 0; i < rest.rows(); ++i)
            if (!red.dense[i][j].is_zero())
                col.push_back({std::uint32_t(i), red.dense[i][j]});
        rest.set_column(j, std::move(col));
    }
    SchurEliminator<RationalRing> elim(rest, RationalRing{});
    return red.units + elim.eliminate();
}

} // namespace homlab
