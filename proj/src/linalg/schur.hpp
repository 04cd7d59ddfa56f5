#pragma once

// Sparse Gaussian elimination restricted to unit pivots, shared by the
// integer Smith form (units are +-1), the GF(p) rank and the rational rank
// (every nonzero is a unit). Pivoting is Markowitz-style: the shortest live
// row is taken first and, within it, the unit entry in the shortest column,
// ties broken by lowest index. Eliminating a unit pivot replaces the matrix by
// pivot (+) Schur complement, so integer elimination preserves the Smith form.

#include "homlab/linalg.hpp"
#include "homlab/modp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

namespace homlab::detail {

struct Overflow {};

struct Int64Ring {
    using value_type = std::int64_t;

    value_type from(const BigInt& v) const
    {
        if (v > std::numeric_limits<std::int64_t>::max() / 4 || v < std::numeric_limits<std::int64_t>::min() / 4)
            throw Overflow{};
        return v.convert_to<std::int64_t>();
    }
    static bool is_zero(value_type v) { return v == 0; }
    static bool is_unit(value_type v) { return v == 1 || v == -1; }
    // a / u for a unit u
    static value_type quotient(value_type a, value_type u) { return a * u; }
    // a - f * b
    static value_type sub_mul(value_type a, value_type f, value_type b)
    {
        value_type prod, out;
        if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out))
            throw Overflow{};
        return out;
    }
    static BigInt to_big(value_type v) { return BigInt(v); }
};

struct BigIntRing {
    using value_type = BigInt;

    value_type from(const BigInt& v) const { return v; }
    static bool is_zero(const value_type& v) { return v.is_zero(); }
    static bool is_unit(const value_type& v) { return v == 1 || v == -1; }
    static value_type quotient(const value_type& a, const value_type& u) { return a * u; }
    static value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) { return a - f * b; }
    static BigInt to_big(const value_type& v) { return v; }
};

struct RationalRing {
    using value_type = BigRational;

    value_type from(const BigInt& v) const { return BigRational(v); }
    static bool is_zero(const value_type& v) { return v == 0; }
    static bool is_unit(const value_type& v) { return v != 0; }
    static value_type quotient(const value_type& a, const value_type& u) { return a / u; }
    static value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) { return a - f * b; }
};

struct ModPRing {
    using value_type = std::uint32_t;
    ModP field;

    value_type from(const BigInt& v) const { return field.reduce(v); }
    static bool is_zero(value_type v) { return v == 0; }
    static bool is_unit(value_type v) { return v != 0; }
    value_type quotient(value_type a, value_type u) const { return field.mul(a, field.inv(u)); }
    value_type sub_mul(value_type a, value_type f, value_type b) const { return field.sub(a, field.mul(f, b)); }
};

template <class Ring>
class SchurEliminator {
public:
    using value_type = typename Ring::value_type;

    struct Cell {
        std::uint32_t row;
        value_type value;
    };

    SchurEliminator(const IntMatrix& m, Ring ring)
        : ring_(std::move(ring)), cols_(m.cols()), row_cols_(m.rows()), row_len_(m.rows(), 0),
          row_version_(m.rows(), 0), stuck_version_(m.rows(), no_version), row_dead_(m.rows(), false)
    {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto& col = cols_[j];
            for (const auto& e : m.column(j)) {
                value_type v = ring_.from(e.value);
                if (Ring::is_zero(v))
                    continue;
                col.push_back({e.row, std::move(v)});
                row_cols_[e.row].push_back(std::uint32_t(j));
                ++row_len_[e.row];
            }
        }
        for (std::uint32_t r = 0; r < row_len_.size(); ++r)
            if (row_len_[r] > 0)
                queue_.push({row_len_[r], r});
    }

    // Eliminates unit pivots until none is left; returns how many were used.
    std::size_t eliminate()
    {
        std::size_t pivots = 0;
        while (!queue_.empty()) {
            auto [len, r] = queue_.top();
            queue_.pop();
            if (row_dead_[r] || len != row_len_[r] || stuck_version_[r] == row_version_[r])
                continue;
            if (row_len_[r] == 0) {
                row_dead_[r] = true;
                continue;
            }
            auto& cands = row_cols_[r];
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            std::size_t kept = 0;
            std::int64_t best = -1;
            for (std::uint32_t c : cands) {
                const value_type* v = find(c, r);
                if (!v)
                    continue;
                cands[kept++] = c;
                if (Ring::is_unit(*v) && (best < 0 || cols_[c].size() < cols_[std::size_t(best)].size()))
                    best = c;
            }
            cands.resize(kept);
            if (best < 0) {
                stuck_version_[r] = row_version_[r];
                continue;
            }
            pivot(r, std::uint32_t(best));
            ++pivots;
        }
        return pivots;
    }

    // Entries that survived elimination, as (row, column, value).
    std::vector<std::tuple<std::uint32_t, std::uint32_t, value_type>> remainder() const
    {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, value_type>> out;
        for (std::uint32_t c = 0; c < cols_.size(); ++c)
            for (const auto& cell : cols_[c])
                out.emplace_back(cell.row, c, cell.value);
        return out;
    }

private:
    static constexpr std::uint64_t no_version = std::numeric_limits<std::uint64_t>::max();

    const value_type* find(std::uint32_t c, std::uint32_t r) const
    {
        const auto& col = cols_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r, [](const Cell& cell, std::uint32_t row) {
            return cell.row < row;
        });
        return it != col.end() && it->row == r ? &it->value : nullptr;
    }

    void touched(std::uint32_t row, bool length_changed)
    {
        const bool was_stuck = stuck_version_[row] == row_version_[row];
        ++row_version_[row];
        if (length_changed || was_stuck)
            queue_.push({row_len_[row], row});
    }

    void pivot(std::uint32_t r, std::uint32_t c)
    {
        std::vector<Cell> pcol = std::move(cols_[c]);
        cols_[c].clear();
        value_type u{};
        for (const auto& cell : pcol)
            if (cell.row == r)
                u = cell.value;

        std::vector<Cell> merged;
        for (std::uint32_t c2 : row_cols_[r]) {
            if (c2 == c)
                continue;
            const value_type* a = find(c2, r);
            if (!a)
                continue;
            const value_type f = ring_.quotient(*a, u);
            auto& col = cols_[c2];
            merged.clear();
            merged.reserve(col.size() + pcol.size());
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < pcol.size()) {
                if (j == pcol.size() || (i < col.size() && col[i].row < pcol[j].row)) {
                    merged.push_back(std::move(col[i++]));
                } else if (i == col.size() || pcol[j].row < col[i].row) {
                    const std::uint32_t row = pcol[j].row;
                    value_type v = ring_.sub_mul(value_type(0), f, pcol[j].value);
                    ++j;
                    if (row == r)
                        continue;
                    merged.push_back({row, std::move(v)});
                    row_cols_[row].push_back(c2);
                    ++row_len_[row];
                    touched(row, true);
                } else {
                    const std::uint32_t row = col[i].row;
                    value_type v = ring_.sub_mul(col[i].value, f, pcol[j].value);
                    ++i;
                    ++j;
                    if (row == r)
                        continue;
                    if (Ring::is_zero(v)) {
                        --row_len_[row];
                        touched(row, true);
                    } else {
                        merged.push_back({row, std::move(v)});
                        touched(row, false);
                    }
                }
            }
            col.swap(merged);
        }
        for (const auto& cell : pcol)
            if (cell.row != r) {
                --row_len_[cell.row];
                touched(cell.row, true);
            }
        row_dead_[r] = true;
        row_len_[r] = 0;
        row_cols_[r].clear();
        row_cols_[r].shrink_to_fit();
    }

    Ring ring_;
    std::vector<std::vector<Cell>> cols_;
    std::vector<std::vector<std::uint32_t>> row_cols_;
    std::vector<std::uint32_t> row_len_;
    std::vector<std::uint64_t> row_version_;
    std::vector<std::uint64_t> stuck_version_;
    std::vector<bool> row_dead_;
    std::priority_queue<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::pair<std::uint32_t, std::uint32_t>>,
                        std::greater<>>
        queue_;
};

} // namespace homlab::detail
