#include "homlab/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace homlab {

void normalize(SparseVector& v)
{
    std::sort(v.begin(), v.end(), [](const MatrixEntry& a, const MatrixEntry& b) { return a.row < b.row; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::uint32_t row = v[i].row;
        BigInt sum = std::move(v[i].value);
        for (++i; i < v.size() && v[i].row == row; ++i)
            sum += v[i].value;
        if (!sum.is_zero())
            v[out++] = MatrixEntry{row, std::move(sum)};
    }
    v.resize(out);
}

SparseVector combine(const BigInt& a, const SparseVector& x, const BigInt& b, const SparseVector& y)
{
    SparseVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
            if (!a.is_zero())
                out.push_back({x[i].row, a * x[i].value});
            ++i;
        } else if (i == x.size() || y[j].row < x[i].row) {
            if (!b.is_zero())
                out.push_back({y[j].row, b * y[j].value});
            ++j;
        } else {
            BigInt v = a * x[i].value + b * y[j].value;
            if (!v.is_zero())
                out.push_back({x[i].row, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long long>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged dense matrix");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] != 0)
                m.columns_[j].push_back({std::uint32_t(i), BigInt(rows[i][j])});
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.columns_[i].push_back({std::uint32_t(i), BigInt(1)});
    return m;
}

std::size_t IntMatrix::nonzeros() const
{
    std::size_t total = 0;
    for (const auto& c : columns_)
        total += c.size();
    return total;
}

void IntMatrix::set_column(std::size_t j, SparseVector entries)
{
    normalize(entries);
    if (!entries.empty() && entries.back().row >= rows_)
        throw std::out_of_range("matrix entry row out of range");
    columns_.at(j) = std::move(entries);
}

void IntMatrix::push_column(SparseVector entries)
{
    columns_.emplace_back();
    set_column(columns_.size() - 1, std::move(entries));
}

BigInt IntMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
    return it != c.end() && it->row == row ? it->value : BigInt(0);
}

bool IntMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : columns_[j])
            t.columns_[e.row].push_back({std::uint32_t(j), e.value});
    return t;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> which) const
{
    IntMatrix out(rows_, 0);
    out.columns_.reserve(which.size());
    for (std::size_t j : which)
        out.columns_.push_back(columns_.at(j));
    return out;
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> x) const
{
    if (x.size() != cols())
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<BigInt> y(rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        if (!x[j].is_zero())
            for (const auto& e : columns_[j])
                y[e.row] += e.value * x[j];
    return y;
}

SparseVector IntMatrix::apply(const SparseVector& x) const
{
    SparseVector y;
    for (const auto& xe : x) {
        if (xe.row >= cols())
            throw std::invalid_argument("matrix-vector dimension mismatch");
        for (const auto& e : columns_[xe.row])
            y.push_back({e.row, e.value * xe.value});
    }
    normalize(y);
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        c.columns_[j] = a.apply(b.columns_[j]);
    return c;
}

void write_matrix_market(std::ostream& out, const IntMatrix& m)
{
    out << "%%MatrixMarket matrix coordinate integer general\n";
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j))
            out << e.row + 1 << ' ' << j + 1 << ' ' << e.value << '\n';
}

} // namespace homlab
