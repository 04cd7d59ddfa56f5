#include "homlab/path.hpp"

#include "homlab/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace homlab {

namespace {

void extend(const Graph& g, unsigned n, Tuple& current, std::vector<Tuple>& out)
{
    if (current.size() == n + 1) {
        out.push_back(current);
        return;
    }
    for (Vertex w : g.neighbors(current.back())) {
        current.push_back(w);
        extend(g, n, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Tuple> enumerate_allowed(const Graph& g, unsigned n)
{
    std::vector<Tuple> out;
    Tuple current;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        current.assign(1, v);
        extend(g, n, current, out);
    }
    return out;
}

bool is_allowed(const Graph& g, const Tuple& p)
{
    if (p.empty())
        return false;
    for (Vertex v : p)
        if (v >= g.vertex_count())
            return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1]))
            return false;
    return true;
}

TupleChain boundary_tuple(const Tuple& p)
{
    TupleChain out;
    if (p.size() <= 1)
        return out;
    Tuple t(p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::copy(p.begin(), p.begin() + std::ptrdiff_t(i), t.begin());
        std::copy(p.begin() + std::ptrdiff_t(i) + 1, p.end(), t.begin() + std::ptrdiff_t(i));
        bool degenerate = false;
        for (std::size_t k = 0; k + 1 < t.size(); ++k)
            degenerate = degenerate || t[k] == t[k + 1];
        if (!degenerate)
            out.add(t, i % 2 ? -1 : 1);
    }
    return out;
}

OmegaBasis::OmegaBasis(unsigned dim, std::vector<Tuple> ambient, IntMatrix vectors)
    : dim_(dim), ambient_(std::move(ambient)), vectors_(std::move(vectors)), echelon_(ambient_.size())
{
    for (std::size_t k = 0; k < vectors_.cols(); ++k) {
        auto col = vectors_.column(k);
        if (!echelon_.insert(SparseVector(col.begin(), col.end())))
            throw ContractViolation("Omega basis vectors are dependent");
    }
    // coordinates() is expressed in echelon_.basis() order, which must be ours.
    const auto b = echelon_.basis();
    for (std::size_t k = 0; k < b.size(); ++k) {
        auto col = vectors_.column(k);
        if (!std::equal(col.begin(), col.end(), b[k].begin(), b[k].end()))
            throw ContractViolation("Omega basis is not in echelon order");
    }
}

std::optional<std::size_t> OmegaBasis::ambient_index(const Tuple& p) const
{
    auto it = std::lower_bound(ambient_.begin(), ambient_.end(), p);
    if (it == ambient_.end() || *it != p)
        return std::nullopt;
    return std::size_t(it - ambient_.begin());
}

TupleChain OmegaBasis::vector_chain(std::size_t k) const
{
    TupleChain c;
    for (const auto& e : vectors_.column(k))
        c.add(ambient_[e.row], e.value);
    return c;
}

std::optional<SparseVector> OmegaBasis::to_ambient(const TupleChain& c) const
{
    SparseVector v;
    for (const auto& [t, coef] : c.terms()) {
        auto idx = ambient_index(t);
        if (!idx)
            return std::nullopt;
        v.push_back({std::uint32_t(*idx), coef});
    }
    normalize(v);
    return v;
}

std::optional<std::vector<BigRational>> OmegaBasis::coordinates(const TupleChain& c) const
{
    auto v = to_ambient(c);
    if (!v)
        return std::nullopt;
    return echelon_.coordinates(*v);
}

SparseVector OmegaBasis::integer_coordinates(const TupleChain& c) const
{
    auto coeff = coordinates(c);
    if (!coeff)
        throw ContractViolation("chain " + format_chain(c) + " is not in Omega_" + std::to_string(dim_));
    SparseVector out;
    for (std::size_t k = 0; k < coeff->size(); ++k) {
        const BigRational& q = (*coeff)[k];
        if (q == 0)
            continue;
        if (boost::multiprecision::denominator(q) != 1)
            throw ContractViolation("chain has non-integral Omega coordinates");
        out.push_back({std::uint32_t(k), boost::multiprecision::numerator(q)});
    }
    return out;
}

OmegaBasis omega_basis(const Graph& g, unsigned n, unsigned jobs)
{
    std::vector<Tuple> ambient = enumerate_allowed(g, n);
    if (n <= 1)
        return OmegaBasis(n, std::move(ambient), IntMatrix::identity(ambient.size()));

    // Deleting an endpoint of an allowed path leaves an allowed path, so the
    // non-allowed part of the boundary only comes from interior deletions and
    // keeps both endpoints: the constraint matrix splits into blocks indexed
    // by (first, last) vertex.
    std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> block_of;
    for (std::size_t i = 0; i < ambient.size(); ++i)
        block_of[{ambient[i].front(), ambient[i].back()}].push_back(i);
    std::vector<const std::vector<std::size_t>*> blocks;
    for (const auto& [key, members] : block_of)
        blocks.push_back(&members);

    std::vector<std::vector<SparseVector>> kernels(blocks.size());
    detail::parallel_for(blocks.size(), jobs, [&](std::size_t b) {
        const auto& members = *blocks[b];
        std::map<Tuple, std::uint32_t> row_of;
        std::vector<SparseVector> cols(members.size());
        Tuple t(n);
        for (std::size_t j = 0; j < members.size(); ++j) {
            const Tuple& p = ambient[members[j]];
            for (std::size_t i = 1; i < n; ++i) {
                if (p[i - 1] == p[i + 1] || g.adjacent(p[i - 1], p[i + 1]))
                    continue;
                std::copy(p.begin(), p.begin() + std::ptrdiff_t(i), t.begin());
                std::copy(p.begin() + std::ptrdiff_t(i) + 1, p.end(), t.begin() + std::ptrdiff_t(i));
                auto [it, inserted] = row_of.try_emplace(t, std::uint32_t(row_of.size()));
                cols[j].push_back({it->second, BigInt(i % 2 ? -1 : 1)});
            }
        }
        IntMatrix constraint(row_of.size(), 0);
        for (auto& c : cols)
            constraint.push_column(std::move(c));
        const IntMatrix kernel = integer_kernel_basis(constraint);
        for (std::size_t k = 0; k < kernel.cols(); ++k) {
            SparseVector v;
            for (const auto& e : kernel.column(k))
                v.push_back({std::uint32_t(members[e.row]), e.value});
            kernels[b].push_back(std::move(v));
        }
    });

    std::vector<SparseVector> columns;
    for (auto& k : kernels)
        for (auto& v : k)
            columns.push_back(std::move(v));
    std::sort(columns.begin(), columns.end(),
              [](const SparseVector& a, const SparseVector& b) { return a.back().row < b.back().row; });
    IntMatrix vectors(ambient.size(), 0);
    for (auto& c : columns)
        vectors.push_column(std::move(c));
    return OmegaBasis(n, std::move(ambient), std::move(vectors));
}

std::vector<PathSlice> path_complex(const Graph& g, unsigned max_dim, unsigned jobs)
{
    std::vector<PathSlice> slices;
    for (unsigned n = 0; n <= max_dim; ++n) {
        PathSlice s;
        s.dim = n;
        s.omega = omega_basis(g, n, jobs);
        if (n == 0) {
            s.boundary = IntMatrix(0, s.omega.rank());
        } else {
            const OmegaBasis& lower = slices.back().omega;
            s.boundary = IntMatrix(lower.rank(), 0);
            for (std::size_t k = 0; k < s.omega.rank(); ++k) {
                TupleChain image;
                for (const auto& e : s.omega.vectors().column(k))
                    image.add(boundary_tuple(s.omega.ambient()[e.row]), e.value);
                s.boundary.push_column(lower.integer_coordinates(image));
            }
            verify_composable(slices.back().boundary, s.boundary);
        }
        slices.push_back(std::move(s));
    }
    return slices;
}

std::vector<DimensionReport> path_homology_report(const Graph& g, unsigned max_dim, Coefficients c, unsigned jobs)
{
    auto slices = path_complex(g, max_dim + 1, jobs);
    std::vector<IntMatrix> d;
    for (auto& s : slices)
        d.push_back(std::move(s.boundary));
    return homology_report(d, c);
}

HomologyGroup path_homology(const Graph& g, unsigned n, Coefficients c)
{
    return path_homology_report(g, n, c).back().group;
}

void write_omega_basis(std::ostream& out, const OmegaBasis& omega, bool one_based)
{
    for (std::size_t k = 0; k < omega.rank(); ++k)
        out << format_chain(omega.vector_chain(k), one_based) << '\n';
}

} // namespace homlab
