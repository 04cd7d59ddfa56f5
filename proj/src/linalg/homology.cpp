#include "homlab/complex.hpp"
#include "homlab/errors.hpp"
#include "homlab/lattice.hpp"
#include "homlab/linalg.hpp"

#include <stdexcept>

namespace homlab {

namespace {

SparseVector to_sparse(std::span<const MatrixEntry> column) { return {column.begin(), column.end()}; }

} // namespace

void verify_composable(const IntMatrix& d_n, const IntMatrix& d_np1)
{
    if (d_n.cols() != d_np1.rows())
        throw std::invalid_argument("boundary shapes do not compose: " + std::to_string(d_n.cols()) + " columns vs " +
                                    std::to_string(d_np1.rows()) + " rows");
    if (!(d_n * d_np1).is_zero())
        throw ContractViolation("boundary of a boundary is nonzero");
}

IntMatrix integer_kernel_basis(const IntMatrix& m)
{
    LatticeEchelon image(m.rows(), true);
    for (std::size_t j = 0; j < m.cols(); ++j)
        image.insert(to_sparse(m.column(j)), SparseVector{{std::uint32_t(j), BigInt(1)}});
    LatticeEchelon kernel(m.cols());
    for (const auto& rel : image.relations())
        kernel.insert(rel);
    IntMatrix out(m.cols(), 0);
    for (auto& v : kernel.basis())
        out.push_column(std::move(v));
    return out;
}

HomologyGroup homology_of_pair(const IntMatrix& d_n, const IntMatrix& d_np1)
{
    verify_composable(d_n, d_np1);
    HomologyGroup h;
    const SNFResult s = snf(d_np1);
    h.betti = d_n.cols() - rank(d_n, Field::rational()) - s.rank;
    for (const auto& d : s.diagonal)
        if (d > 1)
            h.torsion.push_back(d);
    return h;
}

HomologyGroup homology_of_pair(const IntMatrix& d_n, const IntMatrix& d_np1, Field field)
{
    verify_composable(d_n, d_np1);
    HomologyGroup h;
    h.betti = d_n.cols() - rank(d_n, field) - rank(d_np1, field);
    return h;
}

std::optional<ImageSolution> solve_in_image(const IntMatrix& m, std::span<const BigInt> b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                                    std::to_string(m.rows()) + " rows");
    LatticeEchelon image(m.rows(), true);
    for (std::size_t j = 0; j < m.cols(); ++j)
        image.insert(to_sparse(m.column(j)), SparseVector{{std::uint32_t(j), BigInt(1)}});
    SparseVector target;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero())
            target.push_back({std::uint32_t(i), b[i]});
    auto coeff = image.coordinates(target);
    if (!coeff)
        return std::nullopt;
    const auto transforms = image.basis_transforms();
    ImageSolution sol;
    sol.x.assign(m.cols(), BigRational(0));
    for (std::size_t k = 0; k < transforms.size(); ++k)
        for (const auto& e : transforms[k])
            sol.x[e.row] += (*coeff)[k] * BigRational(e.value);
    sol.integral = true;
    for (const auto& v : sol.x)
        if (boost::multiprecision::denominator(v) != 1)
            sol.integral = false;
    return sol;
}

std::string Coefficients::name() const
{
    switch (kind) {
    case Kind::integers:
        return "z";
    case Kind::rationals:
        return "q";
    case Kind::mod_p:
        return "mod_" + std::to_string(p);
    }
    return {};
}

Coefficients parse_coefficients(const std::string& text)
{
    if (text == "z" || text == "Z")
        return Coefficients::integers();
    if (text == "q" || text == "Q")
        return Coefficients::rationals();
    if (text == "mod_p")
        return Coefficients::mod(default_prime);
    if (text.rfind("mod_", 0) == 0) {
        std::uint64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoull(text.substr(4), &used);
            if (used != text.size() - 4)
                p = 0;
        } catch (const std::exception&) {
            p = 0;
        }
        if (p > 0 && p < (std::uint64_t(1) << 31) && is_prime(p))
            return Coefficients::mod(std::uint32_t(p));
    }
    throw ParseError("unknown coefficient ring '" + text + "' (expected z, q, mod_p or mod_<prime below 2^31>)");
}

std::vector<DimensionReport> homology_report(std::span<const IntMatrix> d, Coefficients c)
{
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
        verify_composable(d[k], d[k + 1]);
    std::vector<std::size_t> ranks(d.size());
    std::vector<std::vector<BigInt>> torsion(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (c.kind == Coefficients::Kind::integers && k > 0) {
            SNFResult s = snf(d[k]);
            ranks[k] = s.rank;
            for (auto& v : s.diagonal)
                if (v > 1)
                    torsion[k].push_back(std::move(v));
        } else {
            ranks[k] = rank(d[k], c.field());
        }
    }
    std::vector<DimensionReport> out;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        DimensionReport r;
        r.dim = unsigned(k);
        r.generators = d[k].cols();
        r.boundary_rank = ranks[k];
        r.next_rank = ranks[k + 1];
        r.group.betti = r.generators - r.boundary_rank - r.next_rank;
        r.group.torsion = torsion[k + 1];
        r.method = c.kind == Coefficients::Kind::integers ? "snf" : "rank";
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace homlab
