#include "homlab/psi.hpp"

#include "homlab/errors.hpp"
#include "homlab/lattice.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homlab {

PermPath perm_path(unsigned n, std::span<const unsigned> perm)
{
    if (perm.size() != n)
        throw std::invalid_argument("permutation has length " + std::to_string(perm.size()) + ", expected " +
                                    std::to_string(n));
    std::vector<bool> seen(n + 1, false);
    for (unsigned v : perm) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        seen[v] = true;
    }
    PermPath p{n, {perm.begin(), perm.end()}, {0}};
    std::size_t at = 0;
    for (unsigned v : perm) {
        at |= std::size_t(1) << (v - 1);
        p.verts.push_back(at);
    }
    return p;
}

int permutation_sign(std::span<const unsigned> perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                sign = -sign;
    return sign;
}

TupleChain psi_cube(std::span<const Vertex> labels)
{
    const unsigned n = cube_dim(labels);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    TupleChain out;
    Tuple path(n + 1);
    do {
        const PermPath p = perm_path(n, perm);
        bool degenerate = false;
        for (std::size_t i = 0; i <= n; ++i) {
            path[i] = labels[p.verts[i]];
            if (i && path[i] == path[i - 1])
                degenerate = true;
        }
        if (!degenerate)
            out.add(path, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

IntMatrix psi_matrix(const CubeBasis& cubes, const OmegaBasis& omega)
{
    if (cubes.dim() != omega.dim())
        throw std::invalid_argument("psi between different dimensions");
    IntMatrix m(omega.rank(), 0);
    for (std::size_t j = 0; j < cubes.size(); ++j)
        m.push_column(omega.integer_coordinates(psi_cube(cubes[j])));
    return m;
}

void verify_chain_map(const IntMatrix& d_path, const IntMatrix& psi_n, const IntMatrix& psi_nm1,
                      const IntMatrix& d_cube)
{
    if (d_path.cols() != psi_n.rows() || psi_nm1.cols() != d_cube.rows())
        throw std::invalid_argument("chain map shapes do not compose");
    if (!(d_path * psi_n == psi_nm1 * d_cube))
        throw ContractViolation("psi does not commute with the boundary");
}

ComparisonComplex comparison_complex(const Graph& g, unsigned max_dim, const EnumerationOptions& options)
{
    ComparisonComplex cc;
    cc.cube = cubical_complex(g, max_dim, options);
    cc.path = path_complex(g, max_dim + 1, options.jobs);
    for (unsigned n = 0; n <= max_dim; ++n) {
        cc.psi.push_back(psi_matrix(cc.cube[n].basis, cc.path[n].omega));
        if (n > 0)
            verify_chain_map(cc.path[n].boundary, cc.psi[n], cc.psi[n - 1], cc.cube[n].boundary);
    }
    return cc;
}

namespace {

SparseVector column_of(const IntMatrix& m, std::size_t j)
{
    auto c = m.column(j);
    return {c.begin(), c.end()};
}

// Columns of `cycles` that are independent modulo the column space of
// `boundaries`: a basis of homology representatives.
std::vector<SparseVector> homology_representatives(const IntMatrix& cycles, const IntMatrix& boundaries)
{
    LatticeEchelon e(cycles.rows());
    for (std::size_t j = 0; j < boundaries.cols(); ++j)
        e.insert(column_of(boundaries, j));
    std::vector<SparseVector> reps;
    for (std::size_t j = 0; j < cycles.cols(); ++j)
        if (e.insert(column_of(cycles, j)))
            reps.push_back(column_of(cycles, j));
    return reps;
}

BigInt lcm_of_denominators(const std::vector<BigRational>& v)
{
    BigInt l = 1;
    for (const auto& q : v)
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
    return l;
}

} // namespace

std::vector<InducedMap> compare_theories(const ComparisonComplex& cc, const IntMatrix* top_cube_next,
                                         std::optional<std::size_t> top_cube_betti)
{
    std::vector<InducedMap> out;
    const unsigned max_dim = unsigned(cc.cube.size()) - 1;
    for (unsigned n = 0; n <= max_dim; ++n) {
        const IntMatrix* next = n < max_dim ? &cc.cube[n + 1].boundary : top_cube_next;
        out.push_back(induced_on_homology(cc, n, next, n < max_dim ? std::nullopt : top_cube_betti));
    }
    return out;
}

InducedMap induced_on_homology(const ComparisonComplex& cc, unsigned n, const IntMatrix* cube_next,
                               std::optional<std::size_t> cube_betti_hint)
{
    if (n >= cc.cube.size() || n + 1 >= cc.path.size())
        throw std::invalid_argument("comparison complex too short for dimension " + std::to_string(n));
    InducedMap r;
    r.dim = n;

    // Path side: cycle representatives and dual functionals phi_i with
    // phi_i(boundaries) = 0 and phi_i(rep_j) = delta_ij.
    const IntMatrix& dp = cc.path[n].boundary;
    const IntMatrix& dp_next = cc.path[n + 1].boundary;
    const auto path_reps = homology_representatives(integer_kernel_basis(dp), dp_next);
    r.path_betti = path_reps.size();
    IntMatrix constraints = dp_next;
    for (const auto& z : path_reps)
        constraints.push_column(z);
    const IntMatrix constraints_t = constraints.transpose();
    std::vector<std::vector<BigRational>> phi;
    for (std::size_t i = 0; i < path_reps.size(); ++i) {
        std::vector<BigInt> rhs(constraints.cols(), 0);
        rhs[dp_next.cols() + i] = 1;
        auto sol = solve_in_image(constraints_t, rhs);
        if (!sol)
            throw ContractViolation("path homology representatives are not independent");
        phi.push_back(std::move(sol->x));
    }

    // phi_i o Psi_n is a cocycle on the cubical side; the rank of psi_* is
    // the dimension of their span modulo coboundaries (rows of d_n^Cube).
    const IntMatrix& psi = cc.psi[n];
    const IntMatrix& dc = cc.cube[n].boundary;
    std::vector<std::vector<BigRational>> pulled;
    IntMatrix cochains = dc.transpose();
    const std::size_t coboundary_rank = rank(cochains, Field::rational());
    for (const auto& f : phi) {
        std::vector<BigRational> c(psi.cols(), BigRational(0));
        for (std::size_t j = 0; j < psi.cols(); ++j)
            for (const auto& e : psi.column(j))
                c[j] += f[e.row] * BigRational(e.value);
        const BigInt scale = lcm_of_denominators(c);
        SparseVector col;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0)
                col.push_back({std::uint32_t(j), boost::multiprecision::numerator(c[j] * BigRational(scale))});
        cochains.push_column(std::move(col));
        pulled.push_back(std::move(c));
    }
    r.rank = rank(cochains, Field::rational()) - coboundary_rank;

    if (cube_next) {
        const auto cube_reps = homology_representatives(integer_kernel_basis(dc), *cube_next);
        r.cube_betti = cube_reps.size();
        std::vector<std::vector<BigRational>> m(r.path_betti, std::vector<BigRational>(r.cube_betti));
        for (std::size_t i = 0; i < r.path_betti; ++i)
            for (std::size_t j = 0; j < r.cube_betti; ++j)
                for (const auto& e : cube_reps[j])
                    m[i][j] += pulled[i][e.row] * BigRational(e.value);
        // rank of m must agree with the cochain computation
        IntMatrix mi(r.path_betti, 0);
        for (std::size_t j = 0; j < r.cube_betti; ++j) {
            std::vector<BigRational> col(r.path_betti);
            for (std::size_t i = 0; i < r.path_betti; ++i)
                col[i] = m[i][j];
            const BigInt scale = lcm_of_denominators(col);
            SparseVector sv;
            for (std::size_t i = 0; i < r.path_betti; ++i)
                if (col[i] != 0)
                    sv.push_back({std::uint32_t(i), boost::multiprecision::numerator(col[i] * BigRational(scale))});
            mi.push_column(std::move(sv));
        }
        if (rank(mi, Field::rational()) != r.rank)
            throw ContractViolation("psi_* rank differs between the matrix and the cochain computation");
        r.matrix = std::move(m);
    } else if (cube_betti_hint) {
        r.cube_betti = *cube_betti_hint;
    } else {
        r.cube_betti_known = false;
    }
    return r;
}

std::vector<InducedMap> compare_theories(const Graph& g, unsigned max_dim, const CubicalOptions& options)
{
    const ComparisonComplex cc = comparison_complex(g, max_dim, options.enumeration);
    EnumerationOptions top_options = options.enumeration;
    top_options.cap = std::min(options.enumeration.cap, options.materialize_limit);
    std::optional<IntMatrix> top_next;
    std::optional<std::size_t> top_betti;
    try {
        const CubeBasis top = enumerate_cubes(g, max_dim + 1, top_options);
        top_next = cubical_boundary_matrix(top, cc.cube[max_dim].basis);
    } catch (const ResourceLimit&) {
        const IntMatrix& d = cc.cube[max_dim].boundary;
        const std::size_t nullity = d.cols() - rank(d, Field::rational());
        const StreamedRank sr = streamed_boundary_rank(g, cc.cube[max_dim].basis, nullity, default_prime,
                                                          options.enumeration.cap);
        if (sr.reached_target)
            top_betti = 0;
    }
    return compare_theories(cc, top_next ? &*top_next : nullptr, top_betti);
}

InducedMap induced_on_homology(const Graph& g, unsigned n, const CubicalOptions& options)
{
    return compare_theories(g, n, options).back();
}

WeightFunctional::WeightFunctional(std::array<Vertex, 4> base) : base_(base)
{
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (base[i] == base[j])
                throw std::invalid_argument("base quadrilateral labels must be distinct");
    // Colex positions around the square.
    constexpr std::array<int, 4> cycle{0, 1, 3, 2};
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int k = 0; k < 4; ++k) {
            Tuple t(4);
            for (int i = 0; i < 4; ++i) {
                const int image = reflect ? (k - i + 4) % 4 : (i + k) % 4;
                t[std::size_t(cycle[std::size_t(i)])] = base[std::size_t(cycle[std::size_t(image)])];
            }
            table_.emplace_back(std::move(t), reflect ? -1 : 1);
        }
}

int WeightFunctional::weight(std::span<const Vertex> face) const
{
    if (face.size() != 4)
        return 0;
    for (const auto& [t, w] : table_)
        if (std::equal(t.begin(), t.end(), face.begin()))
            return w;
    return 0;
}

BigInt WeightFunctional::evaluate(const TupleChain& chain) const
{
    BigInt total = 0;
    for (const auto& [t, coef] : chain.terms())
        total += coef * weight(t);
    return total;
}

int dihedral_weight(const WeightFunctional& w, std::span<const Vertex> face) { return w.weight(face); }

Certificate certify_h2(const Graph& g, const TupleChain& theta, const WeightFunctional& w, unsigned jobs)
{
    TupleChain boundary;
    for (const auto& [t, coef] : theta.terms()) {
        if (t.size() != 4 || !is_singular_cube(g, t) || is_degenerate(t))
            throw std::invalid_argument(format_tuple(t) + " is not a non-degenerate 2-cube of the graph");
        boundary.add(boundary_cube(t), coef);
    }
    if (!boundary.is_zero())
        throw std::invalid_argument("theta is not a cycle: boundary " + format_chain(boundary));

    Certificate c;
    c.psi_theta = w.evaluate(theta);
    std::vector<std::uint64_t> checked(g.vertex_count(), 0), bad(g.vertex_count(), 0);
    detail::parallel_for(g.vertex_count(), jobs, [&](std::size_t root) {
        for_each_cube_from(g, 3, Vertex(root), [&](std::span<const Vertex> y) {
            int total = 0;
            for (unsigned i = 1; i <= 3; ++i) {
                const int s = i % 2 ? -1 : 1;
                total += s * w.weight(face(y, i, FaceSign::minus));
                total -= s * w.weight(face(y, i, FaceSign::plus));
            }
            ++checked[root];
            if (total != 0)
                ++bad[root];
            return true;
        });
    });
    for (std::size_t v = 0; v < checked.size(); ++v) {
        c.cubes_checked += checked[v];
        c.violations += bad[v];
    }
    return c;
}

bool certificate_nontrivial_h2(const Graph& g, const TupleChain& theta, const WeightFunctional& w)
{
    return certify_h2(g, theta, w).passed();
}

TupleChain counterexample_theta()
{
    const std::vector<std::pair<int, std::array<Vertex, 4>>> terms = {
        {1, {1, 2, 3, 6}},   {-1, {1, 2, 4, 7}},  {1, {1, 3, 5, 8}},   {-1, {1, 4, 5, 9}},
        {-1, {2, 6, 7, 10}}, {1, {3, 6, 8, 10}}, {-1, {4, 7, 9, 10}}, {1, {5, 8, 9, 10}},
    };
    TupleChain theta;
    for (const auto& [coef, labels] : terms) {
        Tuple t;
        for (Vertex v : labels)
            t.push_back(v - 1);
        theta.add(t, coef);
    }
    return theta;
}

std::array<Vertex, 4> counterexample_base_quad() { return {0, 1, 2, 5}; }

QuadrilateralSystem quadrilateral_system(const Graph& g)
{
    QuadrilateralSystem qs;
    for (const auto& [u, v] : g.edges())
        qs.rows.emplace_back(v, u);
    std::sort(qs.rows.begin(), qs.rows.end());
    std::map<Edge, std::uint32_t> row_of;
    for (std::uint32_t i = 0; i < qs.rows.size(); ++i)
        row_of[qs.rows[i]] = i;
    qs.matrix = IntMatrix(qs.rows.size(), 0);

    for (Vertex a = 0; a < g.vertex_count(); ++a)
        for (Vertex c = 0; c < a; ++c) {
            if (g.adjacent(a, c))
                continue;
            std::vector<Vertex> mids;
            for (Vertex b : g.neighbors(a))
                if (b > c && b < a && g.adjacent(b, c))
                    mids.push_back(b);
            for (std::size_t i = 0; i < mids.size(); ++i)
                for (std::size_t j = i + 1; j < mids.size(); ++j) {
                    const Vertex b = mids[i], d = mids[j];
                    if (g.adjacent(b, d))
                        continue;
                    TupleChain col = TupleChain({a, b, c}) - TupleChain({a, d, c});
                    TupleChain bd;
                    for (const auto& [t, coef] : col.terms())
                        bd.add(boundary_tuple(t), coef);
                    SparseVector entries;
                    for (const auto& [e, coef] : bd.terms()) {
                        auto it = row_of.find({e[0], e[1]});
                        if (it == row_of.end())
                            throw ContractViolation("quadrilateral pair boundary leaves the decreasing edges");
                        entries.push_back({it->second, coef});
                    }
                    normalize(entries);
                    qs.matrix.push_column(std::move(entries));
                    qs.columns.push_back(std::move(col));
                }
        }
    return qs;
}

} // namespace homlab
