#include "homlab/cubical.hpp"

#include "homlab/errors.hpp"
#include "homlab/modp.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace homlab {

unsigned cube_dim(std::span<const Vertex> labels)
{
    if (labels.empty() || !std::has_single_bit(labels.size()))
        throw std::invalid_argument("cube label count " + std::to_string(labels.size()) + " is not a power of two");
    return unsigned(std::countr_zero(labels.size()));
}

Tuple face(std::span<const Vertex> labels, unsigned axis, FaceSign sign)
{
    const unsigned n = cube_dim(labels);
    if (axis < 1 || axis > n)
        throw std::out_of_range("face axis " + std::to_string(axis) + " outside 1.." + std::to_string(n));
    const std::size_t low = (std::size_t(1) << (axis - 1)) - 1;
    const std::size_t bit = sign == FaceSign::plus ? std::size_t(1) << (axis - 1) : 0;
    Tuple out(labels.size() / 2);
    for (std::size_t m = 0; m < out.size(); ++m)
        out[m] = labels[((m & ~low) << 1) | bit | (m & low)];
    return out;
}

bool is_degenerate(std::span<const Vertex> labels)
{
    const unsigned n = cube_dim(labels);
    for (unsigned k = 0; k < n; ++k) {
        const std::size_t b = std::size_t(1) << k;
        bool equal = true;
        for (std::size_t j = 0; j < labels.size() && equal; ++j)
            if (!(j & b) && labels[j] != labels[j | b])
                equal = false;
        if (equal)
            return true;
    }
    return false;
}

bool is_singular_cube(const Graph& g, std::span<const Vertex> labels)
{
    const unsigned n = cube_dim(labels);
    for (Vertex v : labels)
        if (v >= g.vertex_count())
            return false;
    for (std::size_t j = 0; j < labels.size(); ++j)
        for (unsigned k = 0; k < n; ++k)
            if ((j >> k) & 1 && !g.adjacent_or_equal(labels[j], labels[j ^ (std::size_t(1) << k)]))
                return false;
    return true;
}

TupleChain boundary_cube(std::span<const Vertex> labels)
{
    const unsigned n = cube_dim(labels);
    TupleChain out;
    for (unsigned i = 1; i <= n; ++i) {
        const int s = i % 2 ? -1 : 1;
        Tuple minus = face(labels, i, FaceSign::minus);
        Tuple plus = face(labels, i, FaceSign::plus);
        if (minus.size() == 1 || !is_degenerate(minus))
            out.add(minus, s);
        if (plus.size() == 1 || !is_degenerate(plus))
            out.add(plus, -s);
    }
    return out;
}

CubeBasis::CubeBasis(unsigned dim, std::size_t vertex_count)
    : dim_(dim), width_(std::size_t(1) << dim), base_(std::max<std::size_t>(vertex_count, 1))
{
    // packed iff base^width < 2^64
    long double bound = 1;
    for (std::size_t i = 0; i < width_ && bound < 2e19L; ++i)
        bound *= (long double)base_;
    packed_ = bound < 1.8e19L;
}

std::optional<std::uint64_t> CubeBasis::key(std::span<const Vertex> labels) const
{
    if (!packed_)
        return std::nullopt;
    std::uint64_t k = 0;
    for (Vertex v : labels)
        k = k * base_ + v;
    return k;
}

std::optional<std::size_t> CubeBasis::find(std::span<const Vertex> labels) const
{
    if (labels.size() != width_)
        return std::nullopt;
    for (Vertex v : labels)
        if (v >= base_)
            return std::nullopt;
    if (packed_) {
        const std::uint64_t k = *key(labels);
        auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
        if (it == keys_.end() || *it != k)
            return std::nullopt;
        return std::size_t(it - keys_.begin());
    }
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        auto s = (*this)[mid];
        if (std::lexicographical_compare(s.begin(), s.end(), labels.begin(), labels.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size() && std::ranges::equal((*this)[lo], labels))
        return lo;
    return std::nullopt;
}

void CubeBasis::append(std::span<const Vertex> labels)
{
    if (labels.size() != width_)
        throw std::invalid_argument("cube has the wrong number of labels");
    flat_.insert(flat_.end(), labels.begin(), labels.end());
    if (packed_)
        keys_.push_back(*key(labels));
}

void CubeBasis::append(const CubeBasis& other)
{
    flat_.insert(flat_.end(), other.flat_.begin(), other.flat_.end());
    keys_.insert(keys_.end(), other.keys_.begin(), other.keys_.end());
}

void CubeBasis::reserve(std::size_t cubes)
{
    flat_.reserve(cubes * width_);
    if (packed_)
        keys_.reserve(cubes);
}

namespace {

// Depth-first assignment of labels in colex order. Position j is constrained
// by its earlier neighbours j ^ (1 << k), k a set bit of j, so the admissible
// labels are the intersection of their closed neighbourhoods. differ[k] counts
// the pairs along axis k whose labels already differ; axis k is degenerate as
// long as it stays zero.
class CubeSearch {
public:
    CubeSearch(const Graph& g, unsigned n)
        : g_(g), n_(n), width_(std::size_t(1) << n), words_(g.bitset_words()), labels_(width_),
          mask_(width_ * std::max<std::size_t>(words_, 1)), differ_(n, 0)
    {
    }

    // Visits all cubes with labels[0] = root; returns false if visit stopped.
    template <class Visit>
    bool run(Vertex root, Visit&& visit)
    {
        labels_[0] = root;
        if (width_ == 1)
            return visit(std::span<const Vertex>(labels_));
        return step(1, visit);
    }

private:
    template <class Visit>
    bool step(std::size_t j, Visit& visit)
    {
        std::uint64_t* m = mask_.data() + j * words_;
        bool first = true;
        for (unsigned k = 0; k < n_; ++k) {
            if (!((j >> k) & 1))
                continue;
            const std::uint64_t* row = g_.closed_row(labels_[j ^ (std::size_t(1) << k)]);
            if (first) {
                std::copy(row, row + words_, m);
                first = false;
            } else {
                for (std::size_t w = 0; w < words_; ++w)
                    m[w] &= row[w];
            }
        }
        const bool last = j + 1 == width_;
        if (last) {
            // Every axis still degenerate must be broken here.
            for (unsigned k = 0; k < n_; ++k)
                if (differ_[k] == 0) {
                    const Vertex partner = labels_[j ^ (std::size_t(1) << k)];
                    m[partner >> 6] &= ~(std::uint64_t(1) << (partner & 63));
                }
        }
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = m[w];
            while (bits) {
                const Vertex c = Vertex(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                labels_[j] = c;
                if (last) {
                    if (!visit(std::span<const Vertex>(labels_)))
                        return false;
                    continue;
                }
                for (unsigned k = 0; k < n_; ++k)
                    if ((j >> k) & 1 && labels_[j ^ (std::size_t(1) << k)] != c)
                        ++differ_[k];
                const bool go_on = step(j + 1, visit);
                for (unsigned k = 0; k < n_; ++k)
                    if ((j >> k) & 1 && labels_[j ^ (std::size_t(1) << k)] != c)
                        --differ_[k];
                if (!go_on)
                    return false;
            }
        }
        return true;
    }

    const Graph& g_;
    unsigned n_;
    std::size_t width_;
    std::size_t words_;
    std::vector<Vertex> labels_;
    std::vector<std::uint64_t> mask_;
    std::vector<std::uint32_t> differ_;
};

} // namespace

CubeBasis enumerate_cubes(const Graph& g, unsigned n, const EnumerationOptions& options)
{
    if (n >= 6)
        throw ResourceLimit("cube dimension " + std::to_string(n) + " is beyond the supported range");
    std::vector<CubeBasis> per_root(g.vertex_count(), CubeBasis(n, g.vertex_count()));
    std::atomic<std::size_t> total{0};
    detail::parallel_for(g.vertex_count(), options.jobs, [&](std::size_t root) {
        CubeSearch search(g, n);
        CubeBasis& out = per_root[root];
        search.run(Vertex(root), [&](std::span<const Vertex> labels) {
            if (total.fetch_add(1) + 1 > options.cap)
                throw ResourceLimit("more than " + std::to_string(options.cap) + " non-degenerate " +
                                    std::to_string(n) + "-cubes in " + (g.name().empty() ? "graph" : g.name()));
            out.append(labels);
            return true;
        });
    });
    CubeBasis basis(n, g.vertex_count());
    basis.reserve(total.load());
    for (auto& part : per_root)
        basis.append(part);
    return basis;
}

std::uint64_t count_cubes(const Graph& g, unsigned n, unsigned jobs)
{
    if (n >= 6)
        throw ResourceLimit("cube dimension " + std::to_string(n) + " is beyond the supported range");
    std::vector<std::uint64_t> per_root(g.vertex_count(), 0);
    detail::parallel_for(g.vertex_count(), jobs, [&](std::size_t root) {
        CubeSearch search(g, n);
        std::uint64_t c = 0;
        search.run(Vertex(root), [&](std::span<const Vertex>) {
            ++c;
            return true;
        });
        per_root[root] = c;
    });
    std::uint64_t total = 0;
    for (auto c : per_root)
        total += c;
    return total;
}

void for_each_cube(const Graph& g, unsigned n, const std::function<bool(std::span<const Vertex>)>& visit)
{
    if (n >= 6)
        throw ResourceLimit("cube dimension " + std::to_string(n) + " is beyond the supported range");
    CubeSearch search(g, n);
    for (Vertex root = 0; root < g.vertex_count(); ++root)
        if (!search.run(Vertex(root), visit))
            return;
}

void for_each_cube_from(const Graph& g, unsigned n, Vertex root,
                        const std::function<bool(std::span<const Vertex>)>& visit)
{
    if (n >= 6)
        throw ResourceLimit("cube dimension " + std::to_string(n) + " is beyond the supported range");
    if (root >= g.vertex_count())
        throw std::out_of_range("root vertex out of range");
    CubeSearch search(g, n);
    search.run(root, visit);
}

SparseVector cube_boundary_column(const CubeBasis& faces, std::span<const Vertex> labels)
{
    const unsigned n = cube_dim(labels);
    SparseVector col;
    for (unsigned i = 1; i <= n; ++i) {
        const int s = i % 2 ? -1 : 1;
        for (FaceSign sign : {FaceSign::minus, FaceSign::plus}) {
            Tuple f = face(labels, i, sign);
            if (f.size() > 1 && is_degenerate(f))
                continue;
            auto idx = faces.find(f);
            if (!idx)
                throw ContractViolation("face " + format_tuple(f) + " missing from the (n-1)-cube basis");
            col.push_back({std::uint32_t(*idx), BigInt(sign == FaceSign::minus ? s : -s)});
        }
    }
    normalize(col);
    return col;
}

IntMatrix cubical_boundary_matrix(const CubeBasis& cubes, const CubeBasis& faces)
{
    if (cubes.dim() == 0)
        return IntMatrix(0, cubes.size());
    IntMatrix d(faces.size(), 0);
    for (std::size_t j = 0; j < cubes.size(); ++j)
        d.push_column(cube_boundary_column(faces, cubes[j]));
    return d;
}

std::vector<CubicalSlice> cubical_complex(const Graph& g, unsigned max_dim, const EnumerationOptions& options)
{
    std::vector<CubicalSlice> slices;
    for (unsigned n = 0; n <= max_dim; ++n) {
        CubicalSlice s;
        s.dim = n;
        s.basis = enumerate_cubes(g, n, options);
        s.boundary = n == 0 ? IntMatrix(0, s.basis.size()) : cubical_boundary_matrix(s.basis, slices.back().basis);
        if (n > 0)
            verify_composable(slices.back().boundary, s.boundary);
        slices.push_back(std::move(s));
    }
    return slices;
}

namespace {

// Adds the prime factors of x to `known`; nullopt when x has a factor above 2^16
// left after trial division.
std::optional<std::vector<std::uint32_t>> small_prime_factors(BigInt x, std::vector<std::uint32_t> known)
{
    if (x < 0)
        x = -x;
    for (std::uint32_t q = 2; q < 65536 && x > 1; ++q)
        if (x % q == 0) {
            if (std::find(known.begin(), known.end(), q) == known.end())
                known.push_back(q);
            while (x % q == 0)
                x /= q;
        }
    if (x > 1)
        return std::nullopt;
    return known;
}

} // namespace

StreamedRank streamed_boundary_rank(const Graph& g, const CubeBasis& faces, std::size_t target, std::uint32_t p,
                                    std::uint64_t cap, bool keep_columns)
{
    StreamedRank out;
    out.independent = IntMatrix(faces.size(), 0);
    ModPColumnReducer reducer(faces.size(), p);
    if (target == 0) {
        out.reached_target = true;
        return out;
    }
    std::vector<ModPEntry> col;
    for_each_cube(g, faces.dim() + 1, [&](std::span<const Vertex> labels) {
        col.clear();
        auto column = cube_boundary_column(faces, labels);
        for (const auto& e : column)
            col.emplace_back(e.row, e.value.convert_to<std::int64_t>());
        if (++out.columns > cap)
            throw ResourceLimit("rank not settled after " + std::to_string(cap) + " streamed " +
                                std::to_string(faces.dim() + 1) + "-cubes");
        if (reducer.add_column(col) && keep_columns)
            out.independent.push_column(std::move(column));
        return reducer.rank() < target;
    });
    out.rank = reducer.rank();
    out.reached_target = out.rank >= target;
    return out;
}

std::vector<DimensionReport> cubical_homology_report(const Graph& g, unsigned max_dim, const CubicalOptions& options)
{
    auto slices = cubical_complex(g, max_dim, options.enumeration);
    std::vector<IntMatrix> d;
    for (const auto& s : slices)
        d.push_back(s.boundary);

    EnumerationOptions top_options = options.enumeration;
    top_options.cap = std::min(options.enumeration.cap, options.materialize_limit);
    std::optional<CubeBasis> top;
    try {
        top = enumerate_cubes(g, max_dim + 1, top_options);
    } catch (const ResourceLimit&) {
        if (max_dim + 1 >= 6)
            throw;
    }
    if (top) {
        d.push_back(cubical_boundary_matrix(*top, slices.back().basis));
        return homology_report(d, options.coefficients);
    }

    // Top boundary too large to hold: rank it mod p on the fly.
    auto reports = homology_report(d, options.coefficients);
    const std::size_t top_rank = reports.empty() ? 0 : reports.back().next_rank;
    DimensionReport r;
    r.dim = max_dim;
    r.generators = slices.back().basis.size();
    r.boundary_rank = top_rank;
    const std::size_t nullity = r.generators - top_rank;
    const std::uint32_t p =
        options.coefficients.kind == Coefficients::Kind::mod_p ? options.coefficients.p : default_prime;
    const bool integers = options.coefficients.kind == Coefficients::Kind::integers;
    StreamedRank sr = streamed_boundary_rank(g, slices.back().basis, nullity, p, options.enumeration.cap,
                                             integers && nullity <= options.certify_limit);
    r.next_rank = sr.rank;
    r.group.betti = nullity - sr.rank;
    r.torsion_known = !integers;
    r.method = "streamed_mod_p";
    if (integers && sr.reached_target && nullity == 0) {
        r.torsion_known = true;
    } else if (integers && sr.reached_target && sr.independent.cols() > 0) {
        // The independent columns span a sublattice L of ker d_n of full rank,
        // so |H_n| divides [ker d_n : L], the product of the Smith factors of L.
        // A prime p of that product is ruled out when
        // rank_p d_{n+1} = nullity_p d_n - #(p-torsion of H_{n-1}).
        const auto s = snf(sr.independent);
        std::optional<std::vector<std::uint32_t>> primes = std::vector<std::uint32_t>{};
        for (const auto& x : s.diagonal)
            if (x != 1 && primes) {
                primes = small_prime_factors(x, *primes);
            }
        if (s.rank == nullity && primes) {
            bool clean = true;
            for (std::uint32_t q : *primes) {
                std::size_t below = 0;
                if (!reports.empty())
                    for (const auto& t : reports.back().group.torsion)
                        below += t % q == 0;
                const std::size_t nullity_q = d.back().cols() - rank(d.back(), Field::mod(q));
                const StreamedRank sq =
                    streamed_boundary_rank(g, slices.back().basis, nullity_q - below, q, options.enumeration.cap);
                clean = clean && sq.reached_target;
            }
            r.torsion_known = clean;
        }
    }
    reports.push_back(std::move(r));
    return reports;
}

HomologyGroup cubical_homology(const Graph& g, unsigned n, const CubicalOptions& options)
{
    return cubical_homology_report(g, n, options).back().group;
}

void write_cube_basis(std::ostream& out, const CubeBasis& basis, bool one_based)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        out << format_tuple(basis.tuple(i), one_based) << '\n';
}

} // namespace homlab
