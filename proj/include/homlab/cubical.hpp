#pragma once

#include "homlab/chain.hpp"
#include "homlab/complex.hpp"
#include "homlab/graph.hpp"
#include "homlab/linalg.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace homlab {

// A singular n-cube is stored as its 2^n labels: position i holds the image of
// the Q_n vertex whose colex index is i, i.e. bit k of i is coordinate k+1.

enum class FaceSign { minus, plus };

// n for a label sequence of length 2^n; throws std::invalid_argument otherwise.
unsigned cube_dim(std::span<const Vertex> labels);

// Restriction to coordinate `axis` (1-based) = 0 (minus) or 1 (plus).
// Throws std::out_of_range for a bad axis.
Tuple face(std::span<const Vertex> labels, unsigned axis, FaceSign sign);

bool is_degenerate(std::span<const Vertex> labels);

// True iff the labels define a graph homomorphism Q_n -> g.
bool is_singular_cube(const Graph& g, std::span<const Vertex> labels);

// sum_i (-1)^i (f_i^- - f_i^+), degenerate faces dropped.
TupleChain boundary_cube(std::span<const Vertex> labels);

// Sorted list of n-cubes with logarithmic lookup. When |V|^(2^n) fits in 64
// bits the label sequences are also kept as packed base-|V| keys, whose
// numeric order is the lexicographic order.
class CubeBasis {
public:
    CubeBasis() = default;
    CubeBasis(unsigned dim, std::size_t vertex_count);

    unsigned dim() const { return dim_; }
    std::size_t width() const { return width_; }
    std::size_t size() const { return width_ ? flat_.size() / width_ : 0; }
    std::span<const Vertex> operator[](std::size_t i) const { return {flat_.data() + i * width_, width_}; }
    Tuple tuple(std::size_t i) const { auto s = (*this)[i]; return {s.begin(), s.end()}; }

    std::optional<std::size_t> find(std::span<const Vertex> labels) const;

    // Labels must arrive in strictly increasing lexicographic order.
    void append(std::span<const Vertex> labels);
    void append(const CubeBasis& other);
    void reserve(std::size_t cubes);

private:
    std::optional<std::uint64_t> key(std::span<const Vertex> labels) const;

    unsigned dim_ = 0;
    std::size_t width_ = 1;
    std::uint64_t base_ = 1;
    bool packed_ = false;
    std::vector<Vertex> flat_;
    std::vector<std::uint64_t> keys_;
};

struct EnumerationOptions {
    std::size_t cap = 50'000'000;
    unsigned jobs = 1;
};

// Non-degenerate n-cubes in lexicographic order of their label sequences.
// Throws ResourceLimit when more than options.cap cubes exist.
CubeBasis enumerate_cubes(const Graph& g, unsigned n, const EnumerationOptions& options = {});

std::uint64_t count_cubes(const Graph& g, unsigned n, unsigned jobs = 1);

// Calls visit on every non-degenerate n-cube in lexicographic order, without
// storing them. Returning false from visit stops the walk.
void for_each_cube(const Graph& g, unsigned n, const std::function<bool(std::span<const Vertex>)>& visit);
// Same, restricted to cubes whose first label is `root`.
void for_each_cube_from(const Graph& g, unsigned n, Vertex root,
                        const std::function<bool(std::span<const Vertex>)>& visit);

// Column of d_n for one n-cube in the basis of (n-1)-cubes.
SparseVector cube_boundary_column(const CubeBasis& faces, std::span<const Vertex> labels);
IntMatrix cubical_boundary_matrix(const CubeBasis& cubes, const CubeBasis& faces);

struct CubicalSlice {
    unsigned dim = 0;
    CubeBasis basis;
    // C_n -> C_{n-1}; no rows for n = 0.
    IntMatrix boundary;
};

// Slices 0..max_dim, with d d = 0 checked.
std::vector<CubicalSlice> cubical_complex(const Graph& g, unsigned max_dim, const EnumerationOptions& options = {});

struct StreamedRank {
    std::size_t rank = 0;
    std::uint64_t columns = 0;
    bool reached_target = false;
    // With keep_columns: the integer columns that raised the rank mod p.
    IntMatrix independent;
};

// Rank over GF(p) of d_{n+1}, fed cube by cube. Stops as soon as the rank
// reaches `target` (normally nullity(d_n), the largest rank possible).
// Throws ResourceLimit once more than `cap` columns were needed.
StreamedRank streamed_boundary_rank(const Graph& g, const CubeBasis& faces, std::size_t target,
                                    std::uint32_t p = default_prime, std::uint64_t cap = UINT64_MAX,
                                    bool keep_columns = false);

struct CubicalOptions {
    EnumerationOptions enumeration;
    Coefficients coefficients;
    // Above this many (max_dim+1)-cubes the top boundary is streamed mod p
    // instead of being materialized.
    std::size_t materialize_limit = 200'000;
    // Over Z, a streamed top rank that reaches nullity(d_n) is confirmed
    // torsion-free by a Smith form of the independent columns when there are
    // at most this many of them.
    std::size_t certify_limit = 5'000;
};

std::vector<DimensionReport> cubical_homology_report(const Graph& g, unsigned max_dim,
                                                     const CubicalOptions& options = {});
HomologyGroup cubical_homology(const Graph& g, unsigned n, const CubicalOptions& options = {});

// One label sequence per line.
void write_cube_basis(std::ostream& out, const CubeBasis& basis, bool one_based = true);

} // namespace homlab
