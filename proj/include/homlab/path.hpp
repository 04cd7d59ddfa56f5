#pragma once

#include "homlab/chain.hpp"
#include "homlab/complex.hpp"
#include "homlab/graph.hpp"
#include "homlab/lattice.hpp"
#include "homlab/linalg.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace homlab {

// Non-degenerate allowed n-paths (consecutive vertices adjacent), in
// lexicographic order.
std::vector<Tuple> enumerate_allowed(const Graph& g, unsigned n);

bool is_allowed(const Graph& g, const Tuple& p);

// sum_i (-1)^i (v_0,...,v_i^,...,v_n), degenerate tuples dropped. The result
// can contain tuples that are not allowed. Zero for a single vertex.
TupleChain boundary_tuple(const Tuple& p);

// The boundary-invariant paths Omega_n, as integer vectors over the allowed
// n-paths. Columns are echelonized: each has a distinct largest support index
// (its key), and columns are sorted by key.
class OmegaBasis {
public:
    OmegaBasis() = default;
    OmegaBasis(unsigned dim, std::vector<Tuple> ambient, IntMatrix vectors);

    unsigned dim() const { return dim_; }
    const std::vector<Tuple>& ambient() const { return ambient_; }
    const IntMatrix& vectors() const { return vectors_; }
    std::size_t rank() const { return vectors_.cols(); }

    std::optional<std::size_t> ambient_index(const Tuple& p) const;
    TupleChain vector_chain(std::size_t k) const;

    // Ambient coordinates of a chain; nullopt if some tuple is not allowed.
    std::optional<SparseVector> to_ambient(const TupleChain& c) const;
    // Coordinates in the Omega basis; nullopt when c is not in Omega_n.
    std::optional<std::vector<BigRational>> coordinates(const TupleChain& c) const;
    // Same, but integral coordinates are required (Omega_n is saturated, so
    // any integer chain in it has them); throws ContractViolation otherwise.
    SparseVector integer_coordinates(const TupleChain& c) const;

private:
    unsigned dim_ = 0;
    std::vector<Tuple> ambient_;
    IntMatrix vectors_;
    LatticeEchelon echelon_{0};
};

OmegaBasis omega_basis(const Graph& g, unsigned n, unsigned jobs = 1);

struct PathSlice {
    unsigned dim = 0;
    OmegaBasis omega;
    // Omega_n -> Omega_{n-1} in Omega coordinates; no rows for n = 0.
    IntMatrix boundary;
};

// Slices 0..max_dim, with d d = 0 checked.
std::vector<PathSlice> path_complex(const Graph& g, unsigned max_dim, unsigned jobs = 1);

std::vector<DimensionReport> path_homology_report(const Graph& g, unsigned max_dim,
                                                  Coefficients c = Coefficients::integers(), unsigned jobs = 1);
HomologyGroup path_homology(const Graph& g, unsigned n, Coefficients c = Coefficients::integers());

// One basis vector per line as a signed combination of tuples.
void write_omega_basis(std::ostream& out, const OmegaBasis& omega, bool one_based = true);

} // namespace homlab
