#pragma once

#include "homlab/chain.hpp"
#include "homlab/cubical.hpp"
#include "homlab/graph.hpp"
#include "homlab/linalg.hpp"
#include "homlab/path.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace homlab {

// Monotone path through Q_n: step i flips coordinate perm[i] (1-based) from 0
// to 1. verts holds colex indices, verts[0] = 0 and verts[n] = 2^n - 1.
struct PermPath {
    unsigned n = 0;
    std::vector<unsigned> perm;
    std::vector<std::size_t> verts;
};

// Throws std::invalid_argument if perm is not a permutation of 1..n.
PermPath perm_path(unsigned n, std::span<const unsigned> perm);

// +1 or -1.
int permutation_sign(std::span<const unsigned> perm);

// sum over permutations tau of sign(tau) sigma o p_tau, degenerate paths dropped.
TupleChain psi_cube(std::span<const Vertex> labels);

// Psi_n : C_n^Cube -> Omega_n, columns in Omega coordinates.
IntMatrix psi_matrix(const CubeBasis& cubes, const OmegaBasis& omega);

// Cubical slices 0..max_dim, path slices 0..max_dim+1 and Psi_0..Psi_max_dim,
// with the chain-map identity d Psi_n = Psi_{n-1} d checked for n >= 1.
struct ComparisonComplex {
    std::vector<CubicalSlice> cube;
    std::vector<PathSlice> path;
    std::vector<IntMatrix> psi;
};
ComparisonComplex comparison_complex(const Graph& g, unsigned max_dim, const EnumerationOptions& options = {});

// Throws ContractViolation unless d_path * psi_n == psi_{n-1} * d_cube.
void verify_chain_map(const IntMatrix& d_path, const IntMatrix& psi_n, const IntMatrix& psi_nm1,
                      const IntMatrix& d_cube);

// psi_* : H_n^Cube -> H_n^Path over Q.
struct InducedMap {
    unsigned dim = 0;
    std::size_t cube_betti = 0;
    std::size_t path_betti = 0;
    // Rank of psi_*. Always computed; it only needs d_n^Cube and the path side.
    std::size_t rank = 0;
    // path_betti x cube_betti in the chosen cycle representatives; absent
    // when the cubical (n+1)-boundary was not available.
    std::optional<std::vector<std::vector<BigRational>>> matrix;
    bool cube_betti_known = true;

    bool surjective() const { return rank == path_betti; }
    bool injective() const { return cube_betti_known && rank == cube_betti; }
    bool isomorphism() const { return injective() && surjective(); }
};

// `cube_next` is d_{n+1}^Cube if available. cube_betti is taken from it or,
// when absent, from `cube_betti_hint` (cube_betti_known false without either).
InducedMap induced_on_homology(const ComparisonComplex& cc, unsigned n, const IntMatrix* cube_next,
                               std::optional<std::size_t> cube_betti_hint = std::nullopt);

// psi_* in every dimension 0..max_dim of cc. The top cubical boundary (or
// just the top cubical Betti number) is passed in separately.
std::vector<InducedMap> compare_theories(const ComparisonComplex& cc, const IntMatrix* top_cube_next,
                                         std::optional<std::size_t> top_cube_betti = std::nullopt);
// Builds everything from g; a top cubical boundary above the materialize
// limit is replaced by a streamed mod-p rank.
std::vector<InducedMap> compare_theories(const Graph& g, unsigned max_dim, const CubicalOptions& options = {});
InducedMap induced_on_homology(const Graph& g, unsigned n, const CubicalOptions& options = {});

// Signed indicator of the eight dihedral relabelings of a quadrilateral:
// +1 on rotations, -1 on reflections, 0 on every other 2-cube.
class WeightFunctional {
public:
    // base is read in colex order, so its square is base[0]-base[1]-base[3]-base[2].
    // Throws std::invalid_argument unless the four labels are distinct.
    explicit WeightFunctional(std::array<Vertex, 4> base);

    const std::array<Vertex, 4>& base() const { return base_; }
    // The supported label sequences with their weights, rotations first.
    const std::vector<std::pair<Tuple, int>>& table() const { return table_; }

    int weight(std::span<const Vertex> face) const;
    BigInt evaluate(const TupleChain& chain) const;

private:
    std::array<Vertex, 4> base_;
    std::vector<std::pair<Tuple, int>> table_;
};

int dihedral_weight(const WeightFunctional& w, std::span<const Vertex> face);

struct Certificate {
    BigInt psi_theta;
    std::uint64_t cubes_checked = 0;
    // 3-cubes y with Psi(d y) != 0
    std::uint64_t violations = 0;

    bool passed() const { return psi_theta != 0 && violations == 0; }
};

// Checks Psi(theta) != 0 and Psi(d y) = 0 for every non-degenerate 3-cube y,
// which shows theta is a cycle that is not a boundary. Throws
// std::invalid_argument when theta is not a cycle of non-degenerate 2-cubes of g.
Certificate certify_h2(const Graph& g, const TupleChain& theta, const WeightFunctional& w, unsigned jobs = 1);
bool certificate_nontrivial_h2(const Graph& g, const TupleChain& theta, const WeightFunctional& w);

// The 8-term 2-cycle on counterexample_graph() wrapping its quadrilateral
// faces, and the face {0,1,2,5} used as the default base.
TupleChain counterexample_theta();
std::array<Vertex, 4> counterexample_base_quad();

// Homogeneous system for 2-chains made of quadrilateral boundary pairs
// (a,b,c) - (a,d,c) with a > b, d > c (b < d), one per 4-cycle a-b-c-d whose
// largest and smallest vertices are opposite. Rows are the decreasing edges
// (x, y), x > y, in lexicographic order.
struct QuadrilateralSystem {
    std::vector<Edge> rows;
    std::vector<TupleChain> columns;
    IntMatrix matrix;
};
QuadrilateralSystem quadrilateral_system(const Graph& g);

} // namespace homlab
