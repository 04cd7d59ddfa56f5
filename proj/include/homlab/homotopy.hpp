#pragma once

#include "homlab/chain.hpp"
#include "homlab/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace homlab {

// Maps f_0..f_m : G -> H, read as one map on G x {0..m}.
struct Homotopy {
    std::vector<VertexMap> steps;
};

// True iff every f_j is a homomorphism and f_j(v), f_{j+1}(v) are equal or
// adjacent for every vertex v, i.e. the combined map on the box product of G
// with the path 0-1-...-m is a homomorphism. Throws std::invalid_argument
// when a map has the wrong length or an out-of-range image.
bool verify_homotopy(const Graph& g, const Graph& h, const Homotopy& phi);

// r is a map G -> G fixing `kept`. True iff r lands in kept, restricts to a
// homomorphism G -> G[kept] and moves every vertex to itself or a neighbour.
// Throws std::invalid_argument if r moves a kept vertex or has a bad length.
bool verify_one_step_retraction(const Graph& g, std::span<const Vertex> kept, std::span<const Vertex> r);

// Lexicographically smallest (x, y) with x ~ y and N(x) contained in N[y].
std::optional<Edge> find_fold(const Graph& g);

struct RetractionStep {
    // In the labels of the graph the step acts on.
    std::vector<Vertex> removed;
    VertexMap map;
    // labels[v] is the input-graph label of vertex v of that graph.
    std::vector<Vertex> labels;
};

struct Dismantling {
    Graph core;
    std::vector<RetractionStep> trace;
    // Input-graph label of each core vertex.
    std::vector<Vertex> core_labels;
};

// Folds until none is left.
Dismantling dismantle(const Graph& g);

// Replays the trace from g, checking each step is a one-step deformation
// retraction of the graph it acts on and that the last graph is the core.
bool verify_dismantling(const Graph& g, const Dismantling& d);

// The one-step homotopy [id, i o r] on G for a retraction r.
Homotopy retraction_homotopy(std::span<const Vertex> r);

// f o sigma, or zero when degenerate.
TupleChain push_cube(std::span<const Vertex> f, std::span<const Vertex> labels);
TupleChain push_path(std::span<const Vertex> f, const Tuple& p);
TupleChain push_cubes(std::span<const Vertex> f, const TupleChain& c);
TupleChain push_paths(std::span<const Vertex> f, const TupleChain& c);

// Cubical chain homotopy: h(sigma) = sum_j of the (n+1)-cube whose axis-1
// faces are f_{j-1} o sigma and f_j o sigma. Satisfies
// d h + h d = f_m - f_0. Throws ContractViolation for an invalid homotopy.
TupleChain cubical_prism(const Graph& g, const Graph& h, const Homotopy& phi, std::span<const Vertex> labels);
TupleChain cubical_prism(const Graph& g, const Graph& h, const Homotopy& phi, const TupleChain& c);

// Path chain homotopy:
// h(v_0..v_n) = sum_j sum_k (-1)^k (f_{j-1}(v_0..v_k), f_j(v_k..v_n)).
// The chain version requires c to be a boundary-invariant chain of g and
// checks the result is boundary-invariant in h (ContractViolation if not).
TupleChain path_prism(const Graph& g, const Graph& h, const Homotopy& phi, const Tuple& p);
TupleChain path_prism(const Graph& g, const Graph& h, const Homotopy& phi, const TupleChain& c);

} // namespace homlab
