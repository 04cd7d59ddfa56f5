#pragma once

// Slow, independent reference computations used to check the library.

#include "homlab/chain.hpp"
#include "homlab/graph.hpp"
#include "homlab/linalg.hpp"

#include <random>
#include <vector>

namespace oracle {

using homlab::BigInt;
using homlab::BigRational;
using homlab::Graph;
using homlab::Tuple;
using homlab::Vertex;

using Dense = std::vector<std::vector<BigInt>>;

Dense to_dense(const homlab::IntMatrix& m);

// Textbook Smith form: repeatedly move the smallest nonzero entry to the
// corner and clear its row and column, then fix divisibility.
std::vector<BigInt> smith_diagonal(Dense a);

std::size_t rational_rank(const Dense& a);
// Dense Gaussian elimination modulo a 61-bit prime.
std::size_t modular_rank(const Dense& a);

// Every sequence in V^(2^n) tested for being a non-degenerate homomorphism.
std::vector<Tuple> all_cubes(const Graph& g, unsigned n);

// Every sequence in V^(n+1) with consecutive entries adjacent.
std::vector<Tuple> all_allowed(const Graph& g, unsigned n);

// d over all tuples, non-degenerate faces only; rows indexed by `faces`,
// which must contain every face that occurs.
Dense boundary_over(const std::vector<Tuple>& cells, const std::vector<Tuple>& faces,
                    bool cube_faces);

// Every (n-1)-tuple of distinct-consecutive vertices that occurs as a path
// face of some allowed n-path (allowed or not).
std::vector<Tuple> path_faces(const std::vector<Tuple>& allowed);

// dim Omega_n = |A_n| - rank(projection of d onto non-allowed tuples).
std::size_t omega_dimension(const Graph& g, unsigned n);

// Path Betti numbers 0..max_dim over Q, from dense ranks only.
std::vector<std::size_t> path_betti(const Graph& g, unsigned max_dim);
// Cubical Betti numbers 0..max_dim over Q from brute-force cubes.
std::vector<std::size_t> cube_betti(const Graph& g, unsigned max_dim);

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);
// Random graph with girth >= 5 by greedy edge insertion.
Graph random_girth5_graph(std::mt19937_64& rng, std::size_t n, std::size_t attempts);

} // namespace oracle
