#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// image[v] = f(v)
using VertexMap = std::vector<Vertex>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
//
// Besides sorted adjacency lists the graph keeps a bitset of the *closed*
// neighbourhood N[v] of every vertex; the homomorphism enumerators intersect
// these rows to find the admissible labels for a cube vertex.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range ids or self-loops.
    // Duplicate pairs (in either orientation) are stored once.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::string name = {});

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    bool adjacent(Vertex u, Vertex v) const { return u != v && in_closed(u, v); }
    bool adjacent_or_equal(Vertex u, Vertex v) const { return in_closed(u, v); }

    // Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    const std::string& name() const { return name_; }
    Graph renamed(std::string name) const;

    std::size_t bitset_words() const { return words_; }
    const std::uint64_t* closed_row(Vertex v) const { return closed_.data() + std::size_t(v) * words_; }

    // Labeled equality; the name is ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    bool in_closed(Vertex u, Vertex v) const
    {
        return (closed_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint64_t> closed_;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::string name_;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges);

// Named generators. All use canonical labelings documented per function.
Graph edgeless_graph(std::size_t n);
// Z_k: i ~ i+1 mod k, k >= 3.
Graph cycle_graph(std::size_t k);
Graph complete_graph(std::size_t k);
// Path on k >= 1 vertices 0-1-...-(k-1).
Graph path_graph(std::size_t k);
// Q_n: vertex x is the colex index of a 0/1 vector, x ~ x ^ (1 << i).
Graph hypercube_graph(std::size_t n);
// Parts {0..s-1} and {s..s+t-1}.
Graph complete_bipartite_graph(std::size_t s, std::size_t t);
// The 10-vertex, 16-edge quadrilateral polytope graph on which cubical and
// path homology first disagree. Paper label i is stored as vertex i-1.
Graph counterexample_graph();

enum class ProductKind { box, strong, lexicographic };

// Vertex (g, h) is labeled g * |V(h)| + h.
Graph product(ProductKind kind, const Graph& g, const Graph& h);

// Vertices of g keep their labels; vertices of h are shifted by |V(g)|.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_sum(const Graph& g, const Graph& h);
// g * {p}, p = |V(g)|.
Graph cone(const Graph& g);
// g * {p, q} with p, q non-adjacent.
Graph suspension(const Graph& g);

// Subgraph induced on `keep` (any order); vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Throws std::invalid_argument if f has the wrong length or a bad entry.
bool is_graph_hom(const Graph& g, const Graph& h, std::span<const Vertex> f);

// Perfect elimination ordering v_1..v_m: the earlier neighbours of every
// v_j form a clique. Absent iff g is not chordal.
std::optional<std::vector<Vertex>> is_chordal(const Graph& g);
bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order);

// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

std::size_t component_count(const Graph& g);

} // namespace homlab
