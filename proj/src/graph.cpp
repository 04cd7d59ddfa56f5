#include "homlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace homlab {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string name)
{
    if (n > std::numeric_limits<Vertex>::max())
        throw std::invalid_argument("graph too large");
    Graph g;
    g.adjacency_.resize(n);
    g.name_ = std::move(name);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for " + std::to_string(n) + " vertices");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;

    g.words_ = (n + 63) / 64;
    g.closed_.assign(n * g.words_, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::uint64_t* row = g.closed_.data() + std::size_t(v) * g.words_;
        row[v >> 6] |= std::uint64_t{1} << (v & 63);
        for (Vertex u : g.adjacency_[v])
            row[u >> 6] |= std::uint64_t{1} << (u & 63);
    }
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::renamed(std::string name) const
{
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges)
{
    return Graph::from_edges(n, edges);
}

Graph edgeless_graph(std::size_t n)
{
    return Graph::from_edges(n, {}, "E_" + std::to_string(n));
}

Graph cycle_graph(std::size_t k)
{
    if (k < 3)
        throw std::invalid_argument("cycle graph needs k >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i)
        edges.emplace_back(i, Vertex((i + 1) % k));
    return Graph::from_edges(k, edges, "Z_" + std::to_string(k));
}

Graph complete_graph(std::size_t k)
{
    if (k < 1)
        throw std::invalid_argument("complete graph needs k >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(k, edges, "K_" + std::to_string(k));
}

Graph path_graph(std::size_t k)
{
    if (k < 1)
        throw std::invalid_argument("path graph needs k >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < k; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(k, edges, "P_" + std::to_string(k));
}

Graph hypercube_graph(std::size_t n)
{
    if (n > 20)
        throw std::invalid_argument("hypercube dimension too large");
    const std::size_t size = std::size_t{1} << n;
    std::vector<Edge> edges;
    for (Vertex x = 0; x < size; ++x)
        for (std::size_t i = 0; i < n; ++i) {
            Vertex y = x ^ (Vertex{1} << i);
            if (x < y)
                edges.emplace_back(x, y);
        }
    return Graph::from_edges(size, edges, "Q_" + std::to_string(n));
}

Graph complete_bipartite_graph(std::size_t s, std::size_t t)
{
    if (s < 1 || t < 1)
        throw std::invalid_argument("complete bipartite graph needs s, t >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < s; ++i)
        for (Vertex j = 0; j < t; ++j)
            edges.emplace_back(i, Vertex(s + j));
    return Graph::from_edges(s + t, edges, "K_" + std::to_string(s) + "," + std::to_string(t));
}

Graph counterexample_graph()
{
    static constexpr int paper_edges[16][2] = {
        {1, 2}, {1, 3}, {1, 4},  {1, 5},  {2, 6},  {2, 7},  {3, 6},  {3, 8},
        {4, 7}, {4, 9}, {5, 8},  {5, 9},  {6, 10}, {7, 10}, {8, 10}, {9, 10},
    };
    std::vector<Edge> edges;
    for (auto& e : paper_edges)
        edges.emplace_back(Vertex(e[0] - 1), Vertex(e[1] - 1));
    return Graph::from_edges(10, edges, "counterexample10");
}

Graph product(ProductKind kind, const Graph& g, const Graph& h)
{
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("product of an empty graph");
    const std::size_t nh = h.vertex_count();
    const std::size_t n = g.vertex_count() * nh;
    auto label = [nh](Vertex a, Vertex b) { return Vertex(a * nh + b); };

    std::vector<Edge> edges;
    for (Vertex x = 0; x < n; ++x) {
        const Vertex g1 = x / nh, h1 = x % nh;
        for (Vertex y = x + 1; y < n; ++y) {
            const Vertex g2 = y / nh, h2 = y % nh;
            const bool g_eq = g1 == g2, h_eq = h1 == h2;
            const bool g_adj = g.adjacent(g1, g2), h_adj = h.adjacent(h1, h2);
            bool edge = false;
            switch (kind) {
            case ProductKind::box:
                edge = (g_eq && h_adj) || (h_eq && g_adj);
                break;
            case ProductKind::strong:
                edge = (g_eq && h_adj) || (g_adj && h_eq) || (g_adj && h_adj);
                break;
            case ProductKind::lexicographic:
                edge = g_adj || (g_eq && h_adj);
                break;
            }
            if (edge)
                edges.emplace_back(label(g1, h1), label(g2, h2));
        }
    }
    static constexpr const char* symbol[] = {" box ", " strong ", " lex "};
    return Graph::from_edges(n, edges, g.name() + symbol[int(kind)] + h.name());
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross, std::string name)
{
    const std::size_t ng = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges())
        edges.emplace_back(Vertex(u + ng), Vertex(v + ng));
    if (cross)
        for (Vertex u = 0; u < ng; ++u)
            for (Vertex v = 0; v < h.vertex_count(); ++v)
                edges.emplace_back(u, Vertex(v + ng));
    return Graph::from_edges(ng + h.vertex_count(), edges, std::move(name));
}

} // namespace

Graph join(const Graph& g, const Graph& h)
{
    return combine(g, h, true, g.name() + " * " + h.name());
}

Graph disjoint_sum(const Graph& g, const Graph& h)
{
    return combine(g, h, false, g.name() + " + " + h.name());
}

Graph cone(const Graph& g)
{
    return combine(g, edgeless_graph(1), true, "cone(" + g.name() + ")");
}

Graph suspension(const Graph& g)
{
    return combine(g, edgeless_graph(2), true, "susp(" + g.name() + ")");
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> position(g.vertex_count(), absent);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.vertex_count() || position[keep[i]] != absent)
            throw std::invalid_argument("induced_subgraph: bad or repeated vertex");
        position[keep[i]] = Vertex(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (position[u] != absent && position[v] != absent)
            edges.emplace_back(position[u], position[v]);
    return Graph::from_edges(keep.size(), edges, g.name());
}

bool is_graph_hom(const Graph& g, const Graph& h, std::span<const Vertex> f)
{
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("vertex map size does not match the domain");
    for (Vertex x : f)
        if (x >= h.vertex_count())
            throw std::invalid_argument("vertex map image out of range");
    for (auto [u, v] : g.edges())
        if (!h.adjacent_or_equal(f[u], f[v]))
            return false;
    return true;
}

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order)
{
    const std::size_t n = g.vertex_count();
    if (order.size() != n)
        return false;
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || position[order[i]] != n)
            return false;
        position[order[i]] = i;
    }
    std::vector<Vertex> earlier;
    for (std::size_t j = 0; j < n; ++j) {
        earlier.clear();
        for (Vertex u : g.neighbors(order[j]))
            if (position[u] < j)
                earlier.push_back(u);
        for (std::size_t a = 0; a < earlier.size(); ++a)
            for (std::size_t b = a + 1; b < earlier.size(); ++b)
                if (!g.adjacent(earlier[a], earlier[b]))
                    return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> is_chordal(const Graph& g)
{
    // Maximum cardinality search; ties go to the lowest vertex id.
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v)
            if (!visited[v] && (!found || weight[v] > weight[best])) {
                best = v;
                found = true;
            }
        visited[best] = true;
        order.push_back(best);
        for (Vertex u : g.neighbors(best))
            if (!visited[u])
                ++weight[u];
    }
    if (!is_perfect_elimination_ordering(g, order))
        return std::nullopt;
    return order;
}

std::optional<std::size_t> girth(const Graph& g)
{
    // BFS from every vertex; a non-tree edge (u, w) closes a cycle of length
    // dist[u] + dist[w] + 1, and the minimum over all roots is exact.
    const std::size_t n = g.vertex_count();
    std::optional<std::size_t> best;
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        parent[root] = unseen;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    std::size_t len = dist[u] + dist[w] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

std::size_t component_count(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::size_t count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        ++count;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

} // namespace homlab
