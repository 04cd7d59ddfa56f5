#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

Dense to_dense(const homlab::IntMatrix& m)
{
    Dense a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j))
            a[e.row][j] = e.value;
    return a;
}

std::vector<BigInt> smith_diagonal(Dense a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero entry in the remaining block
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                goto done;
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (!clean)
                continue;
            // the pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
done:
    return diag;
}

std::size_t rational_rank(const Dense& dense)
{
    std::vector<std::vector<BigRational>> a;
    for (const auto& row : dense)
        a.emplace_back(row.begin(), row.end());
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            const BigRational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

constexpr std::uint64_t big_prime = 2305843009213693951ULL; // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b)
{
    return std::uint64_t((unsigned __int128)a * b % big_prime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t to_mod(const BigInt& v)
{
    BigInt r = v % big_prime;
    if (r < 0)
        r += big_prime;
    return r.convert_to<std::uint64_t>();
}

} // namespace

std::size_t modular_rank(const Dense& dense)
{
    const std::size_t rows = dense.size();
    const std::size_t cols = rows ? dense[0].size() : 0;
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = to_mod(dense[i][j]);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[r], a[p]);
        const std::uint64_t inv = powmod(a[r][c], big_prime - 2);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            const std::uint64_t f = mulmod(a[i][c], inv);
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = (a[i][j] + big_prime - mulmod(f, a[r][j])) % big_prime;
        }
        ++r;
    }
    return r;
}

namespace {

Tuple cube_face(const Tuple& labels, unsigned axis, unsigned side)
{
    Tuple out;
    for (std::size_t q = 0; q < labels.size(); ++q)
        if (((q >> (axis - 1)) & 1) == side)
            out.push_back(labels[q]);
    return out;
}

unsigned log2_size(std::size_t len)
{
    unsigned n = 0;
    while ((std::size_t(1) << n) < len)
        ++n;
    return n;
}

bool cube_degenerate(const Tuple& labels)
{
    const unsigned n = log2_size(labels.size());
    for (unsigned i = 1; i <= n; ++i)
        if (cube_face(labels, i, 0) == cube_face(labels, i, 1))
            return true;
    return false;
}

bool path_degenerate(const Tuple& t)
{
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1])
            return true;
    return false;
}

std::map<Tuple, BigInt> faces_of(const Tuple& cell, bool cube)
{
    std::map<Tuple, BigInt> out;
    if (cube) {
        const unsigned n = log2_size(cell.size());
        for (unsigned i = 1; i <= n; ++i) {
            const int sign = i % 2 ? -1 : 1;
            for (unsigned side = 0; side < 2; ++side) {
                Tuple f = cube_face(cell, i, side);
                if (n == 1 || !cube_degenerate(f))
                    out[f] += side == 0 ? sign : -sign;
            }
        }
    } else if (cell.size() > 1) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
            Tuple f = cell;
            f.erase(f.begin() + std::ptrdiff_t(i));
            if (!path_degenerate(f))
                out[f] += i % 2 ? -1 : 1;
        }
    }
    return out;
}

} // namespace

std::vector<Tuple> all_cubes(const Graph& g, unsigned n)
{
    const std::size_t len = std::size_t(1) << n;
    const std::size_t v = g.vertex_count();
    std::vector<Tuple> out;
    Tuple t(len, 0);
    while (true) {
        bool hom = true;
        for (std::size_t q = 0; q < len && hom; ++q)
            for (unsigned k = 0; k < n; ++k) {
                const std::size_t r = q ^ (std::size_t(1) << k);
                if (!g.adjacent_or_equal(t[q], t[r])) {
                    hom = false;
                    break;
                }
            }
        if (hom && (n == 0 || !cube_degenerate(t)))
            out.push_back(t);
        std::size_t i = len;
        while (i > 0 && ++t[i - 1] == v)
            t[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

std::vector<Tuple> all_allowed(const Graph& g, unsigned n)
{
    std::vector<Tuple> out;
    Tuple t(n + 1, 0);
    const std::size_t v = g.vertex_count();
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            ok = ok && g.adjacent(t[i], t[i + 1]);
        if (ok)
            out.push_back(t);
        std::size_t i = t.size();
        while (i > 0 && ++t[i - 1] == v)
            t[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

Dense boundary_over(const std::vector<Tuple>& cells, const std::vector<Tuple>& faces, bool cube_faces)
{
    std::map<Tuple, std::size_t> row;
    for (std::size_t i = 0; i < faces.size(); ++i)
        row[faces[i]] = i;
    Dense a(faces.size(), std::vector<BigInt>(cells.size()));
    for (std::size_t j = 0; j < cells.size(); ++j)
        for (const auto& [f, c] : faces_of(cells[j], cube_faces))
            if (c != 0)
                a.at(row.at(f))[j] += c;
    return a;
}

std::vector<Tuple> path_faces(const std::vector<Tuple>& allowed)
{
    std::vector<Tuple> out;
    for (const auto& p : allowed)
        for (const auto& [f, c] : faces_of(p, false))
            out.push_back(f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// rank of d restricted to the given rows
std::size_t rank_of_rows(const Dense& d, const std::vector<bool>& keep)
{
    Dense sub;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (keep[i])
            sub.push_back(d[i]);
    return modular_rank(sub);
}

struct PathDims {
    std::size_t allowed = 0;
    std::size_t omega = 0;
    std::size_t kernel = 0;
};

PathDims path_dims(const Graph& g, unsigned n)
{
    PathDims out;
    const auto a = all_allowed(g, n);
    out.allowed = a.size();
    if (n == 0) {
        out.omega = out.kernel = a.size();
        return out;
    }
    const auto faces = path_faces(a);
    const Dense d = boundary_over(a, faces, false);
    std::vector<bool> non_allowed(faces.size()), all(faces.size(), true);
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t k = 0; k + 1 < faces[i].size(); ++k)
            if (!g.adjacent(faces[i][k], faces[i][k + 1]))
                non_allowed[i] = true;
    out.omega = a.size() - rank_of_rows(d, non_allowed);
    out.kernel = a.size() - rank_of_rows(d, all);
    return out;
}

} // namespace

std::size_t omega_dimension(const Graph& g, unsigned n)
{
    return path_dims(g, n).omega;
}

std::vector<std::size_t> path_betti(const Graph& g, unsigned max_dim)
{
    std::vector<std::size_t> out;
    PathDims cur = path_dims(g, 0);
    for (unsigned n = 0; n <= max_dim; ++n) {
        const PathDims next = path_dims(g, n + 1);
        out.push_back(cur.kernel - (next.omega - next.kernel));
        cur = next;
    }
    return out;
}

std::vector<std::size_t> cube_betti(const Graph& g, unsigned max_dim)
{
    std::vector<std::vector<Tuple>> cubes;
    for (unsigned n = 0; n <= max_dim + 1; ++n)
        cubes.push_back(all_cubes(g, n));
    std::vector<std::size_t> ranks(max_dim + 3, 0);
    for (unsigned n = 1; n <= max_dim + 1; ++n)
        ranks[n] = modular_rank(boundary_over(cubes[n], cubes[n - 1], true));
    std::vector<std::size_t> out;
    for (unsigned n = 0; n <= max_dim; ++n)
        out.push_back(cubes[n].size() - ranks[n] - ranks[n + 1]);
    return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::vector<homlab::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (double(rng() % 1000000) / 1e6 < p)
                edges.push_back({u, v});
    return homlab::make_graph(n, edges);
}

Graph random_girth5_graph(std::mt19937_64& rng, std::size_t n, std::size_t attempts)
{
    std::vector<homlab::Edge> edges;
    Graph g = homlab::make_graph(n, edges);
    for (std::size_t k = 0; k < attempts; ++k) {
        const Vertex u = Vertex(rng() % n), v = Vertex(rng() % n);
        if (u == v || g.adjacent(u, v))
            continue;
        edges.push_back({std::min(u, v), std::max(u, v)});
        Graph h = homlab::make_graph(n, edges);
        const auto gi = homlab::girth(h);
        if (gi && *gi < 5)
            edges.pop_back();
        else
            g = h;
    }
    return g;
}

} // namespace oracle
