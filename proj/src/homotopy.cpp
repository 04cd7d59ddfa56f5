#include "homlab/homotopy.hpp"

#include "homlab/cubical.hpp"
#include "homlab/errors.hpp"
#include "homlab/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace homlab {

namespace {

void check_map(const Graph& g, const Graph& h, std::span<const Vertex> f)
{
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("map has " + std::to_string(f.size()) + " entries for " +
                                    std::to_string(g.vertex_count()) + " vertices");
    for (Vertex v : f)
        if (v >= h.vertex_count())
            throw std::invalid_argument("map image " + std::to_string(v) + " out of range");
}

bool is_degenerate_path(const Tuple& t)
{
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1])
            return true;
    return false;
}

bool all_allowed(const Graph& g, const TupleChain& c)
{
    for (const auto& [t, coef] : c.terms())
        if (!is_allowed(g, t))
            return false;
    return true;
}

} // namespace

bool verify_homotopy(const Graph& g, const Graph& h, const Homotopy& phi)
{
    for (const auto& f : phi.steps)
        check_map(g, h, f);
    for (const auto& f : phi.steps)
        if (!is_graph_hom(g, h, f))
            return false;
    for (std::size_t j = 0; j + 1 < phi.steps.size(); ++j)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!h.adjacent_or_equal(phi.steps[j][v], phi.steps[j + 1][v]))
                return false;
    return true;
}

bool verify_one_step_retraction(const Graph& g, std::span<const Vertex> kept, std::span<const Vertex> r)
{
    check_map(g, g, r);
    std::vector<bool> in_kept(g.vertex_count(), false);
    for (Vertex v : kept) {
        if (v >= g.vertex_count())
            throw std::invalid_argument("kept vertex " + std::to_string(v) + " out of range");
        if (r[v] != v)
            throw std::invalid_argument("retraction moves kept vertex " + std::to_string(v));
        in_kept[v] = true;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!in_kept[r[v]] || !g.adjacent_or_equal(v, r[v]))
            return false;
    return is_graph_hom(g, g, r);
}

std::optional<Edge> find_fold(const Graph& g)
{
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y : g.neighbors(x)) {
            bool dominated = true;
            for (Vertex w : g.neighbors(x))
                if (!g.adjacent_or_equal(w, y)) {
                    dominated = false;
                    break;
                }
            if (dominated)
                return Edge{x, y};
        }
    return std::nullopt;
}

Dismantling dismantle(const Graph& g)
{
    Dismantling out;
    Graph current = g;
    std::vector<Vertex> labels(g.vertex_count());
    for (Vertex v = 0; v < labels.size(); ++v)
        labels[v] = v;
    while (auto fold = find_fold(current)) {
        const auto [x, y] = *fold;
        RetractionStep step;
        step.removed = {x};
        step.map.resize(current.vertex_count());
        for (Vertex v = 0; v < current.vertex_count(); ++v)
            step.map[v] = v == x ? y : v;
        step.labels = labels;
        std::vector<Vertex> keep;
        std::vector<Vertex> next_labels;
        for (Vertex v = 0; v < current.vertex_count(); ++v)
            if (v != x) {
                keep.push_back(v);
                next_labels.push_back(labels[v]);
            }
        current = induced_subgraph(current, keep);
        labels = std::move(next_labels);
        out.trace.push_back(std::move(step));
    }
    out.core = current.renamed(g.name().empty() ? std::string() : g.name() + "/core");
    out.core_labels = std::move(labels);
    return out;
}

bool verify_dismantling(const Graph& g, const Dismantling& d)
{
    Graph current = g;
    for (const auto& step : d.trace) {
        if (step.map.size() != current.vertex_count())
            return false;
        std::vector<bool> removed(current.vertex_count(), false);
        for (Vertex v : step.removed) {
            if (v >= current.vertex_count())
                return false;
            removed[v] = true;
        }
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < current.vertex_count(); ++v)
            if (!removed[v])
                keep.push_back(v);
        try {
            if (!verify_one_step_retraction(current, keep, step.map))
                return false;
        } catch (const std::invalid_argument&) {
            return false;
        }
        if (!verify_homotopy(current, current, retraction_homotopy(step.map)))
            return false;
        current = induced_subgraph(current, keep);
    }
    return current == d.core;
}

Homotopy retraction_homotopy(std::span<const Vertex> r)
{
    VertexMap id(r.size());
    for (Vertex v = 0; v < id.size(); ++v)
        id[v] = v;
    return {{id, VertexMap(r.begin(), r.end())}};
}

TupleChain push_cube(std::span<const Vertex> f, std::span<const Vertex> labels)
{
    Tuple t(labels.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = f[labels[i]];
    if (t.size() > 1 && is_degenerate(t))
        return {};
    return TupleChain(std::move(t));
}

TupleChain push_path(std::span<const Vertex> f, const Tuple& p)
{
    Tuple t(p.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = f[p[i]];
    if (is_degenerate_path(t))
        return {};
    return TupleChain(std::move(t));
}

TupleChain push_cubes(std::span<const Vertex> f, const TupleChain& c)
{
    TupleChain out;
    for (const auto& [t, coef] : c.terms())
        out.add(push_cube(f, t), coef);
    return out;
}

TupleChain push_paths(std::span<const Vertex> f, const TupleChain& c)
{
    TupleChain out;
    for (const auto& [t, coef] : c.terms())
        out.add(push_path(f, t), coef);
    return out;
}

TupleChain cubical_prism(const Graph& g, const Graph& h, const Homotopy& phi, std::span<const Vertex> labels)
{
    if (!verify_homotopy(g, h, phi))
        throw ContractViolation("not a homotopy");
    TupleChain out;
    Tuple prism(labels.size() * 2);
    for (std::size_t j = 1; j < phi.steps.size(); ++j) {
        for (std::size_t q = 0; q < labels.size(); ++q) {
            prism[2 * q] = phi.steps[j - 1][labels[q]];
            prism[2 * q + 1] = phi.steps[j][labels[q]];
        }
        if (!is_degenerate(prism))
            out.add(prism, 1);
    }
    return out;
}

TupleChain cubical_prism(const Graph& g, const Graph& h, const Homotopy& phi, const TupleChain& c)
{
    TupleChain out;
    for (const auto& [t, coef] : c.terms())
        out.add(cubical_prism(g, h, phi, std::span<const Vertex>(t)), coef);
    return out;
}

TupleChain path_prism(const Graph& g, const Graph& h, const Homotopy& phi, const Tuple& p)
{
    return path_prism(g, h, phi, TupleChain(p));
}

TupleChain path_prism(const Graph& g, const Graph& h, const Homotopy& phi, const TupleChain& c)
{
    if (!verify_homotopy(g, h, phi))
        throw ContractViolation("not a homotopy");
    TupleChain dc;
    for (const auto& [p, coef] : c.terms())
        dc.add(boundary_tuple(p), coef);
    if (!all_allowed(g, c) || !all_allowed(g, dc))
        throw std::invalid_argument("path prism input " + format_chain(c) + " is not boundary-invariant");
    TupleChain out;
    for (const auto& [p, coef] : c.terms()) {
        const std::size_t n = p.size() - 1;
        Tuple t(n + 2);
        for (std::size_t j = 1; j < phi.steps.size(); ++j)
            for (std::size_t k = 0; k <= n; ++k) {
                for (std::size_t i = 0; i <= k; ++i)
                    t[i] = phi.steps[j - 1][p[i]];
                for (std::size_t i = k; i <= n; ++i)
                    t[i + 1] = phi.steps[j][p[i]];
                if (!is_degenerate_path(t))
                    out.add(t, k % 2 ? -coef : coef);
            }
    }
    if (!all_allowed(h, out))
        throw ContractViolation("path prism produced a path that is not allowed");
    TupleChain boundary;
    for (const auto& [t, coef] : out.terms())
        boundary.add(boundary_tuple(t), coef);
    if (!all_allowed(h, boundary))
        throw ContractViolation("path prism of " + format_chain(c) + " is not boundary-invariant");
    return out;
}

} // namespace homlab
