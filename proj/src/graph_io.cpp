#include "homlab/graph_io.hpp"

#include "homlab/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace homlab {

using nlohmann::json;

Graph graph_from_json(const json& j)
{
    try {
        if (!j.is_object())
            throw ParseError("graph JSON must be an object");
        const auto n = j.at("vertices").get<std::int64_t>();
        if (n < 0)
            throw ParseError("negative vertex count");
        std::vector<Edge> edges;
        for (const auto& e : j.value("edges", json::array())) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("edge entries must be [u, v] pairs");
            const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
            if (u < 0 || v < 0)
                throw ParseError("negative vertex id");
            edges.emplace_back(Vertex(u), Vertex(v));
        }
        return Graph::from_edges(std::size_t(n), edges, j.value("name", std::string{}));
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    json j = {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.name().empty())
        j["name"] = g.name();
    return j;
}

Graph graph_from_edge_list(std::istream& in, std::string name)
{
    std::string line;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#' || first == "c")
            continue;
        if (first == "p") {
            long long count = -1;
            if (n || !(fields >> count) || count < 0)
                throw ParseError("line " + std::to_string(line_no) + ": bad 'p <n>' header");
            n = std::size_t(count);
            continue;
        }
        if (!n)
            throw ParseError("edge list must start with a 'p <n>' header");
        long long u = -1, v = -1;
        std::istringstream pair(line);
        std::string rest;
        if (!(pair >> u >> v) || u < 0 || v < 0 || (pair >> rest))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        edges.emplace_back(Vertex(u), Vertex(v));
    }
    if (!n)
        throw ParseError("edge list must start with a 'p <n>' header");
    try {
        return Graph::from_edges(*n, edges, std::move(name));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "p " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

Graph parse_graph(std::string_view text, std::string name)
{
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text[start] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("graph JSON: ") + e.what());
        }
        Graph g = graph_from_json(j);
        return g.name().empty() && !name.empty() ? g.renamed(std::move(name)) : g;
    }
    std::istringstream in{std::string(text)};
    return graph_from_edge_list(in, std::move(name));
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto slash = path.find_last_of('/');
    std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
    return parse_graph(buffer.str(), stem);
}

namespace {

std::vector<std::size_t> parse_args(std::string_view args)
{
    std::vector<std::size_t> out;
    while (!args.empty()) {
        auto comma = args.find(',');
        auto token = args.substr(0, comma);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("bad generator argument '" + std::string(token) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        args.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

Graph graph_from_generator(std::string_view spec)
{
    auto colon = spec.find(':');
    std::string_view kind = spec.substr(0, colon);
    std::vector<std::size_t> args =
        colon == std::string_view::npos ? std::vector<std::size_t>{} : parse_args(spec.substr(colon + 1));
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw ParseError("generator '" + std::string(kind) + "' takes " + std::to_string(count) +
                             " argument(s)");
    };
    try {
        if (kind == "counterexample10") {
            need(0);
            return counterexample_graph();
        }
        if (kind == "cycle") {
            need(1);
            return cycle_graph(args[0]);
        }
        if (kind == "complete") {
            need(1);
            return complete_graph(args[0]);
        }
        if (kind == "path") {
            need(1);
            return path_graph(args[0]);
        }
        if (kind == "hypercube") {
            need(1);
            return hypercube_graph(args[0]);
        }
        if (kind == "bipartite") {
            need(2);
            return complete_bipartite_graph(args[0], args[1]);
        }
        if (kind == "edgeless") {
            need(1);
            return edgeless_graph(args[0]);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown generator '" + std::string(kind) + "'");
}

} // namespace homlab
