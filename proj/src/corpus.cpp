#include "homlab/corpus.hpp"

#include "homlab/cubical.hpp"
#include "homlab/errors.hpp"
#include "homlab/graph_io.hpp"
#include "homlab/homotopy.hpp"
#include "homlab/path.hpp"
#include "homlab/psi.hpp"
#include "homlab/report.hpp"

#include <chrono>
#include <fstream>
#include <set>

#ifndef HOMLAB_DATA_DIR
#define HOMLAB_DATA_DIR "data"
#endif

namespace homlab {

using nlohmann::json;

Tier parse_tier(const std::string& text)
{
    if (text == "fast")
        return Tier::fast;
    if (text == "extended")
        return Tier::extended;
    throw ParseError("unknown tier '" + text + "' (fast or extended)");
}

std::string default_corpus_path()
{
    return std::string(HOMLAB_DATA_DIR) + "/corpus.json";
}

namespace {

const std::set<std::string> known_checks = {"cube_counts", "cube_homology", "path_homology", "omega_ranks",
                                            "reduce", "certificate", "quadrilateral_rank", "compare"};

json homology_summary(const std::vector<DimensionReport>& rows)
{
    json betti = json::array();
    json torsion = json::array();
    json methods = json::array();
    for (const auto& d : rows) {
        betti.push_back(d.group.betti);
        json t = json::array();
        for (const auto& x : d.group.torsion)
            t.push_back(x.str());
        torsion.push_back(d.torsion_known ? t : json(nullptr));
        methods.push_back(d.method);
    }
    return {{"betti", betti}, {"torsion", torsion}, {"methods", methods}};
}

bool homology_matches(const json& actual, const json& expected)
{
    if (actual.at("betti") != expected.at("betti"))
        return false;
    if (expected.value("torsion_free", false))
        for (const auto& t : actual.at("torsion"))
            if (!t.is_null() && !t.empty())
                return false;
    return true;
}

TupleChain chain_from_json(const json& j)
{
    TupleChain c;
    for (const auto& term : j)
        c.add(term.at(1).get<Tuple>(), BigInt(term.at(0).get<long long>()));
    return c;
}

json run_check(const CorpusCase& c, const Graph& g, unsigned jobs)
{
    const auto& p = c.params;
    const Coefficients coeff = parse_coefficients(p.value("coefficients", std::string("z")));
    if (c.check == "cube_counts") {
        json out = json::array();
        for (unsigned n : p.at("dims").get<std::vector<unsigned>>())
            out.push_back(count_cubes(g, n, jobs));
        return out;
    }
    if (c.check == "cube_homology") {
        CubicalOptions options;
        options.coefficients = coeff;
        options.enumeration.jobs = jobs;
        return homology_summary(cubical_homology_report(g, p.at("max_dim").get<unsigned>(), options));
    }
    if (c.check == "path_homology")
        return homology_summary(path_homology_report(g, p.at("max_dim").get<unsigned>(), coeff, jobs));
    if (c.check == "omega_ranks") {
        json out = json::array();
        for (unsigned n = 0; n <= p.at("max_dim").get<unsigned>(); ++n)
            out.push_back(omega_basis(g, n, jobs).rank());
        return out;
    }
    if (c.check == "reduce") {
        const auto d = dismantle(g);
        return {{"core_vertices", d.core.vertex_count()},
                {"folds", d.trace.size()},
                {"verified", verify_dismantling(g, d)}};
    }
    if (c.check == "certificate") {
        const TupleChain theta = p.at("theta") == "builtin" ? counterexample_theta() : chain_from_json(p.at("theta"));
        const auto base = p.contains("base") ? p.at("base").get<std::array<Vertex, 4>>() : counterexample_base_quad();
        const auto cert = certify_h2(g, theta, WeightFunctional(base), jobs);
        return {{"psi_theta", cert.psi_theta.str()},
                {"cubes_checked", cert.cubes_checked},
                {"violations", cert.violations},
                {"passed", cert.passed()}};
    }
    if (c.check == "quadrilateral_rank") {
        const auto q = quadrilateral_system(g);
        return {{"rows", q.matrix.rows()}, {"cols", q.matrix.cols()}, {"rank", rank(q.matrix, Field::rational())}};
    }
    if (c.check == "compare") {
        CubicalOptions options;
        options.enumeration.jobs = jobs;
        json out = json::array();
        for (const auto& m : compare_theories(g, p.at("max_dim").get<unsigned>(), options))
            out.push_back(verdict(m));
        return out;
    }
    throw ParseError("unknown check '" + c.check + "'");
}

bool matches(const CorpusCase& c, const json& actual)
{
    if (c.check == "cube_homology" || c.check == "path_homology")
        return homology_matches(actual, c.expected);
    if (c.check == "certificate" || c.check == "reduce" || c.check == "quadrilateral_rank") {
        for (const auto& [key, value] : c.expected.items())
            if (!actual.contains(key) || actual.at(key) != value)
                return false;
        return true;
    }
    return actual == c.expected;
}

} // namespace

std::vector<CorpusCase> parse_corpus(const json& j)
{
    try {
        std::vector<CorpusCase> out;
        std::set<std::string> ids;
        for (const auto& e : j.at("cases")) {
            CorpusCase c;
            c.id = e.at("id").get<std::string>();
            if (!ids.insert(c.id).second)
                throw ParseError("duplicate corpus id '" + c.id + "'");
            c.tier = parse_tier(e.at("tier").get<std::string>());
            c.basis = e.value("basis", std::string());
            c.graph = e.at("graph");
            c.check = e.at("check").get<std::string>();
            if (!known_checks.count(c.check))
                throw ParseError("case '" + c.id + "': unknown check '" + c.check + "'");
            c.params = e.value("params", json::object());
            c.expected = e.at("expected");
            out.push_back(std::move(c));
        }
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed corpus: ") + e.what());
    }
}

std::vector<CorpusCase> load_corpus(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_corpus(j);
}

Graph corpus_graph(const CorpusCase& c)
{
    if (c.graph.is_string())
        return graph_from_generator(c.graph.get<std::string>());
    return graph_from_json(c.graph);
}

CaseResult run_case(const CorpusCase& c, unsigned jobs)
{
    CaseResult r;
    r.id = c.id;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.actual = run_check(c, corpus_graph(c), jobs);
        r.passed = matches(c, r.actual);
    } catch (const std::exception& e) {
        r.error = e.what();
        r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& cases, Tier tier, unsigned jobs,
                                   const std::function<void(const CorpusCase&, const CaseResult&)>& progress)
{
    std::vector<CaseResult> out;
    for (const auto& c : cases) {
        if (tier == Tier::fast && c.tier != Tier::fast)
            continue;
        out.push_back(run_case(c, jobs));
        if (progress)
            progress(c, out.back());
    }
    return out;
}

} // namespace homlab
