#include "homlab/corpus.hpp"
#include "homlab/cubical.hpp"
#include "homlab/errors.hpp"
#include "homlab/graph_io.hpp"
#include "homlab/homotopy.hpp"
#include "homlab/path.hpp"
#include "homlab/psi.hpp"
#include "homlab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace homlab;
using nlohmann::json;

namespace {

enum Exit { ok = 0, mismatch = 1, bad_input = 2, over_cap = 3 };

unsigned default_jobs()
{
    if (const char* env = std::getenv("HOMLAB_JOBS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0)
                return unsigned(n);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring HOMLAB_JOBS=" << env << "\n";
    }
    return 1;
}

// A readable file, or a generator spec such as cycle:5.
Graph load_input(const std::string& input)
{
    if (std::filesystem::exists(input))
        return load_graph_file(input);
    try {
        return graph_from_generator(input);
    } catch (const ParseError&) {
        throw ParseError("'" + input + "' is neither a readable file nor a generator spec");
    }
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void dump_bases(const std::string& dir, const Graph& g, Theory theory, unsigned max_dim,
                const EnumerationOptions& options, unsigned jobs)
{
    std::filesystem::create_directories(dir);
    const auto path_of = [&](const std::string& stem) { return (std::filesystem::path(dir) / stem).string(); };
    if (theory != Theory::path)
        for (const auto& s : cubical_complex(g, max_dim, options)) {
            std::ofstream basis(path_of("cube_" + std::to_string(s.dim) + ".txt"));
            write_cube_basis(basis, s.basis);
            std::ofstream mm(path_of("cube_boundary_" + std::to_string(s.dim) + ".mtx"));
            write_matrix_market(mm, s.boundary);
        }
    if (theory != Theory::cube)
        for (const auto& s : path_complex(g, max_dim, jobs)) {
            std::ofstream basis(path_of("omega_" + std::to_string(s.dim) + ".txt"));
            write_omega_basis(basis, s.omega);
            std::ofstream mm(path_of("path_boundary_" + std::to_string(s.dim) + ".mtx"));
            write_matrix_market(mm, s.boundary);
        }
}

struct Common {
    std::string input;
    unsigned max_dim = 2;
    unsigned jobs = default_jobs();
    std::size_t cap = EnumerationOptions{}.cap;
    bool json_only = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_dim)
{
    cmd->add_option("input", c.input, "graph file (JSON or edge list) or generator spec, e.g. cycle:5")->required();
    if (with_dim)
        cmd->add_option("--max-dim", c.max_dim, "highest homology dimension")->capture_default_str();
    cmd->add_option("--jobs", c.jobs, "worker threads (default HOMLAB_JOBS or 1)")->check(CLI::PositiveNumber);
    cmd->add_option("--cap", c.cap, "largest number of cubes enumerated in one dimension")->capture_default_str();
    cmd->add_flag("--json", c.json_only, "print only the JSON report, no table on stderr");
}

int cmd_homology(const Common& c, const std::string& theory_text, const std::string& coeff_text, bool reduce,
                 const std::string& dump_dir)
{
    const auto start = std::chrono::steady_clock::now();
    const Theory theory = parse_theory(theory_text);
    const Coefficients coeff = parse_coefficients(coeff_text);
    const Graph input = load_input(c.input);

    RunReport r;
    r.graph = input.name().empty() ? c.input : input.name();
    r.vertices = input.vertex_count();
    r.edges = input.edge_count();
    r.theory = theory;
    r.coefficients = coeff.name();
    r.max_dim = c.max_dim;

    Graph g = input;
    if (reduce) {
        const auto d = dismantle(input);
        r.reduction = summarize(input, d);
        g = d.core;
    }
    CubicalOptions options;
    options.coefficients = coeff;
    options.enumeration = {c.cap, c.jobs};
    if (theory != Theory::path)
        r.cube = cubical_homology_report(g, c.max_dim, options);
    if (theory != Theory::cube)
        r.path = path_homology_report(g, c.max_dim, coeff, c.jobs);
    if (!dump_dir.empty())
        dump_bases(dump_dir, g, theory, c.max_dim, options.enumeration, c.jobs);
    r.wall_seconds = seconds_since(start);
    check_report(r);

    std::cout << to_json(r).dump(2) << "\n";
    if (!c.json_only)
        write_table(std::cerr, r);
    return ok;
}

int cmd_compare(const Common& c)
{
    const auto start = std::chrono::steady_clock::now();
    const Graph g = load_input(c.input);
    CubicalOptions options;
    options.enumeration = {c.cap, c.jobs};
    CompareReport r;
    r.graph = g.name().empty() ? c.input : g.name();
    r.max_dim = c.max_dim;
    r.maps = compare_theories(g, c.max_dim, options);
    r.wall_seconds = seconds_since(start);
    std::cout << to_json(r).dump(2) << "\n";
    if (!c.json_only)
        write_table(std::cerr, r);
    return ok;
}

int cmd_reduce(const Common& c)
{
    const Graph g = load_input(c.input);
    const auto d = dismantle(g);
    if (!verify_dismantling(g, d))
        throw ContractViolation("fold trace failed to replay");
    json out = {{"graph", g.name().empty() ? c.input : g.name()},
                {"trace", to_json(summarize(g, d))},
                {"core", graph_to_json(d.core)}};
    std::cout << out.dump(2) << "\n";
    if (!c.json_only)
        std::cerr << d.trace.size() << " folds, core has " << d.core.vertex_count() << " vertices and "
                  << d.core.edge_count() << " edges\n";
    return ok;
}

TupleChain parse_theta(const std::string& text, bool one_based)
{
    std::string body = text;
    if (std::filesystem::exists(text)) {
        std::ifstream in(text);
        std::ostringstream s;
        s << in.rdbuf();
        body = s.str();
    }
    TupleChain theta;
    try {
        for (const auto& term : json::parse(body)) {
            auto labels = term.at(1).get<Tuple>();
            for (auto& v : labels) {
                if (one_based && v == 0)
                    throw ParseError("label 0 in a 1-based chain");
                v -= one_based ? 1 : 0;
            }
            theta.add(labels, BigInt(term.at(0).get<long long>()));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("theta must be a JSON list of [coef, [labels]]: ") + e.what());
    }
    return theta;
}

int cmd_certify(const Common& c, const std::string& theta_text, std::vector<Vertex> base, bool one_based)
{
    const Graph g = load_input(c.input);
    const TupleChain theta = theta_text.empty() ? counterexample_theta() : parse_theta(theta_text, one_based);
    std::array<Vertex, 4> quad = counterexample_base_quad();
    if (!base.empty()) {
        if (base.size() != 4)
            throw ParseError("--base takes exactly four labels");
        for (std::size_t i = 0; i < 4; ++i) {
            if (one_based && base[i] == 0)
                throw ParseError("label 0 in a 1-based quadrilateral");
            quad[i] = base[i] - (one_based ? 1 : 0);
        }
    }
    const auto start = std::chrono::steady_clock::now();
    const auto cert = certify_h2(g, theta, WeightFunctional(quad), c.jobs);
    json out = {{"graph", g.name().empty() ? c.input : g.name()},
                {"theta", format_chain(theta)},
                {"psi_theta", cert.psi_theta.str()},
                {"cubes_checked", cert.cubes_checked},
                {"violations", cert.violations},
                {"passed", cert.passed()},
                {"wall_seconds", seconds_since(start)}};
    std::cout << out.dump(2) << "\n";
    if (!c.json_only)
        std::cerr << "Psi(theta) = " << cert.psi_theta << ", " << cert.violations << " of " << cert.cubes_checked
                  << " 3-cubes with Psi(d y) != 0: " << (cert.passed() ? "PASS" : "FAIL") << "\n";
    return cert.passed() ? ok : mismatch;
}

int cmd_corpus(const std::string& tier_text, const std::string& expected, unsigned jobs, bool json_only)
{
    const Tier tier = parse_tier(tier_text);
    const auto cases = load_corpus(expected.empty() ? default_corpus_path() : expected);
    const auto results = run_corpus(cases, tier, jobs, [&](const CorpusCase& c, const CaseResult& r) {
        if (json_only)
            return;
        std::cerr << (r.passed ? "pass " : "FAIL ") << c.id << " (" << std::fixed << std::setprecision(2)
                  << r.seconds << " s)";
        if (!r.error.empty())
            std::cerr << ": " << r.error;
        else if (!r.passed)
            std::cerr << ": expected " << c.expected.dump() << ", got " << r.actual.dump();
        std::cerr << "\n";
    });
    json out = json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        failed += !r.passed;
        json e = {{"id", r.id}, {"passed", r.passed}, {"actual", r.actual}, {"seconds", r.seconds}};
        if (!r.error.empty())
            e["error"] = r.error;
        out.push_back(e);
    }
    std::cout << json{{"tier", tier_text}, {"failed", failed}, {"cases", out}}.dump(2) << "\n";
    if (!json_only)
        std::cerr << results.size() - failed << "/" << results.size() << " cases passed\n";
    return failed ? mismatch : ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cubical and path homology of graphs"};
    app.require_subcommand(1);

    Common common;
    std::string theory = "both";
    std::string coeff = "z";
    std::string dump_dir;
    bool reduce = false;
    auto* homology = app.add_subcommand("homology", "homology groups of a graph");
    add_common(homology, common, true);
    homology->add_option("--theory", theory, "cube, path or both")->capture_default_str();
    homology->add_option("--coeff", coeff, "z, q, mod_p or mod_<prime>")->capture_default_str();
    homology->add_flag("--reduce", reduce, "dismantle by folds first");
    homology->add_option("--dump", dump_dir, "write bases and boundary matrices into this directory");

    auto* compare = app.add_subcommand("compare", "psi_* from cubical to path homology");
    add_common(compare, common, true);

    auto* reduce_cmd = app.add_subcommand("reduce", "fold trace and core");
    add_common(reduce_cmd, common, false);

    std::string theta;
    std::vector<Vertex> base;
    bool one_based = false;
    auto* certify = app.add_subcommand("certify", "check a 2-cycle is not a cubical boundary");
    add_common(certify, common, false);
    certify->add_option("--theta", theta, "JSON [[coef, [labels]], ...] or a file holding it; default the built-in cycle");
    certify->add_option("--base", base, "four labels of the weight quadrilateral")->expected(4);
    certify->add_flag("--one-based", one_based, "labels in --theta and --base start at 1");

    std::string tier = "fast";
    std::string expected;
    unsigned corpus_jobs = default_jobs();
    bool corpus_json = false;
    auto* corpus = app.add_subcommand("corpus", "run the built-in examples against expected values");
    corpus->add_option("--tier", tier, "fast or extended")->capture_default_str();
    corpus->add_option("--expected", expected, "expected-value file to use instead of the built-in one");
    corpus->add_option("--jobs", corpus_jobs, "worker threads")->check(CLI::PositiveNumber);
    corpus->add_flag("--json", corpus_json, "no progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*homology)
            return cmd_homology(common, theory, coeff, reduce, dump_dir);
        if (*compare)
            return cmd_compare(common);
        if (*reduce_cmd)
            return cmd_reduce(common);
        if (*certify)
            return cmd_certify(common, theta, base, one_based);
        return cmd_corpus(tier, expected, corpus_jobs, corpus_json);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return over_cap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
