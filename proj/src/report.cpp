#include "homlab/report.hpp"

#include "homlab/errors.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace homlab {

using nlohmann::json;

std::string theory_name(Theory t)
{
    switch (t) {
    case Theory::cube:
        return "cube";
    case Theory::path:
        return "path";
    case Theory::both:
        break;
    }
    return "both";
}

Theory parse_theory(const std::string& text)
{
    if (text == "cube")
        return Theory::cube;
    if (text == "path")
        return Theory::path;
    if (text == "both")
        return Theory::both;
    throw ParseError("unknown theory '" + text + "' (cube, path or both)");
}

ReductionSummary summarize(const Graph& g, const Dismantling& d)
{
    ReductionSummary s;
    s.original_vertices = g.vertex_count();
    s.core_vertices = d.core.vertex_count();
    s.core_labels = d.core_labels;
    for (const auto& step : d.trace)
        for (Vertex x : step.removed)
            s.folds.push_back({step.labels[x], step.labels[step.map[x]]});
    return s;
}

void check_report(const RunReport& r)
{
    for (const auto* side : {&r.cube, &r.path})
        for (const auto& d : *side)
            if (d.generators < d.boundary_rank + d.next_rank ||
                d.group.betti != d.generators - d.boundary_rank - d.next_rank)
                throw ContractViolation("betti in dimension " + std::to_string(d.dim) +
                                        " is not nullity minus the next rank");
}

namespace {

template <class F>
auto parsing(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

BigInt big_from_json(const json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    const auto text = j.get<std::string>();
    try {
        return BigInt(text);
    } catch (const std::exception&) {
        throw ParseError("not an integer: " + text);
    }
}

std::string format_rational(const BigRational& q)
{
    std::ostringstream s;
    s << q;
    return s.str();
}

} // namespace

json to_json(const ReductionSummary& s)
{
    json folds = json::array();
    for (const auto& f : s.folds)
        folds.push_back({f.removed, f.target});
    return {{"original_vertices", s.original_vertices},
            {"core_vertices", s.core_vertices},
            {"folds", folds},
            {"core_labels", s.core_labels}};
}

ReductionSummary reduction_from_json(const json& j)
{
    return parsing([&] {
        ReductionSummary s;
        s.original_vertices = j.at("original_vertices").get<std::size_t>();
        s.core_vertices = j.at("core_vertices").get<std::size_t>();
        for (const auto& f : j.at("folds"))
            s.folds.push_back({f.at(0).get<Vertex>(), f.at(1).get<Vertex>()});
        s.core_labels = j.at("core_labels").get<std::vector<Vertex>>();
        return s;
    });
}

json to_json(const DimensionReport& d)
{
    json torsion = json::array();
    for (const auto& t : d.group.torsion)
        torsion.push_back(t.str());
    return {{"dim", d.dim},
            {"generators", d.generators},
            {"boundary_rank", d.boundary_rank},
            {"next_rank", d.next_rank},
            {"betti", d.group.betti},
            {"torsion", torsion},
            {"torsion_known", d.torsion_known},
            {"method", d.method}};
}

DimensionReport dimension_from_json(const json& j)
{
    return parsing([&] {
        DimensionReport d;
        d.dim = j.at("dim").get<unsigned>();
        d.generators = j.at("generators").get<std::size_t>();
        d.boundary_rank = j.at("boundary_rank").get<std::size_t>();
        d.next_rank = j.at("next_rank").get<std::size_t>();
        d.group.betti = j.at("betti").get<std::size_t>();
        for (const auto& t : j.at("torsion"))
            d.group.torsion.push_back(big_from_json(t));
        d.torsion_known = j.at("torsion_known").get<bool>();
        d.method = j.at("method").get<std::string>();
        return d;
    });
}

json to_json(const RunReport& r)
{
    json j = {{"graph", r.graph},
              {"vertices", r.vertices},
              {"edges", r.edges},
              {"theory", theory_name(r.theory)},
              {"coefficients", r.coefficients},
              {"max_dim", r.max_dim},
              {"wall_seconds", r.wall_seconds}};
    for (const auto& [key, side] : {std::pair{"cube", &r.cube}, std::pair{"path", &r.path}}) {
        json rows = json::array();
        for (const auto& d : *side)
            rows.push_back(to_json(d));
        j[key] = rows;
    }
    j["reduction"] = r.reduction ? to_json(*r.reduction) : json(nullptr);
    return j;
}

RunReport run_report_from_json(const json& j)
{
    return parsing([&] {
        RunReport r;
        r.graph = j.at("graph").get<std::string>();
        r.vertices = j.at("vertices").get<std::size_t>();
        r.edges = j.at("edges").get<std::size_t>();
        r.theory = parse_theory(j.at("theory").get<std::string>());
        r.coefficients = j.at("coefficients").get<std::string>();
        r.max_dim = j.at("max_dim").get<unsigned>();
        r.wall_seconds = j.at("wall_seconds").get<double>();
        for (const auto& d : j.at("cube"))
            r.cube.push_back(dimension_from_json(d));
        for (const auto& d : j.at("path"))
            r.path.push_back(dimension_from_json(d));
        if (!j.at("reduction").is_null())
            r.reduction = reduction_from_json(j.at("reduction"));
        return r;
    });
}

namespace {

std::string group_text(const DimensionReport& d)
{
    std::string s;
    if (d.group.betti == 1)
        s = "Z";
    else if (d.group.betti > 1)
        s = "Z^" + std::to_string(d.group.betti);
    for (const auto& t : d.group.torsion)
        s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
    if (s.empty())
        s = "0";
    if (!d.torsion_known)
        s += " (torsion unchecked)";
    return s;
}

} // namespace

void write_table(std::ostream& out, const RunReport& r)
{
    out << r.graph << ": " << r.vertices << " vertices, " << r.edges << " edges, coefficients "
        << r.coefficients << "\n";
    if (r.reduction)
        out << "reduced by " << r.reduction->folds.size() << " folds to " << r.reduction->core_vertices
            << " vertices\n";
    out << std::left << std::setw(7) << "theory" << std::setw(5) << "dim" << std::setw(12) << "generators"
        << std::setw(8) << "rank d" << std::setw(10) << "rank d+1" << std::setw(7) << "betti"
        << "group\n";
    for (const auto& [label, side] : {std::pair{"cube", &r.cube}, std::pair{"path", &r.path}})
        for (const auto& d : *side)
            out << std::setw(7) << label << std::setw(5) << d.dim << std::setw(12) << d.generators
                << std::setw(8) << d.boundary_rank << std::setw(10) << d.next_rank << std::setw(7)
                << d.group.betti << group_text(d) << "\n";
    out << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
    out.copyfmt(std::ios(nullptr));
}

std::string verdict(const InducedMap& m)
{
    if (m.isomorphism())
        return "iso";
    if (m.surjective())
        return "surjective";
    if (m.injective())
        return "injective";
    return "neither";
}

json to_json(const CompareReport& r)
{
    json maps = json::array();
    for (const auto& m : r.maps) {
        json e = {{"dim", m.dim},
                  {"cube_betti", m.cube_betti},
                  {"cube_betti_known", m.cube_betti_known},
                  {"path_betti", m.path_betti},
                  {"rank", m.rank},
                  {"surjective", m.surjective()},
                  {"injective", m.injective()},
                  {"verdict", verdict(m)}};
        if (m.matrix) {
            json rows = json::array();
            for (const auto& row : *m.matrix) {
                json jr = json::array();
                for (const auto& q : row)
                    jr.push_back(format_rational(q));
                rows.push_back(jr);
            }
            e["matrix"] = rows;
        } else {
            e["matrix"] = nullptr;
        }
        maps.push_back(e);
    }
    return {{"graph", r.graph}, {"max_dim", r.max_dim}, {"maps", maps}, {"wall_seconds", r.wall_seconds}};
}

void write_table(std::ostream& out, const CompareReport& r)
{
    out << r.graph << ": psi_* from cubical to path homology\n";
    out << std::left << std::setw(5) << "dim" << std::setw(12) << "cube betti" << std::setw(12) << "path betti"
        << std::setw(6) << "rank" << "verdict\n";
    for (const auto& m : r.maps)
        out << std::setw(5) << m.dim << std::setw(12)
            << (m.cube_betti_known ? std::to_string(m.cube_betti) : std::string("?")) << std::setw(12)
            << m.path_betti << std::setw(6) << m.rank << verdict(m) << "\n";
    out << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
    out.copyfmt(std::ios(nullptr));
}

} // namespace homlab
