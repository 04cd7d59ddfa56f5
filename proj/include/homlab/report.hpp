#pragma once

#include "homlab/complex.hpp"
#include "homlab/homotopy.hpp"
#include "homlab/psi.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace homlab {

enum class Theory { cube, path, both };

std::string theory_name(Theory t);
// Throws ParseError.
Theory parse_theory(const std::string& text);

// One fold per entry, in input-graph labels: `removed` is sent to `target`.
struct FoldRecord {
    Vertex removed = 0;
    Vertex target = 0;
    friend bool operator==(const FoldRecord&, const FoldRecord&) = default;
};

struct ReductionSummary {
    std::size_t original_vertices = 0;
    std::size_t core_vertices = 0;
    std::vector<FoldRecord> folds;
    // input label of each core vertex
    std::vector<Vertex> core_labels;
    friend bool operator==(const ReductionSummary&, const ReductionSummary&) = default;
};

ReductionSummary summarize(const Graph& g, const Dismantling& d);

struct RunReport {
    std::string graph;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    Theory theory = Theory::both;
    std::string coefficients = "z";
    unsigned max_dim = 0;
    std::vector<DimensionReport> cube;
    std::vector<DimensionReport> path;
    double wall_seconds = 0;
    std::optional<ReductionSummary> reduction;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Throws ContractViolation unless betti = generators - boundary_rank - next_rank
// in every reported dimension.
void check_report(const RunReport& r);

nlohmann::json to_json(const ReductionSummary& s);
ReductionSummary reduction_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DimensionReport& d);
DimensionReport dimension_from_json(const nlohmann::json& j);
// parse(emit(r)) == r. Parsing throws ParseError on a malformed document.
nlohmann::json to_json(const RunReport& r);
RunReport run_report_from_json(const nlohmann::json& j);

void write_table(std::ostream& out, const RunReport& r);

// "iso", "surjective", "injective" or "neither". Injectivity is never
// claimed when the cubical Betti number is unknown.
std::string verdict(const InducedMap& m);

struct CompareReport {
    std::string graph;
    unsigned max_dim = 0;
    std::vector<InducedMap> maps;
    double wall_seconds = 0;
};

nlohmann::json to_json(const CompareReport& r);
void write_table(std::ostream& out, const CompareReport& r);

} // namespace homlab
