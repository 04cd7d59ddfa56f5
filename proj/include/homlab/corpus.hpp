#pragma once

#include "homlab/graph.hpp"

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace homlab {

enum class Tier { fast, extended };

// Throws ParseError.
Tier parse_tier(const std::string& text);

// Path of the checked-in expected-value file.
std::string default_corpus_path();

struct CorpusCase {
    std::string id;
    Tier tier = Tier::fast;
    // "published", "oracle" or "trivial": where the expected value comes from
    std::string basis;
    // generator spec string or inline graph object
    nlohmann::json graph;
    std::string check;
    nlohmann::json params;
    nlohmann::json expected;
};

// Throws ParseError on a malformed file or an unknown check.
std::vector<CorpusCase> load_corpus(const std::string& path);
std::vector<CorpusCase> parse_corpus(const nlohmann::json& j);

Graph corpus_graph(const CorpusCase& c);

struct CaseResult {
    std::string id;
    bool passed = false;
    nlohmann::json actual;
    // set when the computation threw
    std::string error;
    double seconds = 0;
};

// Runs one case; never throws for computational failures, which are
// recorded as a failed result.
CaseResult run_case(const CorpusCase& c, unsigned jobs = 1);

// Runs every case of the tier (the extended tier includes the fast cases).
std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& cases, Tier tier, unsigned jobs = 1,
                                   const std::function<void(const CorpusCase&, const CaseResult&)>& progress = {});

} // namespace homlab
