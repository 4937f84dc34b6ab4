#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minksum/json_io.hpp"
#include "minksum/skeleton.hpp"

namespace minksum {

struct AnalyzeOptions {
    std::uint64_t repfn_budget = 100'000'000;
    std::size_t skeleton_vertex_budget = 1500;
    int partition_max_ground = 8;
    int workers = 1;
    EdgeCertifier certifier = EdgeCertifier::Lp;
};

/// Everything the `analyze` command reports about one family. Stages that hit
/// a budget are listed in `skipped_stages` instead of failing the run.
struct AnalysisReport {
    SimplexFamily family;
    int dimension = 0;
    std::uint64_t vertex_count = 0;
    std::optional<std::uint64_t> edge_count;
    std::optional<std::map<int, std::uint64_t>> degree_histogram;
    std::optional<int> max_degree;
    long long degree_bound = 0;  // floor(r^2 / 4)
    std::optional<FPolynomial> f_polynomial;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> skipped_stages;

    bool all_checks_pass() const;
};

AnalysisReport analyze(const SimplexFamily& fam, const AnalyzeOptions& opts = {});

Json report_to_json(const AnalysisReport& report);

}  // namespace minksum
