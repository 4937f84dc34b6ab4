#include "minksum/report.hpp"

#include "minksum/formulas.hpp"
#include "minksum/repfn.hpp"

namespace minksum {

bool AnalysisReport::all_checks_pass() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

AnalysisReport analyze(const SimplexFamily& fam, const AnalyzeOptions& opts) {
    AnalysisReport report{fam};
    report.dimension = dimension(fam);
    report.degree_bound = d_max(fam.ground_size());

    EnumerationOptions enum_opts;
    enum_opts.budget = opts.repfn_budget;
    enum_opts.workers = opts.workers;

    bool have_vertices = false;
    try {
        report.vertex_count = vertex_count(fam, enum_opts);
        have_vertices = true;
    } catch (const CapabilityError& e) {
        report.skipped_stages.push_back(e.stage);
    }

    std::optional<SkeletonGraph> skeleton;
    if (have_vertices) {
        try {
            SkeletonOptions skel_opts;
            skel_opts.vertex_budget = opts.skeleton_vertex_budget;
            skel_opts.workers = opts.workers;
            skel_opts.certifier = opts.certifier;
            skel_opts.enumeration = enum_opts;
            skeleton = build_skeleton(fam, skel_opts);
        } catch (const CapabilityError& e) {
            report.skipped_stages.push_back(e.stage);
        }
    }

    if (skeleton) {
        report.edge_count = skeleton->edge_count();
        report.degree_histogram = degree_histogram(*skeleton);
        int max_deg = 0;
        for (int v = 0; v < static_cast<int>(skeleton->vertex_count()); ++v)
            max_deg = std::max(max_deg, skeleton->degree(v));
        report.max_degree = max_deg;
    }

    if (have_vertices) {
        try {
            report.f_polynomial = f_vector(fam, opts.partition_max_ground, enum_opts);
        } catch (const CapabilityError& e) {
            report.skipped_stages.push_back(e.stage);
        }
    }

    if (skeleton) {
        std::uint64_t degree_sum = 0;
        for (const auto& [deg, count] : *report.degree_histogram)
            degree_sum += static_cast<std::uint64_t>(deg) * count;
        report.checks.emplace_back("handshake", degree_sum == 2 * *report.edge_count);
        report.checks.emplace_back("max_degree_within_bound",
                                   *report.max_degree <= report.degree_bound);
    }
    if (report.f_polynomial) {
        report.checks.emplace_back(
            "f0_equals_vertex_count",
            report.f_polynomial->at(0) == static_cast<long long>(report.vertex_count));
        if (report.edge_count)
            report.checks.emplace_back(
                "f1_equals_edge_count",
                report.f_polynomial->at(1) == static_cast<long long>(*report.edge_count));
    }
    return report;
}

Json report_to_json(const AnalysisReport& report) {
    Json j;
    j["family"] = family_to_json(report.family);
    j["dimension"] = report.dimension;
    j["vertex_count"] = report.vertex_count;
    if (report.edge_count) j["edge_count"] = *report.edge_count;
    if (report.degree_histogram) {
        Json hist = Json::object();
        for (const auto& [deg, count] : *report.degree_histogram)
            hist[std::to_string(deg)] = count;
        j["degree_histogram"] = hist;
    }
    if (report.max_degree) j["max_degree"] = *report.max_degree;
    j["degree_bound"] = report.degree_bound;
    if (report.f_polynomial) j["f_vector"] = report.f_polynomial->coeff;
    Json checks = Json::object();
    for (const auto& [name, ok] : report.checks) checks[name] = ok ? "PASS" : "FAIL";
    j["checks"] = checks;
    j["skipped_stages"] = report.skipped_stages;
    return j;
}

}  // namespace minksum
