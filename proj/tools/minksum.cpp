// minksum -- exact analysis of Minkowski sums of standard simplices.
//
// Subcommands:
//   analyze     dimension, vertices, skeleton, degree histogram, f-vector
//   master      the master polytope P(k): vertex table with degree row
//   verify      the verification suite (all closed-form counts and bounds)
//   formulas    closed-form calculators vs brute force, one PASS/FAIL per row
//   export-dot  1-skeleton in DOT format

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "minksum/exactlp.hpp"
#include "minksum/formulas.hpp"
#include "minksum/json_io.hpp"
#include "minksum/master.hpp"
#include "minksum/report.hpp"
#include "minksum/repfn.hpp"
#include "minksum/skeleton.hpp"
#include "minksum/verify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("MINKSUM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed MINKSUM_BUDGET\n";
    }
    return 100'000'000;
}

minksum::EdgeCertifier parse_certifier(const std::string& name) {
    if (name == "lp") return minksum::EdgeCertifier::Lp;
    if (name == "tight") return minksum::EdgeCertifier::TightSets;
    throw minksum::DomainError("unknown certifier: " + name);
}

int cmd_analyze(const std::string& family_file, bool vertex_list,
                const minksum::AnalyzeOptions& opts) {
    const minksum::SimplexFamily fam = minksum::family_from_file(family_file);
    if (vertex_list) {
        minksum::EnumerationOptions eo;
        eo.budget = opts.repfn_budget;
        eo.workers = opts.workers;
        std::cout << minksum::vertex_list_json(fam, minksum::vertices(fam, eo)).dump(2)
                  << "\n";
        return 0;
    }
    const minksum::AnalysisReport report = minksum::analyze(fam, opts);
    std::cout << minksum::report_to_json(report).dump(2) << "\n";
    if (!report.skipped_stages.empty()) {
        std::cerr << "budget exceeded; skipped stage(s):";
        for (const auto& stage : report.skipped_stages) std::cerr << " " << stage;
        std::cerr << "\n";
        return kExitBudget;
    }
    return report.all_checks_pass() ? 0 : 1;
}

// Groups master vertices by the set of singleton-signature coordinates they
// touch, matching the published block layout of the P(3) table.
struct MasterGroup {
    std::vector<int> singleton_coords;
    std::vector<int> columns;  // indices into the vertex list
};

std::vector<MasterGroup> group_master_columns(const minksum::MasterFamily& master,
                                              const std::vector<minksum::LatticePoint>& verts) {
    std::vector<int> singleton_coords;
    for (int i = 1; i <= master.family().ground_size(); ++i)
        if (master.signature_of(i).size() == 1) singleton_coords.push_back(i);

    std::map<std::vector<int>, std::vector<int>> groups;
    for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi) {
        std::vector<int> used;
        for (int coord : singleton_coords)
            if (verts[static_cast<std::size_t>(vi)][static_cast<std::size_t>(coord - 1)] > 0)
                used.push_back(coord);
        groups[used].push_back(vi);
    }
    std::vector<MasterGroup> out;
    for (auto& [used, columns] : groups) out.push_back({used, std::move(columns)});
    std::sort(out.begin(), out.end(), [](const MasterGroup& a, const MasterGroup& b) {
        if (a.singleton_coords.size() != b.singleton_coords.size())
            return a.singleton_coords.size() < b.singleton_coords.size();
        return a.singleton_coords < b.singleton_coords;
    });
    return out;
}

int cmd_master(int k, const std::string& labels, const std::string& format,
               bool skip_degrees, const minksum::SkeletonOptions& skel_opts) {
    minksum::MasterLabeling labeling;
    if (labels == "canonical")
        labeling = minksum::MasterLabeling::Canonical;
    else if (labels == "paper3")
        labeling = minksum::MasterLabeling::Paper3;
    else
        throw minksum::DomainError("unknown labeling: " + labels);

    const minksum::MasterFamily master = minksum::build_master(k, labeling);
    std::vector<minksum::LatticePoint> verts;
    std::vector<int> degrees;
    if (skip_degrees) {
        verts = minksum::vertices(master.family(), skel_opts.enumeration);
    } else {
        const minksum::SkeletonGraph skel = minksum::build_skeleton(master.family(), skel_opts);
        verts = skel.vertices();
        degrees.reserve(verts.size());
        for (int v = 0; v < static_cast<int>(verts.size()); ++v)
            degrees.push_back(skel.degree(v));
    }
    const std::vector<MasterGroup> groups = group_master_columns(master, verts);

    if (format == "json") {
        minksum::Json j;
        j["k"] = k;
        j["labels"] = labels;
        j["family"] = minksum::family_to_json(master.family());
        j["vertex_count"] = verts.size();
        j["groups"] = minksum::Json::array();
        for (const auto& group : groups) {
            minksum::Json jg;
            jg["singleton_coordinates"] = group.singleton_coords;
            jg["columns"] = minksum::Json::array();
            jg["degrees"] = minksum::Json::array();
            for (int vi : group.columns) {
                jg["columns"].push_back(verts[static_cast<std::size_t>(vi)]);
                if (!degrees.empty()) jg["degrees"].push_back(degrees[static_cast<std::size_t>(vi)]);
            }
            j["groups"].push_back(jg);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (format != "text") throw minksum::DomainError("unknown format: " + format);

    const int r = master.family().ground_size();
    std::cout << "P(" << k << "), " << labels << " labeling: " << verts.size()
              << " vertices\n";
    for (const auto& group : groups) {
        std::cout << "\n";
        for (int row = 1; row <= r; ++row) {
            for (int vi : group.columns)
                std::cout << std::setw(3)
                          << verts[static_cast<std::size_t>(vi)][static_cast<std::size_t>(row - 1)];
            std::cout << "\n";
        }
        if (!degrees.empty()) {
            for (std::size_t c = 0; c < group.columns.size(); ++c) std::cout << "---";
            std::cout << "\n";
            for (int vi : group.columns)
                std::cout << std::setw(3) << degrees[static_cast<std::size_t>(vi)];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, const minksum::verify::Options& opts) {
    const std::vector<minksum::verify::CheckResult> results =
        minksum::verify::run_suite(suite, opts);
    bool all_pass = true;
    for (const auto& res : results) {
        std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name << "  (" << res.detail
                  << ")\n";
        std::cerr << std::fixed << std::setprecision(2) << res.name << ": " << res.seconds
                  << "s\n";
        all_pass = all_pass && res.pass;
    }
    std::cout << (all_pass ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_formulas(int max_n, int workers) {
    bool all_pass = true;
    const auto row = [&](const std::string& label, bool pass) {
        std::cout << (pass ? "PASS" : "FAIL") << "  " << label << "\n";
        all_pass = all_pass && pass;
    };

    for (int n = 2; n <= max_n; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            const minksum::MantelBruteResult m = minksum::verify_mantel_brute(n, k);
            std::ostringstream label;
            label << "e_" << k << "(" << n << ") = k(n-k) = " << m.formula
                  << "; brute max = " << m.brute_max << ", maximizers = " << m.maximizer_count
                  << (m.maximizers_complete_bipartite ? " (all K_{k,n-k})" : " (NOT bipartite)");
            row(label.str(), m.pass());
        }
    }

    for (int r = 2; r <= 7; ++r) {
        for (int k = 1; 2 * k <= r; ++k) {
            minksum::SkeletonOptions so;
            so.workers = workers;
            const minksum::SkeletonGraph skel =
                minksum::build_skeleton(minksum::lower_bound_family(k, r), so);
            int max_degree = 0;
            for (int v = 0; v < static_cast<int>(skel.vertex_count()); ++v)
                max_degree = std::max(max_degree, skel.degree(v));
            std::ostringstream label;
            label << "d_" << k << "(" << r << ") = k(r-k) = " << minksum::d_k_max(k, r)
                  << "; lower-bound family max degree = " << max_degree;
            row(label.str(), max_degree == minksum::d_k_max(k, r));
        }
    }

    {
        bool counts_ok = true;
        constexpr int r = 4;
        for (std::uint32_t f = 1; f < (1u << r); ++f) {
            for (std::uint32_t fp = f; fp < (1u << r); ++fp) {
                minksum::GroundSet sf, sfp;
                for (int b = 0; b < r; ++b) {
                    if (f & (1u << b)) sf.push_back(b + 1);
                    if (fp & (1u << b)) sfp.push_back(b + 1);
                }
                minksum::SkeletonOptions so;
                so.workers = workers;
                const minksum::SkeletonGraph skel =
                    minksum::build_skeleton(minksum::SimplexFamily(r, {sf, sfp}), so);
                const minksum::TwoSumStats stats =
                    minksum::TwoSumStats::from_sets(sf, sfp, r);
                counts_ok = counts_ok &&
                            static_cast<long long>(skel.vertex_count()) ==
                                minksum::two_sum_vertex_count(stats) &&
                            static_cast<long long>(skel.edge_count()) ==
                                minksum::two_sum_edge_count(stats) &&
                            minksum::two_sum_f_polynomial(sf, sfp).at(0) ==
                                minksum::two_sum_vertex_count(stats);
            }
        }
        row("two-sum vertex/edge/f-polynomial formulas vs skeletons, all pairs on [4]",
            counts_ok);
    }

    {
        const minksum::verify::CheckResult res =
            minksum::verify::run_check("average-degree", {});
        row("average degree bounds r-1 <= avg < 10/9 (r-1), scan r <= 40", res.pass);
    }

    std::cout << (all_pass ? "ALL FORMULA CHECKS PASSED" : "SOME FORMULA CHECKS FAILED")
              << "\n";
    return all_pass ? 0 : 1;
}

int cmd_export_dot(const std::string& family_file, const minksum::SkeletonOptions& opts) {
    const minksum::SimplexFamily fam = minksum::family_from_file(family_file);
    const minksum::SkeletonGraph skel = minksum::build_skeleton(fam, opts);
    std::cout << minksum::to_dot(skel);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure of Minkowski sums of standard simplices"};
    app.require_subcommand(1);

    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    std::uint64_t budget = default_budget();
    app.add_option("-j,--workers", workers, "Worker thread count");
    app.add_option("--budget", budget, "Rep-function enumeration budget");

    auto* analyze = app.add_subcommand("analyze", "Analyze a family JSON file");
    std::string analyze_file;
    std::size_t max_vertices = 1500;
    int max_partition_r = 8;
    std::string analyze_certifier = "lp";
    bool analyze_vertex_list = false;
    analyze->add_option("family", analyze_file, "Family JSON file")->required();
    analyze->add_flag("--vertex-list", analyze_vertex_list,
                      "Emit the sorted vertex list JSON instead of the report");
    analyze->add_option("--max-vertices", max_vertices, "Skeleton vertex budget");
    analyze->add_option("--max-partition-r", max_partition_r,
                        "Ground-size bound for the f-vector stage");
    analyze->add_option("--certifier", analyze_certifier, "Edge certifier: lp or tight");

    auto* master = app.add_subcommand("master", "Master polytope vertex table");
    int master_k = 3;
    std::string master_labels = "canonical";
    std::string master_format = "text";
    bool master_skip_degrees = false;
    std::size_t master_max_vertices = 1500;
    std::string master_certifier = "lp";
    master->add_option("--k", master_k, "Master polytope order")->required();
    master->add_option("--labels", master_labels, "Labeling: canonical or paper3");
    master->add_option("--format", master_format, "Output: text or json");
    master->add_flag("--skip-degrees", master_skip_degrees,
                     "Emit the vertex table without building the skeleton");
    master->add_option("--max-vertices", master_max_vertices, "Skeleton vertex budget");
    master->add_option("--certifier", master_certifier, "Edge certifier: lp or tight");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "paper";
    bool with_p4 = false, p4_full_lp = false;
    verify->add_option("suite", suite, "'paper' or a single check name");
    verify->add_flag("--p4", with_p4, "Include the long P(4) degree-support check");
    verify->add_flag("--p4-full-lp", p4_full_lp, "Certify every P(4) candidate by LP");

    auto* formulas = app.add_subcommand("formulas", "Formula-vs-brute-force table");
    int mantel_max_n = minksum::kMantelBruteMaxN;
    formulas->add_option("--max-n", mantel_max_n, "Largest graph order for brute force");

    auto* export_dot = app.add_subcommand("export-dot", "Write the 1-skeleton as DOT");
    std::string dot_file;
    std::size_t dot_max_vertices = 1500;
    std::string dot_certifier = "lp";
    export_dot->add_option("family", dot_file, "Family JSON file")->required();
    export_dot->add_option("--max-vertices", dot_max_vertices, "Skeleton vertex budget");
    export_dot->add_option("--certifier", dot_certifier, "Edge certifier: lp or tight");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            minksum::AnalyzeOptions opts;
            opts.repfn_budget = budget;
            opts.skeleton_vertex_budget = max_vertices;
            opts.partition_max_ground = max_partition_r;
            opts.workers = workers;
            opts.certifier = parse_certifier(analyze_certifier);
            return cmd_analyze(analyze_file, analyze_vertex_list, opts);
        }
        if (master->parsed()) {
            minksum::SkeletonOptions so;
            so.vertex_budget = master_max_vertices;
            so.workers = workers;
            so.certifier = parse_certifier(master_certifier);
            so.enumeration.budget = budget;
            so.enumeration.workers = workers;
            return cmd_master(master_k, master_labels, master_format, master_skip_degrees, so);
        }
        if (verify->parsed()) {
            minksum::verify::Options opts;
            opts.include_p4 = with_p4;
            opts.p4_full_lp = p4_full_lp;
            opts.workers = workers;
            opts.budget = budget;
            return cmd_verify(suite, opts);
        }
        if (formulas->parsed()) return cmd_formulas(mantel_max_n, workers);
        if (export_dot->parsed()) {
            minksum::SkeletonOptions so;
            so.vertex_budget = dot_max_vertices;
            so.workers = workers;
            so.certifier = parse_certifier(dot_certifier);
            so.enumeration.budget = budget;
            so.enumeration.workers = workers;
            return cmd_export_dot(dot_file, so);
        }
    } catch (const minksum::CapabilityError& e) {
        std::cerr << "budget exceeded in stage '" << e.stage << "': " << e.what() << "\n";
        return kExitBudget;
    } catch (const minksum::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const minksum::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
