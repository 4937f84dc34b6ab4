#include <doctest.h>

#include "minksum/json_io.hpp"
#include "minksum/report.hpp"
#include "minksum/repfn.hpp"

using namespace minksum;

TEST_SUITE_BEGIN("report");

TEST_CASE("family json round trip") {
    const SimplexFamily fam = family_from_string(R"({"r": 4, "sets": [[1,2,3],[1,2,4]]})");
    CHECK(fam == SimplexFamily(4, {{1, 2, 3}, {1, 2, 4}}));
    CHECK(family_to_json(fam).dump() == R"({"r":4,"sets":[[1,2,3],[1,2,4]]})");

    CHECK_THROWS_AS(family_from_string("not json"), DomainError);
    CHECK_THROWS_AS(family_from_string(R"({"r": 4})"), DomainError);
    CHECK_THROWS_AS(family_from_string(R"({"r": 3, "sets": [[0]]})"), DomainError);
    CHECK_THROWS_AS(family_from_string(R"({"r": 3, "sets": [[2,1]]})"), DomainError);
    CHECK_THROWS_AS(family_from_string(R"({"r": 3, "sets": []})"), DomainError);
    CHECK_THROWS_AS(family_from_file("/nonexistent/family.json"), DomainError);
}

TEST_CASE("vertex list json") {
    const SimplexFamily rhombus(3, {{1, 2}, {2, 3}});
    const Json j = vertex_list_json(rhombus, vertices(rhombus));
    CHECK(j["vertex_count"] == 4);
    CHECK(j["vertices"][0] == Json::array({0, 1, 1}));
    CHECK(j["vertices"][3] == Json::array({1, 1, 0}));
}

TEST_CASE("analysis report on the worked example") {
    const SimplexFamily fam(4, {{1, 2, 3}, {1, 2, 4}});
    const AnalysisReport report = analyze(fam);
    CHECK(report.dimension == 3);
    CHECK(report.vertex_count == 7);
    REQUIRE(report.edge_count.has_value());
    CHECK(*report.edge_count == 11);
    REQUIRE(report.f_polynomial.has_value());
    CHECK(*report.f_polynomial == FPolynomial{{7, 11, 6, 1}});
    CHECK(report.skipped_stages.empty());
    CHECK(report.all_checks_pass());

    const Json j = report_to_json(report);
    CHECK(j["vertex_count"] == 7);
    CHECK(j["checks"]["handshake"] == "PASS");
    CHECK(j["f_vector"] == Json::array({7, 11, 6, 1}));
}

TEST_CASE("analysis reports are deterministic") {
    const SimplexFamily fam(5, {{1, 2, 3}, {2, 4, 5}, {1, 5}});
    AnalyzeOptions opts;
    const std::string once = report_to_json(analyze(fam, opts)).dump();
    opts.workers = 4;
    const std::string again = report_to_json(analyze(fam, opts)).dump();
    CHECK(once == again);
}

TEST_CASE("budgets skip stages instead of failing") {
    const SimplexFamily fam(4, {{1, 2, 3}, {1, 2, 4}});
    AnalyzeOptions opts;
    opts.skeleton_vertex_budget = 2;
    const AnalysisReport report = analyze(fam, opts);
    CHECK_FALSE(report.edge_count.has_value());
    CHECK(report.vertex_count == 7);
    REQUIRE(report.skipped_stages.size() == 1);
    CHECK(report.skipped_stages[0] == "skeleton");

    AnalyzeOptions tight;
    tight.partition_max_ground = 3;
    const AnalysisReport no_fvec = analyze(fam, tight);
    CHECK_FALSE(no_fvec.f_polynomial.has_value());
    REQUIRE(no_fvec.skipped_stages.size() == 1);
    CHECK(no_fvec.skipped_stages[0] == "f-vector");
}

TEST_SUITE_END();
